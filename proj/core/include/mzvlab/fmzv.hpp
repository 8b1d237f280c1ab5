#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mzvlab/index.hpp"

namespace mzvlab {

// One prime component of a finite multiple zeta value.
struct ModResidue {
    std::uint64_t value = 0;  // in [0, prime)
    std::uint64_t prime = 0;
};

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// Per-prime evaluation context: inverse table (batch inversion) plus a memo
// of already-evaluated indices. Independent instances are safe in parallel.
class FmzvContext {
public:
    explicit FmzvContext(std::uint64_t p);  // rejects composite p

    std::uint64_t prime() const { return p_; }

    // Truncated sum over 1 <= m_1 < ... < m_r < p of prod inv(m_i)^{k_i}.
    // Empty range (depth >= p) yields 0.
    std::uint64_t eval(const Index& k);

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> inv_;  // inv_[m] = m^-1 mod p, m in 1..p-1
    std::map<Index, std::uint64_t> memo_;
};

// Truncated harmonic sum mod p; rejects composite p and warns (returns 0)
// when p <= depth(k), where the sum is empty.
ModResidue fmzv_eval(const Index& k, std::uint64_t p);

// Single-lift duality: sum over |e|=m of z(k+e) versus the Hoffman-dual
// side sum of z((k^v + e)^v). k may be any nonempty index.
bool check_ohno_type(const Index& k, int m, FmzvContext& ctx);
bool check_ohno_type(const Index& k, int m, std::uint64_t p);

// Double-lift version for duplex-family k (compares the lowered index k^-
// against its Hoffman-dual side, with two independent lifts).
bool check_double_ohno_fmzv(const Index& k, int m1, int m2, FmzvContext& ctx);
bool check_double_ohno_fmzv(const Index& k, int m1, int m2, std::uint64_t p);

}  // namespace mzvlab
