#include "mzvlab/fmzv.hpp"

#include <stdexcept>

#include "mzvlab/word.hpp"

namespace mzvlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (a % n == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

FmzvContext::FmzvContext(u64 p) : p_(p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FmzvContext: modulus must be prime");
    // Batch inversion: one pass of products, one inversion, one backward pass.
    inv_.assign(p_, 0);
    std::vector<u64> pref(p_, 1);
    for (u64 m = 1; m < p_; ++m) pref[m] = mulmod(pref[m - 1], m, p_);
    u64 inv_all = powmod(pref[p_ - 1], p_ - 2, p_);
    for (u64 m = p_ - 1; m >= 1; --m) {
        inv_[m] = mulmod(inv_all, pref[m - 1], p_);
        inv_all = mulmod(inv_all, m, p_);
    }
}

u64 FmzvContext::eval(const Index& k) {
    if (k.empty()) throw std::invalid_argument("FmzvContext::eval: empty index");
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;

    // Depth-wise prefix accumulation: cur[m] = sum over tuples ending at m.
    const auto& parts = k.parts();
    std::vector<u64> cur(p_, 0);
    for (std::size_t level = 0; level < parts.size(); ++level) {
        u64 acc = 0;
        std::vector<u64> nxt(p_, 0);
        for (u64 m = 1; m < p_; ++m) {
            if (level == 0)
                acc = 1;
            else
                acc = (acc + cur[m - 1]) % p_;
            if (acc) nxt[m] = mulmod(acc, powmod(inv_[m], static_cast<u64>(parts[level]), p_), p_);
        }
        cur = std::move(nxt);
    }
    u64 total = 0;
    for (u64 m = 1; m < p_; ++m) total = (total + cur[m]) % p_;
    memo_.emplace(k, total);
    return total;
}

ModResidue fmzv_eval(const Index& k, u64 p) {
    FmzvContext ctx(p);
    return ModResidue{ctx.eval(k), p};
}

namespace {

u64 lift_sum(FmzvContext& ctx, const Index& k, int m, bool hoffman_side) {
    u64 p = ctx.prime();
    u64 total = 0;
    if (hoffman_side) {
        Index kv = hoffman_dual(k);
        for (const auto& e : weak_compositions(m, kv.depth()))
            total = (total + ctx.eval(hoffman_dual(oplus(kv, e)))) % p;
    } else {
        for (const auto& e : weak_compositions(m, k.depth()))
            total = (total + ctx.eval(oplus(k, e))) % p;
    }
    return total;
}

}  // namespace

bool check_ohno_type(const Index& k, int m, FmzvContext& ctx) {
    if (k.empty()) throw std::invalid_argument("check_ohno_type: empty index");
    if (m < 0) throw std::invalid_argument("check_ohno_type: m must be >= 0");
    return lift_sum(ctx, k, m, false) == lift_sum(ctx, k, m, true);
}

bool check_ohno_type(const Index& k, int m, u64 p) {
    FmzvContext ctx(p);
    return check_ohno_type(k, m, ctx);
}

bool check_double_ohno_fmzv(const Index& k, int m1, int m2, FmzvContext& ctx) {
    if (!is_duplex_word(word_of_index(k)))
        throw std::invalid_argument("check_double_ohno_fmzv: (" + k.str() + ") is not in the duplex family");
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("check_double_ohno_fmzv: lifts must be >= 0");
    u64 p = ctx.prime();
    Index base = minus_last(k);
    Index based = hoffman_dual(base);
    u64 lhs = 0, rhs = 0;
    for (const auto& e1 : weak_compositions(m1, base.depth())) {
        Index lifted = oplus(base, e1);
        for (const auto& e2 : weak_compositions(m2, lifted.depth()))
            lhs = (lhs + ctx.eval(oplus(lifted, e2))) % p;
    }
    for (const auto& e1 : weak_compositions(m1, based.depth())) {
        Index lifted = oplus(based, e1);
        for (const auto& e2 : weak_compositions(m2, lifted.depth()))
            rhs = (rhs + ctx.eval(hoffman_dual(oplus(lifted, e2)))) % p;
    }
    return lhs == rhs;
}

bool check_double_ohno_fmzv(const Index& k, int m1, int m2, u64 p) {
    FmzvContext ctx(p);
    return check_double_ohno_fmzv(k, m1, m2, ctx);
}

}  // namespace mzvlab
