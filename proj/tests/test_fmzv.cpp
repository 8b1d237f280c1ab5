#include "doctest.h"

#include <random>

#include "mzvlab/fmzv.hpp"
#include "mzvlab/relations.hpp"

using namespace mzvlab;

namespace {

// Independent oracle: plain nested loops over 1 <= m_1 < ... < m_r < p.
std::uint64_t fmzv_naive(const Index& k, std::uint64_t p) {
    const auto& parts = k.parts();
    std::uint64_t total = 0;
    std::vector<std::uint64_t> m(parts.size());
    auto inv = [&](std::uint64_t a) {
        std::uint64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    auto rec = [&](auto&& self, std::size_t level, std::uint64_t lo, std::uint64_t acc) -> void {
        if (level == parts.size()) {
            total = (total + acc) % p;
            return;
        }
        for (std::uint64_t v = lo; v < p; ++v) {
            std::uint64_t term = acc;
            std::uint64_t iv = inv(v);
            for (int e = 0; e < parts[level]; ++e) term = term * iv % p;
            self(self, level + 1, v + 1, term);
        }
    };
    rec(rec, 0, 1, 1);
    return total;
}

}  // namespace

TEST_CASE("prime helpers") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(499));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(491 * 499));
    auto ps = primes_in(2, 30);
    CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("fmzv: pinned small values") {
    CHECK(fmzv_eval(Index{2}, 5).value == 0);   // 1 + 4 + 4 + 1 mod 5
    CHECK(fmzv_eval(Index{1, 2}, 5).value == 1);
    CHECK_THROWS_AS(fmzv_eval(Index{2}, 6), std::invalid_argument);
    // empty summation range: depth >= p
    CHECK(fmzv_eval(Index{1, 1, 1}, 3).value == 0);
}

TEST_CASE("fmzv: prefix accumulation against the naive oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dd(1, 3), dp(1, 4);
    std::vector<std::uint64_t> primes{5, 7, 11, 13, 19, 37, 97};
    for (int trial = 0; trial < 40; ++trial) {
        int d = dd(rng);
        std::vector<int> parts;
        for (int i = 0; i < d; ++i) parts.push_back(dp(rng));
        Index k(parts);
        std::uint64_t p = primes[static_cast<std::size_t>(trial) % primes.size()];
        FmzvContext ctx(p);
        CHECK(ctx.eval(k) == fmzv_naive(k, p));
    }
}

TEST_CASE("harmonic vanishing: depth-one sums vanish for p >= k+2") {
    for (int k = 1; k <= 6; ++k)
        for (std::uint64_t p : primes_in(static_cast<std::uint64_t>(k) + 2, 500)) {
            FmzvContext ctx(p);
            CHECK(ctx.eval(Index{k}) == 0);
        }
}

TEST_CASE("single-lift duality: pinned cases") {
    for (std::uint64_t p : primes_in(5, 100)) {
        FmzvContext ctx(p);
        // k=(1), m=1: both sides vanish
        CHECK(ctx.eval(Index{2}) == 0);
        CHECK(check_ohno_type(Index{1}, 1, ctx));
        // k=(2), m=1: z(3) against z(1,2)+z(2,1)
        std::uint64_t lhs = ctx.eval(Index{3});
        std::uint64_t rhs = (ctx.eval(Index{1, 2}) + ctx.eval(Index{2, 1})) % p;
        CHECK(lhs == rhs);
        CHECK(check_ohno_type(Index{2}, 1, ctx));
    }
    CHECK(check_ohno_type(Index{1, 1}, 0, 11));  // m=0 is the bare involution
}

TEST_CASE("single-lift duality holds across small weights") {
    for (std::uint64_t p : primes_in(11, 120)) {
        FmzvContext ctx(p);
        for (int n = 1; n <= 5; ++n)
            for (const auto& k : enumerate_compositions(n))
                for (int m = 0; m <= 2; ++m) {
                    if (p <= static_cast<std::uint64_t>(n + m + 1)) continue;
                    CHECK(check_ohno_type(k, m, ctx));
                }
    }
}

TEST_CASE("double-lift duality on the duplex family (small ranges)") {
    CHECK(check_double_ohno_fmzv(Index{2}, 0, 0, 11));
    for (std::uint64_t p : primes_in(11, 100)) {
        FmzvContext ctx(p);
        for (int w = 2; w <= 6; w += 2)
            for (const auto& k : enumerate_duplex_indices(w))
                for (int m1 = 0; m1 <= 1; ++m1)
                    for (int m2 = 0; m2 <= 1; ++m2) CHECK(check_double_ohno_fmzv(k, m1, m2, ctx));
    }
    CHECK_THROWS_AS(check_double_ohno_fmzv(Index{3}, 0, 0, 11), std::invalid_argument);
}

TEST_CASE("index bookkeeping bridge between the two dualities") {
    // multiset equality: { ((l^dag + e)^dag)^- } = { ((l^- )^v + e')^v } over |e|=|e'|=m
    for (int n = 2; n <= 8; ++n) {
        for (const auto& l : enumerate_admissible(n)) {
            Index ld = dual(l);
            Index lm = minus_last(l);
            Index lmv = hoffman_dual(lm);
            for (int m = 0; m <= 3; ++m) {
                std::vector<Index> lhs, rhs;
                for (const auto& e : weak_compositions(m, ld.depth()))
                    lhs.push_back(minus_last(dual(oplus(ld, e))));
                for (const auto& e : weak_compositions(m, lmv.depth()))
                    rhs.push_back(hoffman_dual(oplus(lmv, e)));
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                CHECK(lhs == rhs);
            }
        }
    }
}
