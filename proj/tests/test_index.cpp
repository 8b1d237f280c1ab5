#include "doctest.h"

#include <random>

#include "mzvlab/index.hpp"

using namespace mzvlab;

TEST_CASE("index basics and text form") {
    Index k{1, 3, 2};
    CHECK(k.weight() == 6);
    CHECK(k.depth() == 3);
    CHECK(k.admissible());
    CHECK(k.str() == "1,3,2");
    CHECK(Index::parse("1,3,2") == k);
    CHECK(Index::parse("") == Index());
    CHECK(!Index{2, 1}.admissible());
    CHECK(!Index().admissible());
    CHECK_THROWS_AS(Index({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Index::parse("1,,2"), std::invalid_argument);
}

TEST_CASE("dual: pinned values") {
    CHECK(dual(Index{2}) == Index{2});
    CHECK(dual(Index{3}) == Index{1, 2});
    CHECK(dual(Index{1, 3, 2}) == Index{2, 1, 3});
    CHECK(dual(Index{4, 2}) == Index{2, 1, 1, 2});
    CHECK_THROWS_AS(dual(Index{1}), std::invalid_argument);
    CHECK_THROWS_AS(dual(Index()), std::invalid_argument);
}

TEST_CASE("dual: involution, weight and depth bookkeeping up to weight 12") {
    for (int n = 2; n <= 12; ++n) {
        for (const auto& k : enumerate_admissible(n)) {
            Index d = dual(k);
            CHECK(d.admissible());
            CHECK(d.weight() == n);
            CHECK(k.depth() + d.depth() == n);
            CHECK(dual(d) == k);
        }
    }
}

TEST_CASE("hoffman dual: pinned values and involution") {
    CHECK(hoffman_dual(Index{1}) == Index{1});
    CHECK(hoffman_dual(Index{2, 1}) == Index{1, 2});
    CHECK(hoffman_dual(Index{1, 2}) == Index{2, 1});
    CHECK_THROWS_AS(hoffman_dual(Index()), std::invalid_argument);
    for (int n = 1; n <= 12; ++n) {
        for (const auto& k : enumerate_compositions(n)) {
            Index h = hoffman_dual(k);
            CHECK(h.weight() == n);
            CHECK(k.depth() + h.depth() == n + 1);
            CHECK(hoffman_dual(h) == k);
        }
    }
}

TEST_CASE("minus_last and oplus") {
    CHECK(minus_last(Index{2}) == Index{1});
    CHECK(minus_last(Index{1, 3, 2}) == Index{1, 3, 1});
    CHECK(minus_last(Index{1, 1, 2}) == Index{1, 1, 1});
    CHECK_THROWS_AS(minus_last(Index{2, 1}), std::invalid_argument);

    CHECK(oplus(Index{1, 3, 2}, {0, 1, 0}) == Index{1, 4, 2});
    CHECK(oplus(Index{1, 3, 2}, {0, 0, 0}) == Index{1, 3, 2});
    CHECK(oplus(Index{2}, {3}) == Index{5});
    CHECK_THROWS_AS(oplus(Index{2}, {1, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_admissible: counts, order, membership") {
    CHECK(enumerate_admissible(2) == std::vector<Index>{Index{2}});
    CHECK(enumerate_admissible(3) == std::vector<Index>{Index{3}, Index{1, 2}});
    // The basis order is part of the contract: depth-major, then lexicographic.
    CHECK(enumerate_admissible(4) ==
          std::vector<Index>{Index{4}, Index{1, 3}, Index{2, 2}, Index{1, 1, 2}});
    for (int n = 2; n <= 16; ++n) {
        auto basis = enumerate_admissible(n);
        CHECK(basis.size() == (1u << (n - 2)));
        CHECK(std::is_sorted(basis.begin(), basis.end()));
        for (const auto& k : basis) {
            CHECK(k.weight() == n);
            CHECK(k.admissible());
        }
    }
    CHECK_THROWS_AS(enumerate_admissible(1), std::invalid_argument);
}

TEST_CASE("index shuffle: pinned values") {
    // (a) sh (b,c) = (a,b,c)+(b,a,c)+(b,c,a) with a=1, b=2, c=3
    IndexSum s = index_shuffle(Index{1}, Index{2, 3});
    IndexSum expect;
    expect.add(Index{1, 2, 3}, 1);
    expect.add(Index{2, 1, 3}, 1);
    expect.add(Index{2, 3, 1}, 1);
    CHECK(s == expect);

    CHECK(index_shuffle(Index{2}, Index()) == IndexSum(Index{2}));

    IndexSum t = index_shuffle(Index{2}, Index{1, 2});
    IndexSum texp;
    texp.add(Index{2, 1, 2}, 1);
    texp.add(Index{1, 2, 2}, 2);
    CHECK(t == texp);
}

TEST_CASE("index shuffle: term count, commutativity, associativity") {
    std::mt19937 rng(20240811);
    auto random_index = [&](int maxdepth) {
        std::uniform_int_distribution<int> dd(0, maxdepth);
        std::uniform_int_distribution<int> dp(1, 3);
        int d = dd(rng);
        std::vector<int> parts;
        for (int i = 0; i < d; ++i) parts.push_back(dp(rng));
        return Index(parts);
    };
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Index a = random_index(3), b = random_index(3), c = random_index(3);
        IndexSum ab = index_shuffle(a, b);
        CHECK(ab == index_shuffle(b, a));
        Rational total(0);
        for (const auto& [k, coef] : ab) total += coef;
        CHECK(total == Rational(binom(a.depth() + b.depth(), a.depth())));
        // associativity via linear extension over the left factor
        IndexSum left, right;
        for (const auto& [k, coef] : ab) left += coef * index_shuffle(k, c);
        for (const auto& [k, coef] : index_shuffle(b, c)) right += coef * index_shuffle(a, k);
        CHECK(left == right);
    }
}

TEST_CASE("harmonic product, single entry") {
    IndexSum s = harmonic_single(2, Index{3});
    IndexSum expect;
    expect.add(Index{2, 3}, 1);
    expect.add(Index{3, 2}, 1);
    expect.add(Index{5}, 1);
    CHECK(s == expect);

    IndexSum t = harmonic_single(1, Index{1, 2});
    IndexSum texp;
    texp.add(Index{1, 1, 2}, 2);
    texp.add(Index{1, 2, 1}, 1);
    texp.add(Index{2, 2}, 1);
    texp.add(Index{1, 3}, 1);
    CHECK(t == texp);

    CHECK_THROWS_AS(harmonic_single(2, Index()), std::invalid_argument);

    // total terms: (r+1) shuffles plus r absorptions
    Index l{1, 2, 1, 3};
    Rational total(0);
    for (const auto& [k, c] : harmonic_single(4, l)) total += c;
    CHECK(total == Rational(2 * l.depth() + 1));
}

TEST_CASE("harmonic bookkeeping of the lowered-dual product") {
    // (s+m1) * ((t+1)^dagger + e)  =  (s+m1) sh ((t+1)^dagger + e)
    //   + sum_i ({1}^i, s+m1+1, {1}^{t-2-i}, 2) + e  +  ({1}^{t-1}, s+m1+2) + e
    for (int s = 2; s <= 6; ++s) {
        for (int t = 2; t <= 6; ++t) {
            Index lowered = dual(Index{t + 1});
            REQUIRE(lowered.depth() == t);
            for (int m = 0; m <= 4; ++m) {
                for (int m1 = 0; m1 <= m; ++m1) {
                    for (const auto& e : weak_compositions(m - m1, t)) {
                        Index le = oplus(lowered, e);
                        IndexSum lhs = harmonic_single(s + m1, le);
                        IndexSum rhs = index_shuffle(Index{s + m1}, le);
                        for (int i = 0; i <= t - 2; ++i) {
                            std::vector<int> parts(static_cast<std::size_t>(i), 1);
                            parts.push_back(s + m1 + 1);
                            parts.insert(parts.end(), static_cast<std::size_t>(t - 2 - i), 1);
                            parts.push_back(2);
                            rhs.add(oplus(Index(parts), e), 1);
                        }
                        std::vector<int> tail(static_cast<std::size_t>(t - 1), 1);
                        tail.push_back(s + m1 + 2);
                        rhs.add(oplus(Index(tail), e), 1);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}
