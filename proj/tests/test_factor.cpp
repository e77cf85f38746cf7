#include <gtest/gtest.h>

#include <random>

#include "tschirn/factor_fp.hpp"
#include "tschirn/factor_q.hpp"

using namespace tschirn;

namespace {

Poly<Rat> P(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly<Rat>(std::move(v), Rat(0));
}

Poly<Fp> Pp(std::initializer_list<long> c, std::uint64_t p) {
    std::vector<Fp> v;
    for (long x : c) v.push_back(Fp::from_int(x, p));
    return Poly<Fp>(std::move(v), Fp(0, p));
}

}  // namespace

TEST(FactorFp, SmallCases) {
    auto f = factor_over_fp(Pp({1, 1, 0, 1}, 2));
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].poly.degree(), 3);

    // X^4 - 1 over F_5 splits into linear factors.
    auto g = factor_over_fp(Pp({-1, 0, 0, 0, 1}, 5));
    EXPECT_EQ(g.degree_pattern(), (std::vector<int>{1, 1, 1, 1}));

    // X^9 - X^3 over F_3 = X^3 (X^6 - 1) = X^3 (X-1)^3 (X+1)^3.
    auto h = factor_over_fp(Pp({0, 0, 0, -1, 0, 0, 0, 0, 0, 1}, 3));
    EXPECT_EQ(h.expand(), Pp({0, 0, 0, -1, 0, 0, 0, 0, 0, 1}, 3));
    ASSERT_EQ(h.factors.size(), 3u);
    for (const auto& fac : h.factors) EXPECT_EQ(fac.multiplicity, 3);
}

TEST(FactorFp, RandomReexpansion) {
    std::mt19937_64 rng(21);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL}) {
        for (int trial = 0; trial < 40; ++trial) {
            int n = 1 + static_cast<int>(rng() % 9);
            std::vector<Fp> c;
            for (int i = 0; i <= n; ++i) c.emplace_back(rng() % p, p);
            c.back() = Fp(1 + rng() % (p - 1), p);
            Poly<Fp> f(c, Fp(0, p));
            auto fac = factor_over_fp(f);
            EXPECT_EQ(fac.expand(), f);
            for (const auto& x : fac.factors) {
                EXPECT_TRUE(x.poly.is_monic());
                EXPECT_TRUE(is_irreducible_fp(x.poly));
            }
        }
    }
}

TEST(FactorQ, KnownFactorisations) {
    auto f = factor_over_q(P({-1, 0, 0, 0, 0, 0, 1}));  // X^6 - 1
    EXPECT_EQ(f.degree_pattern(), (std::vector<int>{1, 1, 2, 2}));
    EXPECT_EQ(f.expand(), P({-1, 0, 0, 0, 0, 0, 1}));

    // Swinnerton-Dyer style: X^4 - 10X^2 + 1 is irreducible but splits mod every prime.
    EXPECT_TRUE(is_irreducible_q(P({1, 0, -10, 0, 1})));

    // (X+1/2)^2 (X-1)(X^3 - 3X/4 - 3/4)
    Poly<Rat> half({Rat::parse("1/2"), Rat(1)});
    Poly<Rat> cub({Rat::parse("-3/4"), Rat::parse("-3/4"), Rat(0), Rat(1)});
    Poly<Rat> g = half * half * P({-1, 1}) * cub;
    auto gf = factor_over_q(g * Rat(-7));
    EXPECT_EQ(gf.unit, Rat(-7));
    ASSERT_EQ(gf.factors.size(), 3u);
    EXPECT_EQ(gf.factors[0].poly, P({-1, 1}));
    EXPECT_EQ(gf.factors[1].poly, half);
    EXPECT_EQ(gf.factors[1].multiplicity, 2);
    EXPECT_EQ(gf.factors[2].poly, cub);
    EXPECT_EQ(rational_roots(g), (std::vector<Rat>{Rat(-1) / Rat(2), Rat(1)}));
}

TEST(FactorQ, ProductsOfRandomFactorsReexpand) {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        Poly<Rat> f = Poly<Rat>::constant(Rat(static_cast<long>(1 + rng() % 5)));
        int pieces = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < pieces; ++i) {
            int deg = 1 + static_cast<int>(rng() % 3);
            std::vector<Rat> c;
            for (int j = 0; j < deg; ++j) c.emplace_back(d(rng));
            c.emplace_back(1 + rng() % 4);
            f *= Poly<Rat>(c, Rat(0));
        }
        auto fac = factor_over_q(f);
        EXPECT_EQ(fac.expand(), f);
        for (const auto& x : fac.factors) EXPECT_TRUE(x.poly.is_monic());
    }
}
