#include <gtest/gtest.h>

#include <random>

#include "tschirn/ext_field.hpp"
#include "tschirn/linalg.hpp"
#include "tschirn/poly.hpp"
#include "tschirn/rat.hpp"

using namespace tschirn;

namespace {

Poly<Rat> P(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly<Rat>(std::move(v), Rat(0));
}

Poly<Rat> from_roots(const Poly<Rat>& lc, const std::vector<Rat>& roots) {
    Poly<Rat> f = lc;
    for (const auto& r : roots) f *= Poly<Rat>::linear_root(r);
    return f;
}

Rat rand_rat(std::mt19937_64& rng, long h = 9) {
    std::uniform_int_distribution<long> n(-h, h), d(1, h);
    return Rat(mpz_class(n(rng)), mpz_class(d(rng)));
}

}  // namespace

TEST(Poly, BasicArithmetic) {
    Poly<Rat> f = P({2, 3, 0, 1});
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(format_poly(f), "X^3 + 3*X + 2");
    EXPECT_EQ(coeff_list(f), "2,3,0,1");
    EXPECT_EQ(f.derivative(), P({3, 0, 3}));
    auto [q, r] = divmod(f, P({1, 1}));
    EXPECT_EQ(q * P({1, 1}) + r, f);
    EXPECT_LT(r.degree(), 1);
    EXPECT_EQ(gcd(P({-1, 0, 1}) * P({2, 1}), P({1, 1}) * P({5, 1})), P({1, 1}));
    EXPECT_EQ(compose(P({0, 0, 1}), P({1, 1})), P({1, 2, 1}));
    EXPECT_EQ(scale_arg(P({1, 1, 1}), Rat(2)), P({1, 2, 4}));
    EXPECT_TRUE(scale_arg_monic(P({1, 1, 1}), Rat(3)).is_monic());
    EXPECT_TRUE((P({1, 2}) - P({1, 2})).is_zero());
}

TEST(Poly, ExtGcdBezout) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        Poly<Rat> a({rand_rat(rng), rand_rat(rng), rand_rat(rng), Rat(1)});
        Poly<Rat> b({rand_rat(rng), rand_rat(rng), Rat(1)});
        auto [g, s, t] = ext_gcd(a, b);
        EXPECT_EQ(s * a + t * b, g);
        EXPECT_EQ(g, gcd(a, b));
    }
}

TEST(Poly, ResultantMatchesRootProduct) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> ra, rb;
        int na = 1 + static_cast<int>(rng() % 5), nb = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < na; ++i) ra.push_back(rand_rat(rng));
        for (int i = 0; i < nb; ++i) rb.push_back(rand_rat(rng));
        Rat la = rand_rat(rng), lb = rand_rat(rng);
        if (la.is_zero() || lb.is_zero()) continue;
        Poly<Rat> f = from_roots(Poly<Rat>::constant(la), ra);
        Poly<Rat> g = from_roots(Poly<Rat>::constant(lb), rb);
        // Res(f, g) = lc(f)^deg g * prod g(alpha)
        Rat expected = la.pow(nb);
        for (const auto& a : ra) expected *= g(a);
        EXPECT_EQ(resultant(f, g), expected);
        Rat swapped = resultant(g, f);
        EXPECT_EQ(((na * nb) % 2 ? -swapped : swapped), expected);
    }
}

TEST(Poly, DiscriminantOfProduct) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        Poly<Rat> f({rand_rat(rng), rand_rat(rng), rand_rat(rng), Rat(1)});
        Poly<Rat> g({rand_rat(rng), rand_rat(rng), Rat(2)});
        Rat lhs = discriminant(f * g);
        Rat rhs = discriminant(f) * discriminant(g) * resultant(f, g) * resultant(f, g);
        EXPECT_EQ(lhs, rhs);
    }
    // Monic cubic closed form.
    Poly<Rat> c = P({2, 3, 0, 1});
    EXPECT_EQ(discriminant(c), Rat(-4 * 27 - 27 * 4));
    // Quadratic b^2 - 4ac with a != 1.
    EXPECT_EQ(discriminant(P({1, 5, 3})), Rat(25 - 12));
}

TEST(Poly, ResultantOverGF) {
    ExtField F = gf_build(5, 3, 0);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Gf> ra, rb;
        for (int i = 0; i < 3; ++i) ra.push_back(F.by_index(rng() % F.order()));
        for (int i = 0; i < 2; ++i) rb.push_back(F.by_index(rng() % F.order()));
        Poly<Gf> f = Poly<Gf>::constant(F.one()), g = Poly<Gf>::constant(F.one());
        for (auto& a : ra) f *= Poly<Gf>::linear_root(a);
        for (auto& b : rb) g *= Poly<Gf>::linear_root(b);
        Gf expected = F.one();
        for (auto& a : ra) expected *= g(a);
        EXPECT_EQ(resultant(f, g), expected);
    }
}

TEST(Poly, DiscriminantInCharacteristicThree) {
    // Monic cubic over GF(27): Disc = prod (x_i - x_j)^2.
    ExtField F = gf_build(3, 3, 0);
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Gf> r;
        for (int i = 0; i < 3; ++i) r.push_back(F.by_index(rng() % 27));
        Poly<Gf> f = Poly<Gf>::constant(F.one());
        for (auto& a : r) f *= Poly<Gf>::linear_root(a);
        Gf v = F.one();
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) v *= (r[i] - r[j]) * (r[i] - r[j]);
        EXPECT_EQ(discriminant(f), v);
    }
}

TEST(Poly, SquarefreeDecomposition) {
    Poly<Rat> f = P({1, 1}) * P({1, 1}) * P({1, 1}) * P({-2, 0, 1}) * P({3, 1}) * P({3, 1});
    auto sf = squarefree_char0(f * Rat(5));
    ASSERT_EQ(sf.size(), 3u);
    EXPECT_EQ(sf[0].first, P({-2, 0, 1}));
    EXPECT_EQ(sf[1].first, P({3, 1}));
    EXPECT_EQ(sf[2].first, P({1, 1}));
    EXPECT_EQ(sf[2].second, 3);
}

TEST(Linalg, TschirnhausenImageOfExample) {
    // f = X^3 + 3X + 2 under X -> 3 - X + X^2.
    Poly<Rat> img = tschirnhausen_image(P({2, 3, 0, 1}), P({3, -1, 1}));
    EXPECT_EQ(img, P({-3, -3, -3, 1}));
}

TEST(Linalg, ImageAgreesWithPointwiseResultant) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<Rat> fc;
        for (int i = 0; i < n; ++i) fc.push_back(rand_rat(rng));
        fc.push_back(Rat(1));
        Poly<Rat> f(fc, Rat(0));
        Poly<Rat> c({rand_rat(rng), rand_rat(rng), rand_rat(rng)});
        Poly<Rat> img = tschirnhausen_image(f, c);
        EXPECT_EQ(img.degree(), n);
        for (int k = 0; k < 3; ++k) {
            Rat x0 = rand_rat(rng);
            EXPECT_EQ(img(x0), resultant(f, Poly<Rat>::constant(x0) - c));
        }
    }
}

TEST(Linalg, VandermondeAndCramerAgree) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rat> xs{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
        if (xs[0] == xs[1] || xs[0] == xs[2] || xs[1] == xs[2]) continue;
        std::vector<Rat> ys{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
        auto u = vandermonde_solve(xs, ys);
        Matrix<Rat> V(3, std::vector<Rat>(3));
        for (int i = 0; i < 3; ++i) V[i] = {Rat(1), xs[i], xs[i] * xs[i]};
        EXPECT_EQ(u, cramer3(V, ys));
        for (int i = 0; i < 3; ++i) EXPECT_EQ(u[0] + u[1] * xs[i] + u[2] * xs[i] * xs[i], ys[i]);
    }
    EXPECT_THROW(vandermonde_solve(std::vector<Rat>{Rat(1), Rat(1)}, std::vector<Rat>{Rat(0), Rat(1)}),
                 precondition_error);
}
