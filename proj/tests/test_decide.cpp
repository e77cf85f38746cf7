#include <gtest/gtest.h>

#include <random>

#include "tschirn/decide.hpp"
#include "tschirn/families.hpp"

using namespace tschirn;

namespace {

using T = CubicTriple<Rat>;
using C = TschirnCoeffs<Rat>;

Rat R(const char* s) { return Rat::parse(s); }

Rat rand_rat(std::mt19937_64& rng, long h = 9) {
    std::uniform_int_distribution<long> n(-h, h), d(1, h);
    return Rat(mpz_class(n(rng)), mpz_class(d(rng)));
}

T rand_irreducible(std::mt19937_64& rng) {
    for (;;) {
        T t{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
        if (!cubic_invariants(t).D.is_zero() && is_irreducible_q(t.poly())) return t;
    }
}

/// Image of f(a) under a random transformation; same splitting field when it stays separable.
T random_image(std::mt19937_64& rng, const T& a, C& used) {
    for (;;) {
        used = {rand_rat(rng, 4), rand_rat(rng, 4), rand_rat(rng, 4)};
        Poly<Rat> img = tschirnhausen_image(a.poly(), used.poly());
        T b = T::from_poly(img);
        if (!cubic_invariants(b).D.is_zero()) return b;
    }
}

const T ex1a{Rat(0), Rat(3), Rat(-2)}, ex1b{Rat(3), Rat(-3), Rat(3)};
const T ex2a{Rat(-3), Rat(-4), Rat(-1)}, ex2b{Rat(-1), Rat(-2), Rat(1)};

}  // namespace

TEST(Galois, Types) {
    EXPECT_EQ(galois_type(ex1a), GaloisType::S3);
    EXPECT_EQ(galois_type(ex2b), GaloisType::C3);
    EXPECT_EQ(galois_type(T{Rat(6), Rat(11), Rat(6)}), GaloisType::Id);
    EXPECT_EQ(galois_type(T{Rat(1), Rat(3), Rat(3)}), GaloisType::C2);  // (X-1)(X^2+3)
    EXPECT_THROW(galois_type(T{Rat(0), Rat(0), Rat(0)}), precondition_error);
}

TEST(Transform, VerifyExamples) {
    EXPECT_TRUE(verify_transformation(ex1a, ex1b, C{Rat(3), Rat(-1), Rat(1)}));
    EXPECT_TRUE(verify_transformation(ex2a, ex2b, C{Rat(4), Rat(-7), Rat(-2)}));
    EXPECT_TRUE(verify_transformation(ex1a, ex1a, C{Rat(0), Rat(1), Rat(0)}));
    EXPECT_FALSE(verify_transformation(ex1a, ex1b, C{Rat(3), Rat(-1), Rat(2)}));
}

TEST(Transform, RecoverExamples) {
    EXPECT_EQ(recover_coeffs(ex1a, ex1b, Rat(1)), (C{Rat(3), Rat(-1), Rat(1)}));
    EXPECT_EQ(recover_coeffs(ex2a, ex2b, Rat(-2)), (C{Rat(4), Rat(-7), Rat(-2)}));
    EXPECT_EQ(recover_coeffs(ex1a, ex1a, Rat(0)), (C{Rat(0), Rat(1), Rat(0)}));
    EXPECT_THROW(recover_coeffs(ex1a, ex1b, Rat(2)), precondition_error);
    EXPECT_THROW(recover_coeffs(ex1a, ex1b, R("-1/2")), precondition_error);  // double root, D12 = 0
}

TEST(Transform, RecoverEveryRationalRootOfNondegenerateF2) {
    std::mt19937_64 rng(201);
    int checked = 0;
    for (int i = 0; i < 12; ++i) {
        T a = rand_irreducible(rng);
        C used;
        T b = random_image(rng, a, used);
        if (RecoveryFormulas<Rat>(a, b).W().is_zero()) continue;
        auto roots = rational_roots(resolvent_F2(a, b));
        ASSERT_FALSE(roots.empty());
        for (const Rat& c2 : roots) EXPECT_TRUE(verify_transformation(a, b, recover_coeffs(a, b, c2)));
        ++checked;
    }
    EXPECT_GE(checked, 8);
}

TEST(Degenerate, Examples) {
    auto d1 = degenerate_factorization(ex1a, ex1b);
    EXPECT_EQ(d1.simple_root, Rat(1));
    EXPECT_EQ(d1.double_root, R("-1/2"));
    EXPECT_EQ(d1.cubic, Poly<Rat>(std::vector<Rat>{R("-3/4"), R("-3/4"), Rat(0), Rat(1)}));
    EXPECT_EQ(d1.expand(), resolvent_F2(ex1a, ex1b));
    auto d2 = degenerate_factorization(ex2a, ex2b);
    EXPECT_EQ(d2.simple_root, Rat(-2));
    EXPECT_EQ(d2.expand(), resolvent_F2(ex2a, ex2b));
    EXPECT_THROW(degenerate_factorization(ex1a, ex1a), precondition_error);
}

TEST(Degenerate, DoubleRootConditionBothDirections) {
    // A root c of F2 with A_a A_b - 3 D_a c^2 = 0 exists exactly on the degenerate locus.
    auto has_root_on_conic = [](const T& a, const T& b) {
        RecoveryFormulas<Rat> rf(a, b);
        Poly<Rat> conic(std::vector<Rat>{rf.is.A * rf.it.A, Rat(0), Rat(-3) * rf.is.D});
        return gcd(resolvent_F2(a, b), conic).degree() > 0;
    };
    std::vector<std::pair<T, T>> degenerate{{ex1a, ex1b}, {ex2a, ex2b}};
    for (auto [x, y] : std::vector<std::pair<long, long>>{{-7, -189}, {-9, -27}, {-6, 54}})
        degenerate.push_back({one_param_triple(Rat(x)), one_param_triple(Rat(y))});
    for (const auto& [a, b] : degenerate) {
        ASSERT_TRUE(RecoveryFormulas<Rat>(a, b).W().is_zero()) << to_string(a) << " " << to_string(b);
        EXPECT_TRUE(has_root_on_conic(a, b));
    }
    std::mt19937_64 rng(202);
    for (int i = 0; i < 15; ++i) {
        T a = rand_irreducible(rng), b = rand_irreducible(rng);
        if (RecoveryFormulas<Rat>(a, b).W().is_zero() || cubic_invariants(a).B.is_zero()) continue;
        EXPECT_FALSE(has_root_on_conic(a, b));
    }
}

TEST(Decide, ExamplesAndWitnesses) {
    auto r = decide_same_splitting(one_param_triple(Rat(-7)), one_param_triple(Rat(-189)));
    EXPECT_TRUE(r.same);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_transformation(one_param_triple(Rat(-7)), one_param_triple(Rat(-189)), *r.witness));
    EXPECT_TRUE(r.degenerate);

    auto same = decide_same_splitting(ex1a, ex1a);
    EXPECT_TRUE(same.same);
    EXPECT_EQ(*same.witness, (C{Rat(0), Rat(1), Rat(0)}));

    EXPECT_TRUE(decide_same_splitting(shanks_triple(Rat(1)), shanks_triple(Rat(66))).same);
    EXPECT_FALSE(decide_same_splitting(ex1a, T{Rat(0), Rat(-1), Rat(1)}).same);

    auto e1 = decide_same_splitting(ex1a, ex1b);
    EXPECT_TRUE(e1.same && e1.degenerate);
    EXPECT_EQ(*e1.witness, (C{Rat(3), Rat(-1), Rat(1)}));
}

TEST(Decide, SymmetricOnRandomPairs) {
    std::mt19937_64 rng(203);
    for (int i = 0; i < 10; ++i) {
        T a = rand_irreducible(rng);
        C used;
        T b = random_image(rng, a, used);
        auto ab = decide_same_splitting(a, b), ba = decide_same_splitting(b, a);
        EXPECT_TRUE(ab.same);
        EXPECT_TRUE(ba.same);
        EXPECT_TRUE(verify_transformation(a, b, *ab.witness));
        EXPECT_TRUE(verify_transformation(b, a, *ba.witness));
        T c = rand_irreducible(rng);
        EXPECT_EQ(decide_same_splitting(a, c).same, decide_same_splitting(c, a).same);
    }
}

TEST(Decide, AZeroNormalisation) {
    const T cbrt2{Rat(0), Rat(0), Rat(2)}, cbrt16{Rat(0), Rat(0), Rat(16)}, cbrt3{Rat(0), Rat(0), Rat(3)};
    auto r = decide_same_splitting(cbrt2, cbrt16);
    EXPECT_TRUE(r.same);
    EXPECT_TRUE(r.normalised_a && r.normalised_b);
    EXPECT_TRUE(verify_transformation(cbrt2, cbrt16, *r.witness));
    EXPECT_FALSE(decide_same_splitting(cbrt2, cbrt3).same);

    // A = 0 on one side only: (X - 1)^3 - 2 against an image of X^3 - 2.
    const T shifted = T::from_poly(tschirnhausen_image(cbrt2.poly(), Poly<Rat>(std::vector<Rat>{Rat(1), Rat(1)})));
    ASSERT_TRUE(cubic_invariants(shifted).A.is_zero());
    std::mt19937_64 rng(204);
    C used;
    const T other = random_image(rng, cbrt2, used);
    auto s = decide_same_splitting(shifted, other);
    EXPECT_TRUE(s.same);
    EXPECT_TRUE(verify_transformation(shifted, other, *s.witness));
    auto t = decide_same_splitting(other, shifted);
    EXPECT_TRUE(t.same);
    EXPECT_TRUE(verify_transformation(other, shifted, *t.witness));
}

TEST(Decide, ReducibleFallback) {
    const T q3a{Rat(1), Rat(3), Rat(3)}, q3b{Rat(0), Rat(3), Rat(0)}, qi{Rat(0), Rat(1), Rat(0)};
    auto r = decide_same_splitting(q3a, q3b);
    EXPECT_TRUE(r.same && r.reducible_fallback);
    EXPECT_FALSE(decide_same_splitting(q3a, qi).same);
    EXPECT_TRUE(decide_same_splitting(T{Rat(6), Rat(11), Rat(6)}, T{Rat(0), Rat(-1), Rat(0)}).same);
    EXPECT_FALSE(decide_same_splitting(ex1a, q3a).same);
}

TEST(Witnesses, AllTransformationsOfExampleTwo) {
    auto ws = all_witnesses(ex2a, ex2b);
    std::vector<C> expect{{Rat(-3), Rat(3), Rat(1)}, {Rat(-2), Rat(4), Rat(1)}, {Rat(4), Rat(-7), Rat(-2)}};
    ASSERT_EQ(ws.size(), 3u);
    for (const auto& e : expect) EXPECT_NE(std::find(ws.begin(), ws.end(), e), ws.end()) << to_string(e);
    auto w1 = all_witnesses(ex1a, ex1b);
    ASSERT_EQ(w1.size(), 1u);
    EXPECT_EQ(w1[0], (C{Rat(3), Rat(-1), Rat(1)}));
}

TEST(Classify, Examples) {
    auto r1 = classify_subfield(ex1a, ex1b);
    EXPECT_TRUE(r1.degenerate);
    EXPECT_EQ(r1.relation, Relation::Equal);
    EXPECT_EQ(*r1.witness, (C{Rat(3), Rat(-1), Rat(1)}));
    EXPECT_EQ(r1.observed_pattern, (std::vector<int>{1, 1, 1, 3}));
    EXPECT_EQ(pattern_string(r1.observed_factors), "(1)(1)^2(3)");

    auto r2 = classify_subfield(shanks_triple(Rat(0)), shanks_triple(Rat(3)));
    EXPECT_EQ(r2.relation, Relation::Equal);
    EXPECT_EQ(r2.observed_pattern, (std::vector<int>{1, 1, 1, 3}));
    EXPECT_TRUE(r2.consistent());

    auto r3 = classify_subfield(T{Rat(1), Rat(3), Rat(3)}, T{Rat(0), Rat(0), Rat(2)});
    EXPECT_TRUE(r3.swapped);
    EXPECT_EQ(r3.ga, GaloisType::S3);
    EXPECT_EQ(r3.gb, GaloisType::C2);
    EXPECT_EQ(r3.relation, Relation::ContainsQuadratic);
    EXPECT_EQ(r3.observed_pattern, (std::vector<int>{3, 3}));
    EXPECT_TRUE(r3.consistent());

    EXPECT_THROW(classify_subfield(T{Rat(6), Rat(11), Rat(6)}, T{Rat(1), Rat(3), Rat(3)}), precondition_error);
}

TEST(Classify, EqualImpliesSameQuadraticField) {
    std::mt19937_64 rng(205);
    for (int i = 0; i < 6; ++i) {
        T a = rand_irreducible(rng);
        C used;
        T b = random_image(rng, a, used);
        auto r = classify_subfield(a, b);
        EXPECT_EQ(r.relation, Relation::Equal);
        EXPECT_TRUE(is_square(cubic_invariants(a).D * cubic_invariants(b).D));
        EXPECT_TRUE(r.consistent());
    }
}
