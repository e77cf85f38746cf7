#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tschirn/decide.hpp"
#include "tschirn/families.hpp"

using namespace tschirn;

namespace {

using T = CubicTriple<Rat>;

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

std::set<Rat> params(const std::vector<NormalForm>& v) {
    std::set<Rat> s;
    for (const auto& nf : v) s.insert(nf.parameter);
    return s;
}

}  // namespace

TEST(Reduce, Depressed) {
    auto nf = reduce_depressed(T{Rat(3), Rat(-3), Rat(3)});
    EXPECT_EQ(nf.target, (T{Rat(0), Rat(-6), Rat(8)}));
    EXPECT_EQ(reduce_depressed(T{Rat(0), Rat(5), Rat(-7)}).target, (T{Rat(0), Rat(5), Rat(-7)}));
    std::mt19937_64 rng(301);
    for (int i = 0; i < 20; ++i) {
        T a{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
        auto r = reduce_depressed(a);
        EXPECT_TRUE(r.target.a1.is_zero());
        EXPECT_TRUE(verify_transformation(a, r.target, r.witness));
    }
}

TEST(Reduce, OneParameter) {
    EXPECT_EQ(reduce_one_param(one_param_triple(Rat(5))).parameter, Rat(5));
    EXPECT_EQ(reduce_one_param(T{Rat(3), Rat(-3), Rat(3)}).parameter, R("-27/8"));
    std::mt19937_64 rng(302);
    for (int i = 0; i < 8; ++i) {
        T a = rand_irreducible(rng);
        auto nf = reduce_one_param(a);
        EXPECT_TRUE(verify_transformation(a, nf.target, nf.witness));
        EXPECT_TRUE(decide_same_splitting(a, nf.target).same);
    }
    auto alt = reduce_one_param(T{Rat(0), Rat(0), Rat(2)});
    EXPECT_EQ(alt.kind, NormalKind::OneParamAlternate);
    EXPECT_EQ(alt.target, (T{Rat(0), Rat(-3), R("2917/54")}));  // B = 54
}

TEST(Reduce, Shanks) {
    EXPECT_EQ(params(reduce_shanks(T{Rat(-1), Rat(-2), Rat(1)})), (std::set<Rat>{Rat(-1), Rat(-2)}));
    EXPECT_EQ(params(reduce_shanks(T{Rat(0), Rat(-3), Rat(1)})), (std::set<Rat>{Rat(0), Rat(-3)}));
    for (long m : {1, 4, 7}) {
        auto v = reduce_shanks(shanks_triple(Rat(m)));
        EXPECT_EQ(params(v), (std::set<Rat>{Rat(m), Rat(-m - 3)}));
        ASSERT_EQ(v.size(), 2u);
        EXPECT_EQ(v[0].parameter + v[1].parameter + Rat(3), Rat(0));
        for (const auto& nf : v) EXPECT_TRUE(verify_transformation(shanks_triple(Rat(m)), nf.target, nf.witness));
    }
    EXPECT_THROW(reduce_shanks(T{Rat(0), Rat(3), Rat(-2)}), precondition_error);
}

TEST(Family, S3MembersShareSplittingField) {
    const Rat a(-7);
    std::mt19937_64 rng(303);
    int checked = 0;
    while (checked < 20) {
        Rat u = rand_rat(rng, 20);
        Rat b;
        try {
            b = family_s3(a, u);
        } catch (const precondition_error&) {
            continue;
        }
        if (b.is_zero() || (Rat(4) * b + Rat(27)).is_zero()) continue;
        EXPECT_TRUE(resolvent_H(a, b)(u).is_zero());
        EXPECT_TRUE(decide_same_splitting(one_param_triple(a), one_param_triple(b)).same) << to_string(u);
        ++checked;
    }
}

TEST(Family, S3DegenerateListAtPolesOfTheFamily) {
    // H(a,b;X) has a rational root u; at such u the family either gives b or has a pole.
    for (auto [x, y] : std::vector<std::pair<long, long>>{{-7, -189}, {-9, -27}, {-6, 54}}) {
        const Rat a(x), b(y);
        EXPECT_EQ(Rat(4) * a * b + Rat(27) * a + Rat(27) * b, Rat(0));
        auto roots = rational_roots(resolvent_H(a, b));
        ASSERT_FALSE(roots.empty()) << x << "," << y;
        bool hit = false;
        for (const Rat& u : roots) {
            try {
                hit = hit || family_s3(a, u) == b;
            } catch (const precondition_error&) {
                hit = true;
            }
        }
        EXPECT_TRUE(hit);
        EXPECT_TRUE(decide_same_splitting(one_param_triple(a), one_param_triple(b)).same);
    }
}

TEST(Family, C3Values) {
    const Rat m(2);
    EXPECT_EQ(family_c3(m, Rat(0)), std::make_pair(m, -m - Rat(3)));
    const Rat d = Rat(2) * m + Rat(3);
    EXPECT_EQ(family_c3(m, Rat(1)), std::make_pair(Rat(-3) * (m + Rat(6)) / d, Rat(-3) * (m - Rat(3)) / d));

    bool found = false;
    for (const auto& member : enumerate_family_c3(Rat(-1), 30))
        for (const Rat& n : member.b) found = found || n == Rat(5);
    EXPECT_TRUE(found);

    std::mt19937_64 rng(304);
    int checked = 0;
    while (checked < 8) {
        Rat mm = rand_rat(rng, 6), z = rand_rat(rng, 6);
        std::pair<Rat, Rat> ns;
        try {
            ns = family_c3(mm, z);
        } catch (const precondition_error&) {
            continue;
        }
        for (const Rat& n : {ns.first, ns.second})
            EXPECT_TRUE(decide_same_splitting(shanks_triple(mm), shanks_triple(n)).same);
        ++checked;
    }
}

TEST(Family, HeightEnumeration) {
    auto v = rationals_by_height(2);
    std::vector<Rat> expect{Rat(-1), Rat(0), Rat(1), Rat(-2), R("-1/2"), R("1/2"), Rat(2)};
    EXPECT_EQ(v, expect);
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_TRUE(height_less(v[i - 1], v[i]));
    EXPECT_TRUE(rationals_by_height(-1).empty());
}

TEST(Scan, SmallRangeAndJobIndependence) {
    auto r1 = scan_equal_splitting(-1, 1, 100, 1);
    std::vector<std::tuple<long, long, bool>> got;
    for (const auto& h : r1.hits) got.emplace_back(h.m, h.n, h.plus);
    std::vector<std::tuple<long, long, bool>> expect{
        {-1, 5, true}, {-1, 12, false}, {0, 3, false}, {0, 54, true}, {1, 66, false}};
    EXPECT_EQ(got, expect);
    EXPECT_EQ(r1.classes, (std::vector<std::vector<long>>{{-1, 5, 12}, {0, 3, 54}, {1, 66}}));

    auto r4 = scan_equal_splitting(-1, 1, 100, 4);
    ASSERT_EQ(r4.hits.size(), r1.hits.size());
    for (std::size_t i = 0; i < r1.hits.size(); ++i) {
        EXPECT_EQ(r4.hits[i].m, r1.hits[i].m);
        EXPECT_EQ(r4.hits[i].n, r1.hits[i].n);
    }
    EXPECT_EQ(r4.classes, r1.classes);
    EXPECT_TRUE(scan_equal_splitting(3, 2, 100).hits.empty());
}

TEST(Scan, ClassesAreConsistentWithDecision) {
    auto r = scan_equal_splitting(-1, 1, 100, 2);
    for (const auto& cls : r.classes)
        for (std::size_t i = 0; i + 1 < cls.size(); ++i)
            EXPECT_TRUE(decide_same_splitting(shanks_triple(Rat(cls[i])), shanks_triple(Rat(cls.back()))).same);
    EXPECT_FALSE(decide_same_splitting(shanks_triple(Rat(-1)), shanks_triple(Rat(0))).same);
}
