#include <gtest/gtest.h>

#include "tschirn/selftest.hpp"

using namespace tschirn;

namespace {

const CriterionResult& by_id(const std::vector<CriterionResult>& v, int id) {
    for (const auto& r : v)
        if (r.id == id) return r;
    throw std::out_of_range("criterion");
}

}  // namespace

TEST(Selftest, FastLevelPassesAndSkipsScan) {
    SelftestOptions o;
    o.full = false;
    auto v = run_acceptance(o);
    EXPECT_EQ(v.size(), 10u);
    for (const auto& r : v) EXPECT_TRUE(r.pass()) << r.id << ": " << r.detail;
    for (const auto& r : v) EXPECT_NE(r.id, 8);
}

TEST(Selftest, PerturbedF2IsCaughtByOracleSuite) {
    SelftestOptions o;
    o.full = false;
    o.f2 = [](const CubicTriple<Rat>& s, const CubicTriple<Rat>& t) {
        Poly<Rat> f = resolvent_F2(s, t);
        return f + Poly<Rat>::constant(Rat(1) / Rat(1000));
    };
    auto v = run_acceptance(o);
    EXPECT_FALSE(by_id(v, 2).pass());
    EXPECT_NE(by_id(v, 2).detail.find("F2 != oracle"), std::string::npos);
    EXPECT_TRUE(by_id(v, 1).pass());
}

TEST(Selftest, TableInstancesCoverEveryRowOffTheDegenerateLocus) {
    auto inst = selftest::table_instances();
    for (const auto& row : subfield_table()) {
        int n = 0;
        for (const auto& i : inst) n += i.ga == row.ga && i.gb == row.gb && i.relation == row.relation;
        EXPECT_GE(n, 3);
    }
    for (const auto& i : inst) EXPECT_FALSE(RecoveryFormulas<Rat>(i.a, i.b).W().is_zero());
}
