#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubic.hpp"
#include "decide.hpp"
#include "ext_field.hpp"
#include "factor_fp.hpp"
#include "factor_q.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "resolvent.hpp"

namespace tschirn {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ok = false;  // mathematical check
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;

    bool pass() const { return ok && seconds <= limit_seconds; }
};

using F2Provider = std::function<Poly<Rat>(const CubicTriple<Rat>&, const CubicTriple<Rat>&)>;

struct SelftestOptions {
    bool full = true;  // includes the integer scan
    unsigned jobs = 1;
    std::uint64_t seed = 20240601;
    F2Provider f2 = [](const CubicTriple<Rat>& s, const CubicTriple<Rat>& t) { return resolvent_F2(s, t); };
};

namespace selftest {

using T = CubicTriple<Rat>;

inline Rat random_rat(std::mt19937_64& rng, long h = 12) {
    std::uniform_int_distribution<long> n(-h, h), d(1, h);
    return Rat(mpz_class(n(rng)), mpz_class(d(rng)));
}

inline T random_triple(std::mt19937_64& rng) { return {random_rat(rng), random_rat(rng), random_rat(rng)}; }

inline T random_separable(std::mt19937_64& rng) {
    for (;;) {
        T t = random_triple(rng);
        if (!cubic_invariants(t).D.is_zero()) return t;
    }
}

inline std::vector<Rat> distinct_rats(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rat> v;
    while (v.size() < n) {
        Rat x = random_rat(rng);
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    return v;
}

inline Poly<Rat> P(std::vector<Rat> c) { return Poly<Rat>(std::move(c), Rat(0)); }

/// Expected factor list (monic irreducible, multiplicity) compared with factor_over_q.
inline bool factors_are(const Poly<Rat>& f, std::vector<std::pair<Poly<Rat>, int>> expect) {
    auto fac = factor_over_q(f);
    std::vector<std::pair<Poly<Rat>, int>> got;
    for (const auto& x : fac.factors) got.push_back({x.poly, x.multiplicity});
    auto less = [](const auto& x, const auto& y) { return poly_less(x.first, y.first); };
    std::sort(got.begin(), got.end(), less);
    std::sort(expect.begin(), expect.end(), less);
    if (got.size() != expect.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!(got[i].first == expect[i].first) || got[i].second != expect[i].second) return false;
    return true;
}

struct Checker {
    bool ok = true;
    std::ostringstream msg;
    int count = 0;

    void expect(bool cond, const std::string& what) {
        ++count;
        if (!cond && ok) msg << what;
        ok = ok && cond;
    }
};

struct TableInstance {
    T a, b;
    GaloisType ga, gb;
    Relation relation;
};

/// Three or more constructed pairs for every row of the subfield table.
inline std::vector<TableInstance> table_instances() {
    using G = GaloisType;
    using Rl = Relation;
    const T x3mxm1{Rat(0), Rat(-1), Rat(1)};  // X^3 - X - 1, D = -23
    const T x3px1{Rat(0), Rat(1), Rat(-1)};   // X^3 + X + 1, D = -31
    const T cbrt2{Rat(0), Rat(0), Rat(2)}, cbrt3{Rat(0), Rat(0), Rat(3)}, cbrt5{Rat(0), Rat(0), Rat(5)};
    auto img = [](const T& a, long c0, long c1, long c2) {
        return T::from_poly(tschirnhausen_image(a.poly(), P({Rat(c0), Rat(c1), Rat(c2)})));
    };
    auto sh = [](long m) { return shanks_triple(Rat(m)); };
    const T id1{Rat(6), Rat(11), Rat(6)}, id2{Rat(0), Rat(-1), Rat(0)}, id3{Rat(3), Rat(2), Rat(0)};
    return {
        {x3mxm1, cbrt2, G::S3, G::S3, Rl::TrivialMeet},
        {x3mxm1, x3px1, G::S3, G::S3, Rl::TrivialMeet},
        {x3px1, cbrt2, G::S3, G::S3, Rl::TrivialMeet},
        {cbrt2, img(cbrt3, 0, 1, 1), G::S3, G::S3, Rl::QuadraticMeet},
        {cbrt2, img(cbrt5, 1, 1, 1), G::S3, G::S3, Rl::QuadraticMeet},
        {cbrt3, img(cbrt5, 0, 2, 1), G::S3, G::S3, Rl::QuadraticMeet},
        {x3mxm1, img(x3mxm1, 1, 1, 1), G::S3, G::S3, Rl::Equal},
        {x3px1, img(x3px1, 0, 2, 1), G::S3, G::S3, Rl::Equal},
        {cbrt2, img(cbrt2, 1, 2, 1), G::S3, G::S3, Rl::Equal},
        {x3mxm1, sh(0), G::S3, G::C3, Rl::TrivialMeet},
        {cbrt2, sh(1), G::S3, G::C3, Rl::TrivialMeet},
        {x3px1, sh(2), G::S3, G::C3, Rl::TrivialMeet},
        {x3mxm1, T{Rat(0), Rat(1), Rat(0)}, G::S3, G::C2, Rl::NotContains},
        {cbrt2, T{Rat(1), Rat(1), Rat(1)}, G::S3, G::C2, Rl::NotContains},
        {x3px1, T{Rat(0), Rat(-2), Rat(0)}, G::S3, G::C2, Rl::NotContains},
        {cbrt2, T{Rat(0), Rat(3), Rat(0)}, G::S3, G::C2, Rl::ContainsQuadratic},
        {cbrt2, T{Rat(1), Rat(3), Rat(3)}, G::S3, G::C2, Rl::ContainsQuadratic},
        {x3mxm1, T{Rat(0), Rat(23), Rat(0)}, G::S3, G::C2, Rl::ContainsQuadratic},
        {x3mxm1, id1, G::S3, G::Id, Rl::ProperContains},
        {cbrt2, id2, G::S3, G::Id, Rl::ProperContains},
        {x3px1, id3, G::S3, G::Id, Rl::ProperContains},
        {sh(0), sh(1), G::C3, G::C3, Rl::TrivialMeet},
        {sh(0), sh(2), G::C3, G::C3, Rl::TrivialMeet},
        {sh(1), sh(2), G::C3, G::C3, Rl::TrivialMeet},
        {sh(0), img(sh(0), 0, 1, 2), G::C3, G::C3, Rl::Equal},
        {sh(-1), sh(5), G::C3, G::C3, Rl::Equal},
        {sh(1), sh(66), G::C3, G::C3, Rl::Equal},
        {sh(0), T{Rat(0), Rat(1), Rat(0)}, G::C3, G::C2, Rl::TrivialMeet},
        {sh(1), T{Rat(1), Rat(3), Rat(3)}, G::C3, G::C2, Rl::TrivialMeet},
        {sh(2), T{Rat(0), Rat(-2), Rat(0)}, G::C3, G::C2, Rl::TrivialMeet},
        {sh(0), id1, G::C3, G::Id, Rl::ProperContains},
        {sh(1), id2, G::C3, G::Id, Rl::ProperContains},
        {sh(2), id3, G::C3, G::Id, Rl::ProperContains},
    };
}

// 1
inline void invariant_identity(const SelftestOptions& o, Checker& c) {
    std::mt19937_64 rng(o.seed + 1);
    for (int i = 0; i < 100; ++i) {
        auto inv = cubic_invariants(random_triple(rng));
        c.expect(Rat(4) * inv.A * inv.A * inv.A - inv.B * inv.B == Rat(27) * inv.D, "4A^3 - B^2 != 27D");
    }
}

// 2
inline void oracle_equivalence(const SelftestOptions& o, Checker& c) {
    std::mt19937_64 rng(o.seed + 2);
    for (int i = 0; i < 25; ++i) {
        RootTuple<Rat> rt{distinct_rats(rng, 3), distinct_rats(rng, 3)};
        const T s = T::from_roots(rt.xs[0], rt.xs[1], rt.xs[2]);
        const T t = T::from_roots(rt.ys[0], rt.ys[1], rt.ys[2]);
        c.expect(o.f2(s, t) == oracle_resolvent(rt, 2), "F2 != oracle at tuple " + std::to_string(i) + "; ");
        c.expect(resolvent_F1(s, t) == oracle_resolvent(rt, 1), "F1 != oracle at tuple " + std::to_string(i) + "; ");
        c.expect(resolvent_F0(s, t) == oracle_resolvent(rt, 0), "F0 != oracle at tuple " + std::to_string(i) + "; ");
    }
}

// 3
inline void discriminant_closed_form(const SelftestOptions& o, Checker& c) {
    std::mt19937_64 rng(o.seed + 3);
    for (int i = 0; i < 25; ++i) {
        const T s = random_separable(rng), t = random_triple(rng);
        c.expect(discriminant(o.f2(s, t)) == resolvent_F2_discriminant(s, t), "Disc F2 mismatch; ");
    }
}

// 4
inline void example_one(const SelftestOptions& o, Checker& c) {
    const T a{Rat(0), Rat(3), Rat(-2)}, b{Rat(3), Rat(-3), Rat(3)};
    const auto ia = cubic_invariants(a), ib = cubic_invariants(b);
    c.expect(ia.A == Rat(-9) && ia.B == Rat(-54) && ia.C == Rat(9) && ia.D == Rat(-216), "invariants of a; ");
    c.expect(ib.A == Rat(18) && ib.B == Rat(216) && ib.D == Rat(-864), "invariants of b; ");
    c.expect(RecoveryFormulas<Rat>(a, b).W().is_zero(), "degenerate locus not detected; ");
    const Rat q(3, 4), h(1, 2);
    c.expect(factors_are(o.f2(a, b), {{P({h, Rat(1)}), 2}, {P({Rat(-1), Rat(1)}), 1}, {P({-q, -q, Rat(0), Rat(1)}), 1}}),
             "F2 factorisation; ");
    auto d = decide_same_splitting(a, b);
    c.expect(d.same && d.degenerate && d.witness && *d.witness == TschirnCoeffs<Rat>{Rat(3), Rat(-1), Rat(1)},
             "witness (3,-1,1); ");
    c.expect(verify_transformation(a, b, TschirnCoeffs<Rat>{Rat(3), Rat(-1), Rat(1)}), "resultant check; ");
    c.expect(factors_are(resolvent_F1(a, b), {{P({Rat(7, 4), Rat(-1), Rat(1)}), 1},
                                              {P({Rat(1), Rat(1)}), 1},
                                              {P({Rat(1, 4), q, Rat(0), Rat(1)}), 1}}),
             "F1 factorisation; ");
    c.expect(factors_are(resolvent_F0(a, b), {{P({Rat(0), Rat(1)}), 2},
                                              {P({Rat(-3), Rat(1)}), 1},
                                              {P({Rat(-4), Rat(0), Rat(-3), Rat(1)}), 1}}),
             "F0 factorisation; ");
}

// 5
inline void example_two(const SelftestOptions& o, Checker& c) {
    using C = TschirnCoeffs<Rat>;
    const T a{Rat(-3), Rat(-4), Rat(-1)}, b{Rat(-1), Rat(-2), Rat(1)};
    const auto ia = cubic_invariants(a), ib = cubic_invariants(b);
    c.expect(ia.A == Rat(21) && ia.B == Rat(-189) && ia.C == Rat(259) && ia.D == Rat(49), "invariants of a; ");
    c.expect(ib.A == Rat(7) && ib.B == Rat(7) && ib.D == Rat(49), "invariants of b; ");
    c.expect(RecoveryFormulas<Rat>(a, b).W().is_zero(), "degenerate locus not detected; ");
    auto d = decide_same_splitting(a, b);
    c.expect(d.same && d.witness && *d.witness == C{Rat(4), Rat(-7), Rat(-2)}, "witness (4,-7,-2); ");
    c.expect(factors_are(resolvent_F1(a, b), {{P({Rat(-3), Rat(1)}), 1},
                                              {P({Rat(-4), Rat(1)}), 1},
                                              {P({Rat(7), Rat(1)}), 1},
                                              {P({Rat(-601, 7), Rat(-37), Rat(0), Rat(1)}), 1}}),
             "F1 factorisation; ");
    const auto ws = all_witnesses(a, b);
    for (const C& w : {C{Rat(-3), Rat(3), Rat(1)}, C{Rat(-2), Rat(4), Rat(1)}, C{Rat(4), Rat(-7), Rat(-2)}}) {
        c.expect(std::find(ws.begin(), ws.end(), w) != ws.end(), "missing alternate " + to_string(w) + "; ");
        c.expect(verify_transformation(a, b, w), "alternate fails resultant check; ");
    }
    (void)o;
}

// 6
inline void same_field_list(const SelftestOptions&, Checker& c) {
    for (auto [x, y] : std::vector<std::pair<long, long>>{{-7, -189}, {-9, -27}, {-6, 54}}) {
        const T a = one_param_triple(Rat(x)), b = one_param_triple(Rat(y));
        auto d = decide_same_splitting(a, b);
        c.expect(d.same && d.witness && verify_transformation(a, b, *d.witness),
                 "(" + std::to_string(x) + "," + std::to_string(y) + ") not decided equal; ");
    }
}

// 7
inline void table_conformance(const SelftestOptions&, Checker& c) {
    std::set<std::string> rows;
    for (const auto& inst : table_instances()) {
        const std::string label = std::string(to_string(inst.ga)) + "/" + to_string(inst.gb) + "/" + to_string(inst.relation);
        const TableRow* row = find_table_row(inst.ga, inst.gb, inst.relation);
        c.expect(row != nullptr, "no row " + label + "; ");
        if (!row) continue;
        auto r = classify_subfield(inst.a, inst.b);
        c.expect(!r.degenerate, "instance on degenerate locus: " + label + "; ");
        c.expect(r.ga == inst.ga && r.gb == inst.gb && r.relation == inst.relation,
                 "relation computed as " + std::string(to_string(r.relation)) + " for " + label + "; ");
        c.expect(r.observed_pattern == row->pattern, "observed " + pattern_string(r.observed_pattern) + " for " + label + "; ");
        c.expect(r.predicted_pattern == row->pattern, "predicted pattern differs for " + label + "; ");
        rows.insert(label);
    }
    c.expect(rows.size() == subfield_table().size(), "not every row covered; ");
}

// 8
inline void integer_scan(const SelftestOptions& o, Checker& c) {
    auto r = scan_equal_splitting(-1, 12, 2500, o.jobs);
    std::vector<std::pair<long, long>> pairs;
    for (const auto& h : r.hits) pairs.push_back({h.m, h.n});
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    const std::vector<std::pair<long, long>> expect{{-1, 5},  {-1, 12}, {-1, 1259}, {0, 3},   {0, 54},   {1, 66},
                                                    {2, 2389}, {3, 54}, {5, 12},    {5, 1259}, {12, 1259}};
    c.expect(pairs == expect, "pair list differs; ");
    const std::vector<std::vector<long>> classes{{-1, 5, 12, 1259}, {0, 3, 54}, {1, 66}, {2, 2389}};
    c.expect(r.classes == classes, "classes differ; ");
}

// 9
inline void sextic_identities(const SelftestOptions& o, Checker& c) {
    std::mt19937_64 rng(o.seed + 9);
    for (auto pair : {SexticPair::S3S3, SexticPair::S3C3, SexticPair::S3C2, SexticPair::S3Id, SexticPair::C3C2}) {
        int done = 0;
        while (done < 30) {
            const Rat s = random_rat(rng), t = random_rat(rng);
            if ((s * (Rat(4) * s + Rat(27)) * t).is_zero()) continue;
            auto def = sextic_definition(pair, s, t);
            Poly<Rat> f2 = o.f2(def.a, def.b);
            if (def.scaled) f2 = scale_arg_monic(f2, Rat(3));
            c.expect(sextic_generic(pair, s, t) == f2, std::string(to_string(pair)) + " mismatch; ");
            ++done;
        }
    }
    for (int i = 0; i < 25; ++i) {
        const Rat a = random_rat(rng), b = random_rat(rng);
        const Rat expect = a.pow(10) * b.pow(4) * (Rat(4) * a + Rat(27)).pow(15) * (Rat(4) * b + Rat(27)).pow(3);
        c.expect(discriminant(resolvent_H(a, b)) == expect, "Disc H mismatch; ");
    }
}

// 10
inline void char3_suite(const SelftestOptions& o, Checker& c) {
    ExtField K = gf_build(3, 3, 0);
    std::mt19937_64 rng(o.seed + 10);
    int done = 0;
    while (done < 25) {
        std::vector<Gf> xs, ys;
        for (int i = 0; i < 3; ++i) {
            xs.push_back(K.by_index(rng() % K.order()));
            ys.push_back(K.by_index(rng() % K.order()));
        }
        RootTuple<Gf> rt{xs, ys};
        try {
            rt.validate();
        } catch (const precondition_error&) {
            continue;
        }
        auto s = CubicTriple<Gf>::from_roots(xs[0], xs[1], xs[2]);
        auto t = CubicTriple<Gf>::from_roots(ys[0], ys[1], ys[2]);
        if (s.a1.is_zero() || t.a1.is_zero()) continue;
        c.expect(resolvent_F2_char3(s, t) == oracle_resolvent(rt, 2), "F2 char 3 != oracle; ");
        ++done;
    }
    for (int i = 0; i < 25; ++i) {
        const Gf s = K.by_index(1 + rng() % (K.order() - 1)), t = K.by_index(rng() % K.order());
        c.expect(discriminant(resolvent_G0_char3(s, t)) == fpow(t, 15) / fpow(s, 3), "Disc G0 != t^15/s^3; ");
    }
}

inline std::vector<int> mod_p_pattern(const Poly<Rat>& f, std::uint64_t p) {
    return degree_pattern_fp(detail::to_fp(detail::integer_primitive(f), p));
}

// 11
inline void factorizer_soundness(const SelftestOptions& o, Checker& c) {
    std::mt19937_64 rng(o.seed + 11);
    std::uniform_int_distribution<long> coef(-30, 30);
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    for (int i = 0; i < 200; ++i) {
        Poly<Rat> f = Poly<Rat>::constant(random_rat(rng, 5) + Rat(6));
        if (i % 2 == 0) {
            const int deg = 1 + static_cast<int>(rng() % 6);
            std::vector<Rat> v;
            for (int j = 0; j < deg; ++j) v.push_back(Rat(coef(rng), 1 + static_cast<long>(rng() % 4)));
            v.push_back(Rat(1));
            f *= P(v);
        } else {
            int deg = 0;
            while (deg < 6) {
                const int d = 1 + static_cast<int>(rng() % std::min(3, 6 - deg));
                std::vector<Rat> v;
                for (int j = 0; j < d; ++j) v.push_back(Rat(coef(rng) / 3));
                v.push_back(Rat(1));
                f *= P(v);
                deg += d;
                if (rng() % 3 == 0) break;
            }
        }
        const auto fac = factor_over_q(f);
        c.expect(fac.expand() == f, "re-expansion failed; ");
        Poly<Rat> sf = Poly<Rat>::constant(Rat(1));
        for (const auto& x : fac.factors) sf *= x.poly;
        if (sf.degree() < 1) continue;
        const auto isf = detail::integer_primitive(sf);
        int good = 0;
        for (std::uint64_t p : primes) {
            if (good == 3) break;
            if (mpz_divisible_ui_p(isf.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
            const Poly<Fp> sp = detail::to_fp(isf, p);
            if (gcd(sp, sp.derivative()).degree() > 0) continue;
            std::vector<int> joined;
            for (const auto& x : fac.factors) {
                auto pat = mod_p_pattern(x.poly, p);
                int sum = 0;
                for (int d : pat) sum += d;
                c.expect(sum == x.poly.degree(), "mod-p pattern does not partition a factor; ");
                joined.insert(joined.end(), pat.begin(), pat.end());
            }
            std::sort(joined.begin(), joined.end());
            c.expect(joined == degree_pattern_fp(sp), "mod-p pattern is not a refinement; ");
            ++good;
        }
        c.expect(good == 3, "fewer than 3 good primes; ");
    }
}

}  // namespace selftest

/// The acceptance criteria, one result each. `full = false` skips the integer scan.
inline std::vector<CriterionResult> run_acceptance(const SelftestOptions& o = {}) {
    struct Entry {
        int id;
        const char* name;
        double limit;
        void (*fn)(const SelftestOptions&, selftest::Checker&);
    };
    const double scan_limit = o.jobs >= 8 && std::thread::hardware_concurrency() >= 8 ? 60.0 : 300.0;
    const std::vector<Entry> entries{
        {1, "invariant identity 4A^3 - B^2 = 27D (100 triples)", 1.0, selftest::invariant_identity},
        {2, "coset oracle equals F0, F1, F2 (25 root tuples)", 5.0, selftest::oracle_equivalence},
        {3, "closed-form discriminant of F2 (25 pairs)", 5.0, selftest::discriminant_closed_form},
        {4, "first worked example end to end", 1.0, selftest::example_one},
        {5, "second worked example end to end", 1.0, selftest::example_two},
        {6, "X^3+aX+a same-field list", 1.0, selftest::same_field_list},
        {7, "subfield table conformance (3 instances per row)", 30.0, selftest::table_conformance},
        {8, "Shanks integer scan m in [-1,12], n <= 2500", scan_limit, selftest::integer_scan},
        {9, "sextic families and Disc H (30 + 25 points)", 10.0, selftest::sextic_identities},
        {10, "characteristic 3: F2 vs oracle in GF(27), Disc G0", 10.0, selftest::char3_suite},
        {11, "factoriser re-expansion and mod-p refinement (200 polys)", 30.0, selftest::factorizer_soundness},
    };
    std::vector<CriterionResult> out;
    for (const auto& e : entries) {
        if (e.id == 8 && !o.full) continue;
        CriterionResult r{e.id, e.name, false, "", 0, e.limit};
        selftest::Checker c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            e.fn(o, c);
            r.ok = c.ok;
            r.detail = c.ok ? std::to_string(c.count) + " checks" : c.msg.str();
        } catch (const std::exception& ex) {
            r.ok = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(r);
    }
    return out;
}

}  // namespace tschirn
