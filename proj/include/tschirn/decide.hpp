#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "errors.hpp"
#include "factor_q.hpp"
#include "linalg.hpp"
#include "rat.hpp"
#include "recovery.hpp"
#include "resolvent.hpp"

namespace tschirn {

enum class GaloisType { S3, C3, C2, Id };

inline const char* to_string(GaloisType g) {
    switch (g) {
        case GaloisType::S3: return "S3";
        case GaloisType::C3: return "C3";
        case GaloisType::C2: return "C2";
        case GaloisType::Id: return "Id";
    }
    return "?";
}

inline int group_order(GaloisType g) {
    switch (g) {
        case GaloisType::S3: return 6;
        case GaloisType::C3: return 3;
        case GaloisType::C2: return 2;
        case GaloisType::Id: return 1;
    }
    return 0;
}

/// Galois group of f(a;X) over Q from its rational roots and the squareness of D_a.
inline GaloisType galois_type(const CubicTriple<Rat>& a) {
    const Rat D = cubic_invariants(a).D;
    if (D.is_zero()) throw precondition_error("D_a = 0", "inseparable cubic");
    const auto roots = rational_roots(a.poly());
    if (roots.size() == 3) return GaloisType::Id;
    if (roots.size() == 1) return GaloisType::C2;
    return is_square(D) ? GaloisType::C3 : GaloisType::S3;
}

/// Coefficients of the transformation Y -> c0 + c1 Y + c2 Y^2.
template <class F>
struct TschirnCoeffs {
    F c0, c1, c2;

    Poly<F> poly() const { return Poly<F>(std::vector<F>{c0, c1, c2}, c0); }

    friend bool operator==(const TschirnCoeffs& x, const TschirnCoeffs& y) {
        return x.c0 == y.c0 && x.c1 == y.c1 && x.c2 == y.c2;
    }
};

template <class F>
std::string to_string(const TschirnCoeffs<F>& c) {
    return to_string(c.c0) + "," + to_string(c.c1) + "," + to_string(c.c2);
}

/// Res_Y(f(a;Y), X - (c0 + c1 Y + c2 Y^2)) == f(b;X).
template <class F>
bool verify_transformation(const CubicTriple<F>& a, const CubicTriple<F>& b, const TschirnCoeffs<F>& c) {
    return tschirnhausen_image(a.poly(), c.poly()) == b.poly();
}

/// Transformation with X^2 coefficient c2, a root of F2(a,b;X) with D12(c2) != 0.
template <class F>
TschirnCoeffs<F> recover_coeffs(const CubicTriple<F>& a, const CubicTriple<F>& b, const F& c2) {
    RecoveryFormulas<F> rf(a, b);
    if (!is_zero(resolvent_F2(a, b)(c2))) throw precondition_error("F2(a,b;c2) != 0", "c2 is not a root of F2");
    const F d = rf.D12()(c2);
    if (is_zero(d)) throw precondition_error("D12(c2) = 0", "multiple root of F2; use the degenerate branch root");
    const F c1 = rf.Q12()(c2) / d;
    TschirnCoeffs<F> c{rf.u0(c1, c2), c1, c2};
    if (!verify_transformation(a, b, c)) throw std::logic_error("recovered coefficients fail the resultant check");
    return c;
}

/// F2(a,b;X) = (X - r2)^2 (X - r1) * cubic on the degenerate locus.
struct DegenerateSplit {
    Rat double_root;
    Rat simple_root;
    Poly<Rat> cubic;

    Poly<Rat> expand() const {
        const Poly<Rat> d = Poly<Rat>::linear_root(double_root);
        return d * d * Poly<Rat>::linear_root(simple_root) * cubic;
    }
};

inline DegenerateSplit degenerate_factorization(const CubicTriple<Rat>& a, const CubicTriple<Rat>& b) {
    RecoveryFormulas<Rat> rf(a, b);
    const Rat &Aa = rf.is.A, &Ab = rf.it.A, &Bb = rf.it.B;
    if (!rf.W().is_zero()) throw precondition_error("A_a^3 B_b^2 - 27 A_b^3 D_a != 0", "pair is not degenerate");
    if (Aa.is_zero() || Ab.is_zero()) throw precondition_error("A_a A_b = 0", "normalise A = 0 first");
    if (!is_irreducible_q(a.poly())) throw precondition_error("f(a) reducible", "degenerate branch needs irreducible f(a)");
    const Rat q = Ab * Ab / (Aa * Bb);
    const Rat q2 = q * q;
    DegenerateSplit out{Rat(3) * q, Rat(-6) * q,
                        Poly<Rat>(std::vector<Rat>{Rat(-27) * q2 * q * (Rat(2) * Ab * Ab * Ab - Bb * Bb) / (Ab * Ab * Ab),
                                                   Rat(-27) * q2, Rat(0), Rat(1)})};
    if (!(out.expand() == resolvent_F2(a, b))) throw std::logic_error("degenerate factorisation does not re-expand to F2");
    return out;
}

namespace detail {

/// f(a) -> (0, -3, B + 1/B) through Y = Z + Z^2/B, Z = 3X - a1 (so Z^3 = B when A = 0).
inline std::pair<CubicTriple<Rat>, TschirnCoeffs<Rat>> normalise_A_zero(const CubicTriple<Rat>& a) {
    const Rat B = cubic_invariants(a).B;
    if (B.is_zero()) throw precondition_error("B_a = 0", "A = B = 0 means a triple root");
    Rat lambda(1);
    if (B * B == Rat(1)) lambda = Rat(2);
    const Rat a1 = a.a1, l = lambda;
    TschirnCoeffs<Rat> c{-a1 + l * a1 * a1 / B, Rat(3) - Rat(6) * l * a1 / B, Rat(9) * l / B};
    CubicTriple<Rat> t{Rat(0), Rat(-3) * l, B + l * l * l / B};
    if (!verify_transformation(a, t, c)) throw std::logic_error("A = 0 normalisation failed the resultant check");
    return {t, c};
}

/// c(p(X)) mod f(a), i.e. apply p then c.
inline TschirnCoeffs<Rat> compose_coeffs(const CubicTriple<Rat>& a, const TschirnCoeffs<Rat>& p, const TschirnCoeffs<Rat>& c) {
    const Poly<Rat> r = compose(c.poly(), p.poly()) % a.poly();
    return {r.coeff(0), r.coeff(1), r.coeff(2)};
}

/// Inverse of p : f(a) -> f(b) for irreducible f(a): express X as a quadratic in y = p(X).
inline TschirnCoeffs<Rat> invert(const CubicTriple<Rat>& a, const TschirnCoeffs<Rat>& p) {
    const Poly<Rat> f = a.poly();
    Matrix<Rat> M(3, std::vector<Rat>(3, Rat(0)));
    Poly<Rat> pw = Poly<Rat>::constant(Rat(1));
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) M[i][j] = pw.coeff(i);
        pw = (pw * p.poly()) % f;
    }
    auto e = solve_linear(M, std::vector<Rat>{Rat(0), Rat(1), Rat(0)});
    return {e[0], e[1], e[2]};
}

}  // namespace detail

struct SameSplitting {
    bool same = false;
    std::optional<TschirnCoeffs<Rat>> witness;
    bool degenerate = false;
    bool normalised_a = false, normalised_b = false;
    /// f(a) reducible: decided by Galois type and quadratic field, outside the resolvent criterion.
    bool reducible_fallback = false;
};

/**
 * Decides Spl f(a) = Spl f(b) over Q. For irreducible f(a) this is the
 * rational-root test on F2(a,b) (after moving A = 0 cubics to A != 0), with
 * the simple root -6 A_b^2 / (A_a B_b) on the degenerate locus. Witnesses map
 * the original f(a) to the original f(b).
 */
inline SameSplitting decide_same_splitting(const CubicTriple<Rat>& a, const CubicTriple<Rat>& b) {
    if (cubic_invariants(a).D.is_zero()) throw precondition_error("D_a = 0", "inseparable cubic");
    if (cubic_invariants(b).D.is_zero()) throw precondition_error("D_b = 0", "inseparable cubic");
    SameSplitting out;
    const GaloisType ga = galois_type(a), gb = galois_type(b);
    if (ga != gb) return out;
    if (ga == GaloisType::C2 || ga == GaloisType::Id) {
        out.reducible_fallback = true;
        out.same = ga == GaloisType::Id || is_square(cubic_invariants(a).D * cubic_invariants(b).D);
        return out;
    }

    CubicTriple<Rat> an = a, bn = b;
    std::optional<TschirnCoeffs<Rat>> to_an, to_bn;
    if (cubic_invariants(a).A.is_zero()) {
        auto [t, c] = detail::normalise_A_zero(a);
        an = t;
        to_an = c;
        out.normalised_a = true;
    }
    if (cubic_invariants(b).A.is_zero()) {
        auto [t, c] = detail::normalise_A_zero(b);
        bn = t;
        to_bn = c;
        out.normalised_b = true;
    }

    RecoveryFormulas<Rat> rf(an, bn);
    std::optional<Rat> c2;
    if (rf.W().is_zero()) {
        out.degenerate = true;
        c2 = degenerate_factorization(an, bn).simple_root;
    } else {
        auto roots = rational_roots(resolvent_F2(an, bn));
        if (roots.empty()) return out;
        c2 = *std::min_element(roots.begin(), roots.end(), height_less);
    }
    TschirnCoeffs<Rat> w = recover_coeffs(an, bn, *c2);
    if (to_an) w = detail::compose_coeffs(a, *to_an, w);
    if (to_bn) w = detail::compose_coeffs(a, w, detail::invert(b, *to_bn));
    if (!verify_transformation(a, b, w)) throw std::logic_error("composed witness fails the resultant check");
    out.same = true;
    out.witness = w;
    return out;
}

/**
 * All transformations f(a) -> f(b) over Q: pairs of rational roots (u2, u1)
 * of F2 and F1, u0 from the linear trace relation, kept when u0 is a root of
 * F0 and the resultant check passes. Sorted by (height of c2, c1, c0).
 */
inline std::vector<TschirnCoeffs<Rat>> all_witnesses(const CubicTriple<Rat>& a, const CubicTriple<Rat>& b) {
    RecoveryFormulas<Rat> rf(a, b);
    const Poly<Rat> f0 = resolvent_F0(a, b);
    std::vector<TschirnCoeffs<Rat>> out;
    for (const Rat& u2 : rational_roots(resolvent_F2(a, b)))
        for (const Rat& u1 : rational_roots(resolvent_F1(a, b))) {
            TschirnCoeffs<Rat> c{rf.u0(u1, u2), u1, u2};
            if (!f0(c.c0).is_zero()) continue;
            if (verify_transformation(a, b, c)) out.push_back(c);
        }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (!(x.c2 == y.c2)) return height_less(x.c2, y.c2);
        if (!(x.c1 == y.c1)) return height_less(x.c1, y.c1);
        return height_less(x.c0, y.c0);
    });
    return out;
}

enum class Relation { Equal, ProperContains, QuadraticMeet, TrivialMeet, ContainsQuadratic, NotContains };

inline const char* to_string(Relation r) {
    switch (r) {
        case Relation::Equal: return "Equal";
        case Relation::ProperContains: return "ProperContains";
        case Relation::QuadraticMeet: return "QuadraticMeet";
        case Relation::TrivialMeet: return "TrivialMeet";
        case Relation::ContainsQuadratic: return "ContainsQuadratic";
        case Relation::NotContains: return "NotContains";
    }
    return "?";
}

struct TableRow {
    GaloisType ga, gb;
    Relation relation;
    std::vector<int> pattern;
};

/// Decomposition types of F2(a,b;X) over Q by (G_a, G_b, relation), #G_a >= #G_b.
inline const std::vector<TableRow>& subfield_table() {
    static const std::vector<TableRow> rows{
        {GaloisType::S3, GaloisType::S3, Relation::TrivialMeet, {6}},
        {GaloisType::S3, GaloisType::S3, Relation::QuadraticMeet, {3, 3}},
        {GaloisType::S3, GaloisType::S3, Relation::Equal, {1, 2, 3}},
        {GaloisType::S3, GaloisType::C3, Relation::TrivialMeet, {6}},
        {GaloisType::S3, GaloisType::C2, Relation::NotContains, {6}},
        {GaloisType::S3, GaloisType::C2, Relation::ContainsQuadratic, {3, 3}},
        {GaloisType::S3, GaloisType::Id, Relation::ProperContains, {6}},
        {GaloisType::C3, GaloisType::C3, Relation::TrivialMeet, {3, 3}},
        {GaloisType::C3, GaloisType::C3, Relation::Equal, {1, 1, 1, 3}},
        {GaloisType::C3, GaloisType::C2, Relation::TrivialMeet, {6}},
        {GaloisType::C3, GaloisType::Id, Relation::ProperContains, {3, 3}},
    };
    return rows;
}

inline const TableRow* find_table_row(GaloisType ga, GaloisType gb, Relation r) {
    for (const auto& row : subfield_table())
        if (row.ga == ga && row.gb == gb && row.relation == r) return &row;
    return nullptr;
}

inline std::string pattern_string(const std::vector<int>& p) {
    std::string s;
    for (int d : p) s += "(" + std::to_string(d) + ")";
    return s;
}

/// "(1)^2(1)(3)" style: degree with multiplicity exponent when > 1.
inline std::string pattern_string(const std::vector<std::pair<int, int>>& p) {
    std::string s;
    for (auto [d, m] : p) s += "(" + std::to_string(d) + ")" + (m > 1 ? "^" + std::to_string(m) : "");
    return s;
}

struct SubfieldReport {
    CubicTriple<Rat> a, b;  // after ordering
    bool swapped = false;
    GaloisType ga{}, gb{};
    Relation relation{};
    std::vector<int> predicted_pattern;  // empty on the degenerate locus
    std::vector<int> observed_pattern;                  // degrees repeated by multiplicity
    std::vector<std::pair<int, int>> observed_factors;  // (degree, multiplicity), ascending
    bool degenerate = false;
    std::optional<TschirnCoeffs<Rat>> witness;

    bool consistent() const { return degenerate || predicted_pattern == observed_pattern; }
};

/**
 * Relation between Spl f(a) and Spl f(b) and the factorisation pattern of
 * F2(a,b;X). The relation is computed from the Galois types, the same-field
 * decision and squareness of D_a D_b; the pattern is then read from the table
 * and compared with the factorisation.
 */
inline SubfieldReport classify_subfield(const CubicTriple<Rat>& a_in, const CubicTriple<Rat>& b_in) {
    SubfieldReport r;
    r.a = a_in;
    r.b = b_in;
    r.ga = galois_type(a_in);
    r.gb = galois_type(b_in);
    if (group_order(r.ga) < group_order(r.gb)) {
        std::swap(r.a, r.b);
        std::swap(r.ga, r.gb);
        r.swapped = true;
    }
    if (r.ga != GaloisType::S3 && r.ga != GaloisType::C3)
        throw precondition_error("f(a) reducible", "both cubics reducible; the subfield table needs an irreducible f(a)");

    const Rat Da = cubic_invariants(r.a).D, Db = cubic_invariants(r.b).D;
    switch (r.gb) {
        case GaloisType::S3:
        case GaloisType::C3: {
            auto same = decide_same_splitting(r.a, r.b);
            if (same.same) {
                r.relation = Relation::Equal;
                r.witness = same.witness;
            } else if (r.ga == GaloisType::S3 && r.gb == GaloisType::S3 && is_square(Da * Db)) {
                r.relation = Relation::QuadraticMeet;
            } else {
                r.relation = Relation::TrivialMeet;
            }
            break;
        }
        case GaloisType::C2:
            if (r.ga == GaloisType::S3)
                r.relation = is_square(Da * Db) ? Relation::ContainsQuadratic : Relation::NotContains;
            else
                r.relation = Relation::TrivialMeet;
            break;
        case GaloisType::Id: r.relation = Relation::ProperContains; break;
    }

    r.degenerate = RecoveryFormulas<Rat>(r.a, r.b).W().is_zero();
    const auto fac = factor_over_q(resolvent_F2(r.a, r.b));
    r.observed_pattern = fac.degree_pattern();
    for (const auto& f : fac.factors) r.observed_factors.push_back({f.poly.degree(), f.multiplicity});
    std::sort(r.observed_factors.begin(), r.observed_factors.end());
    if (!r.degenerate) {
        const TableRow* row = find_table_row(r.ga, r.gb, r.relation);
        if (!row) throw std::logic_error("no table row for the computed relation");
        r.predicted_pattern = row->pattern;
    }
    return r;
}

}  // namespace tschirn
