#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rat.hpp"

namespace tschirn {

/**
 * Parameter triple (a1, a2, a3) of f(a; X) = X^3 - a1 X^2 + a2 X - a3.
 * The signs alternate, so a_i is the i-th elementary symmetric function
 * of the roots.
 */
template <class F>
struct CubicTriple {
    F a1, a2, a3;

    static CubicTriple from_monic(const F& c2, const F& c1, const F& c0) { return {-c2, c1, -c0}; }

    static CubicTriple from_roots(const F& x1, const F& x2, const F& x3) {
        return {x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3, x1 * x2 * x3};
    }

    /// Monic cubic; throws unless deg f = 3.
    static CubicTriple from_poly(const Poly<F>& f) {
        if (f.degree() != 3) throw precondition_error("deg f != 3", "not a cubic");
        Poly<F> m = f.monic();
        return from_monic(m.coeff(2), m.coeff(1), m.coeff(0));
    }

    Poly<F> poly() const { return Poly<F>(std::vector<F>{-a3, a2, -a1, one_like(a1)}, a1); }

    friend bool operator==(const CubicTriple& x, const CubicTriple& y) {
        return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3;
    }
};

template <class F>
std::string to_string(const CubicTriple<F>& t) {
    return to_string(t.a1) + "," + to_string(t.a2) + "," + to_string(t.a3);
}

template <class F>
std::ostream& operator<<(std::ostream& os, const CubicTriple<F>& t) {
    return os << "(" << to_string(t) << ")";
}

template <class F>
struct CubicInvariants {
    F A, B, C, D, E;
};

/**
 * A, B, C, D, E of a triple. D is taken from the closed form and checked
 * against the resultant discriminant of the cubic.
 */
template <class F>
CubicInvariants<F> cubic_invariants(const CubicTriple<F>& t) {
    const F& s1 = t.a1;
    const F& s2 = t.a2;
    const F& s3 = t.a3;
    auto k = [&](long n) { return int_like(s1, n); };
    CubicInvariants<F> r;
    r.A = s1 * s1 - k(3) * s2;
    r.B = k(2) * s1 * s1 * s1 - k(9) * s1 * s2 + k(27) * s3;
    r.C = s1 * s1 * s1 * s1 - k(4) * s1 * s1 * s2 + s2 * s2 + k(6) * s1 * s3;
    r.D = s1 * s1 * s2 * s2 - k(4) * s2 * s2 * s2 - k(4) * s1 * s1 * s1 * s3 + k(18) * s1 * s2 * s3 -
          k(27) * s3 * s3;
    r.E = s1 * s2 - k(9) * s3;
    if (!(discriminant(t.poly()) == r.D)) throw std::logic_error("closed-form discriminant disagrees with Res(f, f')");
    return r;
}

/// Parses "a1,a2,a3" (three rationals).
inline CubicTriple<Rat> parse_triple(const std::string& text) {
    std::vector<Rat> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Rat::parse(item));
    if (v.size() != 3) throw parse_error("expected three comma-separated rationals, got '" + text + "'");
    return {v[0], v[1], v[2]};
}

/// Parses monic coefficients "c2,c1,c0" of X^3 + c2 X^2 + c1 X + c0.
inline CubicTriple<Rat> parse_monic(const std::string& text) {
    auto t = parse_triple(text);
    return CubicTriple<Rat>::from_monic(t.a1, t.a2, t.a3);
}

/// Shanks' simplest cubic X^3 - m X^2 - (m+3) X - 1.
template <class F>
CubicTriple<F> shanks_triple(const F& m) {
    return {m, -(m + int_like(m, 3)), one_like(m)};
}

/// X^3 + s X + s.
template <class F>
CubicTriple<F> one_param_triple(const F& s) {
    return {zero_like(s), s, -s};
}

}  // namespace tschirn
