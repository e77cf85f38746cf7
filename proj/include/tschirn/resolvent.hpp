#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "recovery.hpp"

namespace tschirn {

namespace detail {

/// Monic sextic from the coefficients of X^5, X^4, ..., X^0.
template <class F>
Poly<F> sextic(const F& c5, const F& c4, const F& c3, const F& c2, const F& c1, const F& c0) {
    return Poly<F>(std::vector<F>{c0, c1, c2, c3, c4, c5, one_like(c0)}, c0);
}

template <class F>
Poly<F> monic_cubic(const F& c2, const F& c1, const F& c0) {
    return Poly<F>(std::vector<F>{c0, c1, c2, one_like(c0)}, c0);
}

template <class F>
void require_nonzero(const F& x, const std::string& expr, const std::string& why) {
    if (is_zero(x)) throw precondition_error(expr + " = 0", why);
}

template <class F>
void require_char(const F& x, bool three) {
    const bool is3 = characteristic(x) == 3;
    if (three && !is3) throw precondition_error("char != 3", "formula is specific to characteristic 3");
    if (!three && is3) throw precondition_error("char = 3", "formula requires characteristic != 3");
}

}  // namespace detail

/**
 * F2(s,t;X) = prod (X - u2^g): the sextic whose roots are the X^2 coefficients
 * of the six Tschirnhausen transformations from f(s) to f(t).
 */
template <class F>
Poly<F> resolvent_F2(const CubicTriple<F>& s, const CubicTriple<F>& t) {
    const auto is = cubic_invariants(s), it = cubic_invariants(t);
    detail::require_nonzero(is.D, "D_s", "first cubic inseparable");
    const F &As = is.A, &Ds = is.D, &At = it.A, &Bt = it.B, &Dt = it.D;
    const F two = int_like(As, 2), Ds2 = Ds * Ds;
    return detail::sextic(zero_like(As), -(two * As * At / Ds), Bt / Ds, As * As * At * At / Ds2,
                          -(As * At * Bt / Ds2), (At * At * At * Ds - As * As * As * Dt) / (Ds2 * Ds));
}

/// F1(s,t;X): roots are the X coefficients u1^g.
template <class F>
Poly<F> resolvent_F1(const CubicTriple<F>& s, const CubicTriple<F>& t) {
    const auto is = cubic_invariants(s), it = cubic_invariants(t);
    detail::require_nonzero(is.D, "D_s", "first cubic inseparable");
    const F &Cs = is.C, &Ds = is.D, &At = it.A, &Bt = it.B, &Dt = it.D;
    const F e = s.a1 * s.a2 - s.a3;
    const F two = int_like(Cs, 2), Ds2 = Ds * Ds;
    return detail::sextic(zero_like(Cs), -(two * At * Cs / Ds), -(e * Bt / Ds), At * At * Cs * Cs / Ds2,
                          e * At * Bt * Cs / Ds2, (e * e * At * At * At * Ds - Cs * Cs * Cs * Dt) / (Ds2 * Ds));
}

/// Closed form of the discriminant of F2(s,t;X): B_s^6 D_t^3 W^2 / D_s^15.
template <class F>
F resolvent_F2_discriminant(const CubicTriple<F>& s, const CubicTriple<F>& t) {
    RecoveryFormulas<F> r(s, t);
    detail::require_nonzero(r.is.D, "D_s", "first cubic inseparable");
    const F W = r.W();
    return fpow(r.is.B, 6) * fpow(r.it.D, 3) * W * W / fpow(r.is.D, 15);
}

/// F2 in characteristic 3.
template <class F>
Poly<F> resolvent_F2_char3(const CubicTriple<F>& s, const CubicTriple<F>& t) {
    detail::require_char(s.a1, true);
    detail::require_nonzero(s.a1, "s1", "char-3 formula needs s1 != 0");
    detail::require_nonzero(t.a1, "t1", "char-3 formula needs t1 != 0");
    const F &s1 = s.a1, &t1 = t.a1;
    const F Ds = s1 * s1 * s.a2 * s.a2 - s.a2 * s.a2 * s.a2 - s1 * s1 * s1 * s.a3;
    const F Dt = t1 * t1 * t.a2 * t.a2 - t.a2 * t.a2 * t.a2 - t1 * t1 * t1 * t.a3;
    detail::require_nonzero(Ds, "D_s", "first cubic inseparable");
    const F s12 = s1 * s1, t12 = t1 * t1, Ds2 = Ds * Ds;
    return detail::sextic(zero_like(s1), s12 * t12 / Ds, -(t12 * t1 / Ds), s12 * s12 * t12 * t12 / Ds2,
                          s12 * t12 * t12 * t1 / Ds2,
                          (fpow(t1, 6) * Ds - fpow(s1, 6) * Dt) / (Ds2 * Ds));
}

/// Closed forms for depressed cubics X^3 + S2 X - S3 and X^3 + T2 X - T3.
template <class F>
Poly<F> resolvent_F0_depressed(const F& S2, const F& S3, const F& T2, const F& T3) {
    auto k = [&](long n) { return int_like(S2, n); };
    const F D = -(k(4) * S2 * S2 * S2) - k(27) * S3 * S3;
    detail::require_nonzero(D, "D_S", "first cubic inseparable");
    const F S23 = S2 * S2 * S2, S26 = S23 * S23, D2 = D * D;
    return detail::sextic(zero_like(S2), -(k(8) * S23 * T2 / D), k(8) * S23 * T3 / D, k(16) * S26 * T2 * T2 / D2,
                          -(k(32) * S26 * T2 * T3 / D2),
                          k(64) * S26 * (S3 * S3 * T2 * T2 * T2 - S23 * T3 * T3) / (D2 * D));
}

template <class F>
Poly<F> resolvent_F1_depressed(const F& S2, const F& S3, const F& T2, const F& T3) {
    auto k = [&](long n) { return int_like(S2, n); };
    const F D = -(k(4) * S2 * S2 * S2) - k(27) * S3 * S3;
    detail::require_nonzero(D, "D_S", "first cubic inseparable");
    const F S22 = S2 * S2, S23 = S22 * S2, S26 = S23 * S23, T23 = T2 * T2 * T2, D2 = D * D;
    return detail::sextic(zero_like(S2), k(6) * S22 * T2 / D, k(27) * S3 * T3 / D, k(9) * S22 * S22 * T2 * T2 / D2,
                          k(81) * S22 * S3 * T2 * T3 / D2,
                          (k(4) * S26 * T23 + k(108) * S23 * S3 * S3 * T23 + k(729) * fpow(S3, 4) * T23 +
                           k(27) * S26 * T3 * T3) /
                              (D2 * D));
}

template <class F>
Poly<F> resolvent_F2_depressed(const F& S2, const F& S3, const F& T2, const F& T3) {
    auto k = [&](long n) { return int_like(S2, n); };
    const F D = -(k(4) * S2 * S2 * S2) - k(27) * S3 * S3;
    detail::require_nonzero(D, "D_S", "first cubic inseparable");
    const F D2 = D * D;
    return detail::sextic(zero_like(S2), -(k(18) * S2 * T2 / D), k(27) * T3 / D, k(81) * S2 * S2 * T2 * T2 / D2,
                          -(k(243) * S2 * T2 * T3 / D2),
                          k(729) * (S3 * S3 * T2 * T2 * T2 - S2 * S2 * S2 * T3 * T3) / (D2 * D));
}

/// F0 in characteristic 3 with s1 = t1 = 0.
template <class F>
Poly<F> resolvent_F0_char3_depressed(const F& s2, const F& s3, const F& t2, const F& t3) {
    detail::require_char(s2, true);
    detail::require_nonzero(s2, "s2", "char-3 branch with s1 = 0 needs s2 != 0");
    const F s23 = s2 * s2 * s2;
    return detail::sextic(zero_like(s2), -t2, t3, t2 * t2, t2 * t3,
                          (s23 * t3 * t3 - s3 * s3 * t2 * t2 * t2) / s23);
}

namespace detail {

/// charpoly of u0 = N(Y) / (3 D12(Y)) on k[Y]/(F2); false when D12 is not invertible there.
template <class F>
bool transport_F0(const CubicTriple<F>& s, const CubicTriple<F>& t, Poly<F>& out) {
    RecoveryFormulas<F> rf(s, t);
    const Poly<F> f2 = resolvent_F2(s, t);
    const Poly<F> d = rf.D12() * int_like(s.a1, 3);
    if (d.is_zero()) return false;
    auto [g, inv, unused] = ext_gcd(d, f2);
    (void)unused;
    if (g.degree() != 0) return false;
    const Poly<F> r = (rf.u0_numerator() * inv) % f2;
    out = charpoly(multiplication_matrix(f2, r));
    return true;
}

/// char 3, s1 t1 != 0: u0 is a quadratic polynomial in u2.
template <class F>
Poly<F> transport_F0_char3(const CubicTriple<F>& s, const CubicTriple<F>& t) {
    const F &s1 = s.a1, &s2 = s.a2, &t1 = t.a1, &t2 = t.a2;
    const F Ds = s1 * s1 * s2 * s2 - s2 * s2 * s2 - s1 * s1 * s1 * s.a3;
    const F den = s1 * s1 * t1;
    Poly<F> r(std::vector<F>{(s2 * t1 * t1 - s1 * s1 * t2) / den, -(s2 * t1 * (s1 * s1 - s2)) / den, -Ds / den},
              s1);
    return charpoly(multiplication_matrix(resolvent_F2_char3(s, t), r));
}

/**
 * Value at mu = 0 of a polynomial-valued function of degree <= deg in mu,
 * given sample(mu, out) that fails at finitely many mu. Uses deg + 1 good
 * points and checks one more.
 */
template <class F, class Sample>
Poly<F> continue_to_zero(const F& like, std::size_t deg, Sample sample) {
    const F zero = zero_like(like), one = one_like(like);
    const std::uint64_t q = field_order(like);
    std::vector<F> mus;
    std::vector<Poly<F>> values;
    for (std::uint64_t i = 1; values.size() < deg + 2 && i < 4096 && (q == 0 || i < q); ++i) {
        const F mu = nth_like(like, i);
        Poly<F> v(zero);
        if (!sample(mu, v)) continue;
        mus.push_back(mu);
        values.push_back(v);
    }
    if (values.size() < deg + 2)
        throw precondition_error("D12 | F2", "degenerate pair and too few nondegenerate continuation points");
    auto interpolate = [&](const F& at) {
        Poly<F> acc(zero);
        for (std::size_t j = 0; j <= deg; ++j) {
            F w = one;
            for (std::size_t m = 0; m <= deg; ++m)
                if (m != j) w = w * (at - mus[m]) / (mus[j] - mus[m]);
            acc += values[j] * w;
        }
        return acc;
    };
    if (!(interpolate(mus[deg + 1]) == values[deg + 1]))
        throw std::logic_error("continuation is not polynomial of the expected degree");
    return interpolate(zero);
}

}  // namespace detail

/**
 * F0(s,t;X): roots are the constant terms u0^g.
 *
 * Direct route: char != 3 transports the roots of F2 through
 * u0 = N(u2)/(3 D12(u2)); char 3 with s1 t1 != 0 uses u0 as a polynomial in
 * u2, and s1 = t1 = 0 has a closed form.
 *
 * Otherwise (W = 0, B_s = 0, or one of s1, t1 zero in char 3) the result is
 * continued along a line. Along s + mu*v the coefficients of D_s^3 F0 are
 * polynomials of degree <= 18 in mu; along t + mu*(1,0,0) the coefficients of
 * F0 have degree <= 6.
 */
template <class F>
Poly<F> resolvent_F0(const CubicTriple<F>& s, const CubicTriple<F>& t) {
    const F zero = zero_like(s.a1);
    const bool char3 = characteristic(zero) == 3;
    const F Ds = cubic_invariants(s).D;
    detail::require_nonzero(Ds, "D_s", "first cubic inseparable");

    if (char3) {
        if (is_zero(s.a1) && is_zero(t.a1)) return resolvent_F0_char3_depressed(s.a2, s.a3, t.a2, t.a3);
        if (!is_zero(s.a1) && !is_zero(t.a1)) return detail::transport_F0_char3(s, t);
        if (is_zero(t.a1))
            return detail::continue_to_zero(zero, 6, [&](const F& mu, Poly<F>& out) {
                out = detail::transport_F0_char3(s, CubicTriple<F>{t.a1 + mu, t.a2, t.a3});
                return true;
            });
    } else {
        Poly<F> out(zero);
        if (detail::transport_F0(s, t, out)) return out;
    }

    const F two = int_like(zero, 2), five = int_like(zero, 5), one = one_like(zero);
    const CubicTriple<F> v = char3 ? CubicTriple<F>{one, zero, zero} : CubicTriple<F>{one, two, five};
    Poly<F> cleared = detail::continue_to_zero(zero, 18, [&](const F& mu, Poly<F>& out) {
        const CubicTriple<F> sl{s.a1 + mu * v.a1, s.a2 + mu * v.a2, s.a3 + mu * v.a3};
        const F Dl = cubic_invariants(sl).D;
        if (is_zero(Dl)) return false;
        if (char3) {
            out = detail::transport_F0_char3(sl, t);
        } else if (!detail::transport_F0(sl, t, out)) {
            return false;
        }
        out = out * (Dl * Dl * Dl);
        return true;
    });
    return cleared * (one / (Ds * Ds * Ds));
}

/// G2(s,t;X) = F2(0,s,-s,0,t,-t;X).
template <class F>
Poly<F> resolvent_G2(const F& s, const F& t) {
    auto k = [&](long n) { return int_like(s, n); };
    const F D = -(s * s * (k(4) * s + k(27)));
    detail::require_nonzero(D, "s(4s+27)", "X^3+sX+s inseparable");
    const F D2 = D * D;
    return detail::sextic(zero_like(s), -(k(18) * s * t / D), -(k(27) * t / D), k(81) * s * s * t * t / D2,
                          k(243) * s * t * t / D2, -(k(729) * s * s * t * t * (s - t) / (D2 * D)));
}

/// G0(s,t;X) = F0(0,s,-s,0,t,-t;X) in characteristic 3.
template <class F>
Poly<F> resolvent_G0_char3(const F& s, const F& t) {
    detail::require_char(s, true);
    detail::require_nonzero(s, "s", "X^3+sX+s inseparable");
    return detail::sextic(zero_like(s), -t, -t, t * t, -(t * t), t * t * (s - t) / s);
}

/// H(a,b;X) = a (X^2+9X-3a)^3 - b (X^3-2aX^2-9aX-2a^2-27a)^2.
template <class F>
Poly<F> resolvent_H(const F& a, const F& b) {
    auto k = [&](long n) { return int_like(a, n); };
    const Poly<F> q(std::vector<F>{-(k(3) * a), k(9), k(1)}, a);
    const Poly<F> c(std::vector<F>{-(k(2) * a * a) - k(27) * a, -(k(9) * a), -(k(2) * a), k(1)}, a);
    return q * q * q * a - c * c * b;
}

/// (F2+, F2-) for Shanks cubics m, n; F2+ F2- = F2(shanks(m), shanks(n)).
template <class F>
std::pair<Poly<F>, Poly<F>> cyclic_F2_pm(const F& m, const F& n) {
    auto k = [&](long v) { return int_like(m, v); };
    const F da = m * m + k(3) * m + k(9), db = n * n + k(3) * n + k(9);
    detail::require_nonzero(da, "m^2+3m+9", "Shanks cubic inseparable");
    const F r = db / da;
    return {detail::monic_cubic(zero_like(m), -r, -((m - n) * r / da)),
            detail::monic_cubic(zero_like(m), -r, (m + n + k(3)) * r / da)};
}

/// g+ and g-: Tschirnhausen forms of F2+ and F2-.
template <class F>
std::pair<Poly<F>, Poly<F>> cyclic_g_pm(const F& m, const F& n) {
    auto k = [&](long v) { return int_like(m, v); };
    const F dp = k(2) * m * n + k(3) * m + k(3) * n + k(18);
    const F dm = k(2) * m * n + k(3) * m + k(3) * n - k(9);
    detail::require_nonzero(dp, "2mn+3m+3n+18", "g+ undefined");
    detail::require_nonzero(dm, "2mn+3m+3n-9", "g- undefined");
    return {detail::monic_cubic(k(3) * (m * n + k(6) * m - k(3) * n + k(9)) / dp,
                                -(k(3) * (m * n - k(3) * m + k(6) * n + k(9)) / dp), -k(1)),
            detail::monic_cubic(k(3) * (m * n - k(3) * m - k(3) * n - k(18)) / dm,
                                -(k(3) * (m * n + k(6) * m + k(6) * n + k(9)) / dm), -k(1))};
}

/// h+ and h- in Z = (X-1)/(X+2).
template <class F>
std::pair<Poly<F>, Poly<F>> cyclic_h_pm(const F& m, const F& n) {
    auto k = [&](long v) { return int_like(m, v); };
    const F dp = m - n, dm = m + n + k(3);
    detail::require_nonzero(dp, "m-n", "h+ undefined");
    detail::require_nonzero(dm, "m+n+3", "h- undefined");
    return {detail::monic_cubic(-((m * n + k(3) * n + k(9)) / dp), -((m * n + k(3) * m + k(9)) / dp), -k(1)),
            detail::monic_cubic((m * n + k(3) * m + k(3) * n) / dm, (m * n - k(9)) / dm, -k(1))};
}

enum class SexticPair { S3S3, S3C3, S3C2, S3Id, C3C2 };

inline const char* to_string(SexticPair p) {
    switch (p) {
        case SexticPair::S3S3: return "S3xS3";
        case SexticPair::S3C3: return "S3xC3";
        case SexticPair::S3C2: return "S3xC2";
        case SexticPair::S3Id: return "S3x1";
        case SexticPair::C3C2: return "C3xC2";
    }
    return "?";
}

/// The specialisation (a, b) behind each sextic family, and whether X is rescaled by 3.
template <class F>
struct SexticDefinition {
    CubicTriple<F> a, b;
    bool scaled;
};

template <class F>
SexticDefinition<F> sextic_definition(SexticPair pair, const F& s, const F& t) {
    const F z = zero_like(s), one = one_like(s);
    switch (pair) {
        case SexticPair::S3S3: return {one_param_triple(s), one_param_triple(t), true};
        case SexticPair::S3C3: return {one_param_triple(s), shanks_triple(t), false};
        case SexticPair::S3C2: return {one_param_triple(s), {z, -t, z}, true};
        case SexticPair::S3Id: return {one_param_triple(s), {z, -one, z}, true};
        case SexticPair::C3C2: return {shanks_triple(s), {z, -t, z}, false};
    }
    throw precondition_error("pair", "unknown sextic family");
}

/// Displayed sextics g^(H1,H2)(s,t;X), char != 3. S3x1 ignores t.
template <class F>
Poly<F> sextic_generic(SexticPair pair, const F& s, const F& t) {
    detail::require_char(s, false);
    auto k = [&](long v) { return int_like(s, v); };
    const F z = zero_like(s), one = one_like(s);
    const F q = k(4) * s + k(27);
    if (pair != SexticPair::C3C2) detail::require_nonzero(s * q, "s(4s+27)", "X^3+sX+s inseparable");
    const F sq = s * q;
    switch (pair) {
        case SexticPair::S3S3:
            return detail::sextic(z, k(2) * t / sq, t / (s * sq), t * t / (sq * sq), t * t / (s * sq * sq),
                                  (s - t) * t * t / (s * sq * sq * sq));
        case SexticPair::S3C3: {
            const F e = t * t + k(3) * t + k(9), u = k(2) * t + k(3);
            return detail::sextic(z, -(k(6) * e / sq), -(u * e / (s * sq)), k(9) * e * e / (sq * sq),
                                  k(3) * u * e * e / (s * sq * sq),
                                  e * e *
                                      (k(4) * s * t * t + k(27) * t * t + k(12) * s * t + k(9) * s + k(81) * t +
                                       k(243)) /
                                      (s * sq * sq * sq));
        }
        case SexticPair::S3C2:
            return detail::sextic(z, -(k(2) * t / sq), z, t * t / (sq * sq), z, t * t * t / (s * sq * sq * sq));
        case SexticPair::S3Id:
            return detail::sextic(z, -(k(2) / sq), z, one / (sq * sq), z, one / (s * sq * sq * sq));
        case SexticPair::C3C2: {
            const F e = s * s + k(3) * s + k(9), u = k(2) * s + k(3);
            return detail::sextic(z, -(k(6) * t / e), z, k(9) * t * t / (e * e), z, -(u * u * t * t * t / fpow(e, 4)));
        }
    }
    throw precondition_error("pair", "unknown sextic family");
}

/**
 * Char-3 sextics g^(H1,H2)(1/s,t;X) = F0(a(1/s), b(t); X). With t1 = 0 the
 * roots of f(b) are stable under y -> y + c for c^3 + t2 c = 0, which forces
 * F0 = (X^3 + t2 X)^2 - sigma1 (X^3 + t2 X) + sigma2 and an X^4 coefficient
 * of 2 t2.
 */
template <class F>
Poly<F> sextic_generic_char3(SexticPair pair, const F& s, const F& t) {
    detail::require_char(s, true);
    const F z = zero_like(s), one = one_like(s);
    const F t2 = t * t, t3 = t2 * t;
    switch (pair) {
        case SexticPair::S3S3: return detail::sextic(z, -t, -t, t2, -t2, -(t2 * (s * t - one)));
        case SexticPair::S3C3:
            return detail::sextic(t, t * (t + one), s * t3 - t2 + one, -(t * (s * t3 - t + one)), -(t * (s * t3 + one)),
                                  s * s * t3 * t3 + s * t2 * t2 - s * t3 + one);
        case SexticPair::S3C2: return detail::sextic(z, t, z, t2, z, s * t3);
        case SexticPair::S3Id: return detail::sextic(z, one, z, one, z, s);
        case SexticPair::C3C2: {
            const F q = s * s + one;
            return detail::sextic(z, t, z, t2, z, -(s * s * q * q * t3));
        }
    }
    throw precondition_error("pair", "unknown sextic family");
}

/// Char-3 specialisation behind sextic_generic_char3 (parameter 1/s on the first cubic).
template <class F>
SexticDefinition<F> sextic_definition_char3(SexticPair pair, const F& s, const F& t) {
    detail::require_nonzero(s, "s", "parameter 1/s undefined");
    return sextic_definition(pair, one_like(s) / s, t);
}

/// h^{S3}(s;X) = X^6 - 2s(4s+27)X^4 + s^2(4s+27)^2 X^2 + s^2(4s+27)^3.
template <class F>
Poly<F> sextic_h_S3(const F& s) {
    auto k = [&](long v) { return int_like(s, v); };
    const F q = k(4) * s + k(27), z = zero_like(s);
    return detail::sextic(z, -(k(2) * s * q), z, s * s * q * q, z, s * s * q * q * q);
}

}  // namespace tschirn
