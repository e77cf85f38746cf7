#pragma once

#include <array>
#include <vector>

#include "cubic.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace tschirn {

/**
 * Rational expressions recovering (u0, u1) from u2 for a pair (s, t),
 * char != 3:
 *   u1 = Q12(u2) / D12(u2),  u0 = (t1 - s1 u1 - s1^2 u2 + 2 s2 u2) / 3,
 * and the D0_12 / h_i data with 1/D12 = (1/D0_12) sum h_i u2^i mod F2.
 */
template <class F>
struct RecoveryFormulas {
    CubicTriple<F> s, t;
    CubicInvariants<F> is, it;

    RecoveryFormulas(const CubicTriple<F>& s_, const CubicTriple<F>& t_)
        : s(s_), t(t_), is(cubic_invariants(s_)), it(cubic_invariants(t_)) {}

    F k(long n) const { return int_like(s.a1, n); }

    /// 3 A_s^2 B_t - A_t (6 A_s^3 - B_s^2 + 2 A_s B_s s1) u2 + 6 D_s (A_s^2 + B_s s1) u2^3
    Poly<F> Q12() const {
        const F &As = is.A, &Bs = is.B, &Ds = is.D, &At = it.A, &Bt = it.B, &s1 = s.a1;
        return Poly<F>(std::vector<F>{k(3) * As * As * Bt,
                                      -(At * (k(6) * As * As * As - Bs * Bs + k(2) * As * Bs * s1)),
                                      zero_like(s1), k(6) * Ds * (As * As + Bs * s1)},
                       s1);
    }

    /// 3 B_s (A_s A_t - 3 D_s u2^2)
    Poly<F> D12() const {
        return Poly<F>(std::vector<F>{k(3) * is.B * is.A * it.A, zero_like(s.a1), -(k(9) * is.B * is.D)}, s.a1);
    }

    /// A_s^3 B_t^2 - 27 A_t^3 D_s; zero exactly on the degenerate locus.
    F W() const { return is.A * is.A * is.A * it.B * it.B - k(27) * it.A * it.A * it.A * is.D; }

    /// 3 B_s W^2
    F D0_12() const { return k(3) * is.B * W() * W(); }

    std::array<F, 6> h() const {
        const F &As = is.A, &Ds = is.D, &At = it.A, &Bt = it.B, &Dt = it.D;
        const F As3 = As * As * As, At3 = At * At * At;
        return {k(4) * As * As * At * At * (As3 * Bt * Bt + k(27) * At3 * Ds - k(27) * Bt * Bt * Ds),
                k(27) * Bt * Ds * (k(4) * As3 * At3 + k(9) * At3 * Ds - k(9) * As3 * Dt),
                -(k(3) * As * At * Ds * (k(5) * As3 * Bt * Bt + k(135) * At3 * Ds - k(54) * Bt * Bt * Ds)),
                -(k(270) * As * As * At * At * Bt * Ds * Ds),
                k(9) * Ds * Ds * (As3 * Bt * Bt + k(27) * At3 * Ds),
                k(162) * As * At * Bt * Ds * Ds * Ds};
    }

    /// u0 from (u1, u2).
    F u0(const F& u1, const F& u2) const {
        return (t.a1 - s.a1 * u1 - s.a1 * s.a1 * u2 + k(2) * s.a2 * u2) / k(3);
    }

    /// Numerator N with u0 = N / (3 D12) as polynomials in u2.
    Poly<F> u0_numerator() const {
        Poly<F> lin(std::vector<F>{t.a1, k(2) * s.a2 - s.a1 * s.a1}, s.a1);
        return lin * D12() - Q12() * s.a1;
    }
};

}  // namespace tschirn
