#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tschirn {

/// x^e for any field element type (e >= 0).
template <class F>
F fpow(const F& x, long e) {
    F r = one_like(x), b = x;
    if (e < 0) return fpow(one_like(x) / x, -e);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace detail {
template <class F>
bool elem_is_zero(const F& x) { return is_zero(x); }
}  // namespace detail

/**
 * Dense univariate polynomial over a field, coefficients stored constant term
 * first, trailing zeros stripped. The zero polynomial keeps a zero element of
 * its field so that runtime-parameterised fields (F_p, GF(p^k)) stay typed.
 */
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(const F& proto) : zero_(zero_like(proto)) {}
    Poly(std::vector<F> c, const F& proto) : c_(std::move(c)), zero_(zero_like(proto)) { trim(); }
    explicit Poly(std::vector<F> c) : c_(std::move(c)) {
        if (!c_.empty()) zero_ = zero_like(c_.front());
        trim();
    }
    Poly(std::initializer_list<F> c) : Poly(std::vector<F>(c)) {}

    static Poly constant(const F& c) { return Poly(std::vector<F>{c}, c); }
    static Poly monomial(const F& c, int d) {
        std::vector<F> v(static_cast<std::size_t>(d) + 1, zero_like(c));
        v[static_cast<std::size_t>(d)] = c;
        return Poly(std::move(v), c);
    }
    static Poly x(const F& proto) { return monomial(one_like(proto), 1); }
    /// X - r
    static Poly linear_root(const F& r) { return Poly(std::vector<F>{-r, one_like(r)}, r); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const F& zero() const { return zero_; }
    const F& lc() const {
        if (c_.empty()) throw precondition_error("f = 0", "zero polynomial has no leading coefficient");
        return c_.back();
    }
    F coeff(int i) const {
        if (i < 0 || i > degree()) return zero_;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<F>& coeffs() const { return c_; }

    void set_coeff(int i, const F& v) {
        if (i > degree()) c_.resize(static_cast<std::size_t>(i) + 1, zero_);
        c_[static_cast<std::size_t>(i)] = v;
        trim();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == one_like(zero_); }

    F operator()(const F& x) const {
        F r = zero_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        F inv = one_like(zero_) / c_.back();
        return *this * inv;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(zero_);
        std::vector<F> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * int_like(zero_, static_cast<long>(i)));
        return Poly(std::move(d), zero_);
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const F& s) {
        for (auto& x : c_) x = x * s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::elem_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r), a.zero_);
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && detail::elem_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
    F zero_{};
};

/// Quotient and remainder; the divisor's leading coefficient must be invertible.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw precondition_error("divisor = 0", "polynomial division by zero");
    const F z = a.zero();
    if (a.degree() < b.degree()) return {Poly<F>(z), a};
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), z);
    const F inv = one_like(z) / b.lc();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        F c = r[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        c = c * inv;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto k = static_cast<std::size_t>(i - db + j);
            r[k] = r[k] - c * bc[static_cast<std::size_t>(j)];
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly<F>(std::move(q), z), Poly<F>(std::move(r), z)};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).first; }
template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).second; }

/// Exact division; throws if `b` does not divide `a`.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw precondition_error("remainder != 0", "inexact polynomial division");
    return q;
}

/// Monic gcd (zero if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    const F z = a.zero();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(one_like(z)), s1(z);
    Poly<F> t0(z), t1 = Poly<F>::constant(one_like(z));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = one_like(z) / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// f(g(X))
template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
    Poly<F> r(f.zero());
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * g + Poly<F>::constant(*it);
    return r;
}

/// f(cX)
template <class F>
Poly<F> scale_arg(const Poly<F>& f, const F& c) {
    std::vector<F> v = f.coeffs();
    F p = one_like(c);
    for (auto& x : v) {
        x = x * p;
        p = p * c;
    }
    return Poly<F>(std::move(v), f.zero());
}

/// c^{-deg f} f(cX); keeps a monic input monic.
template <class F>
Poly<F> scale_arg_monic(const Poly<F>& f, const F& c) {
    return scale_arg(f, c) * fpow(one_like(c) / c, f.degree());
}

template <class F>
Poly<F> powmod(Poly<F> base, mpz_class e, const Poly<F>& m) {
    Poly<F> r = Poly<F>::constant(one_like(m.zero())) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

/**
 * Resultant by the subresultant PRS; exact in any field, with degrees taken as
 * the actual degrees of the inputs.
 */
template <class F>
F resultant(Poly<F> A, Poly<F> B) {
    const F z = A.zero();
    const F one = one_like(z);
    if (A.is_zero() || B.is_zero()) return z;
    F s = one;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    }
    if (B.degree() == 0) return s * fpow(B.lc(), A.degree());
    F g = one, h = one;
    for (;;) {
        const int dA = A.degree(), dB = B.degree();
        const int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        Poly<F> R = (A * fpow(B.lc(), delta + 1)) % B;
        A = std::move(B);
        if (R.is_zero()) return z;
        B = R * (one / (g * fpow(h, delta)));
        g = A.lc();
        if (delta != 0) h = fpow(g, delta) / fpow(h, delta - 1);
        if (B.degree() == 0) {
            F res = fpow(B.lc(), A.degree()) / fpow(h, A.degree() - 1);
            return s * res;
        }
    }
}

/// Disc f = (-1)^{n(n-1)/2} Res(f, f') / lc(f), with f' of formal degree n-1.
template <class F>
F discriminant(const Poly<F>& f) {
    const int n = f.degree();
    if (n < 1) throw precondition_error("deg f < 1", "discriminant undefined");
    if (n == 1) return one_like(f.zero());
    Poly<F> d = f.derivative();
    if (d.is_zero()) return f.zero();
    F r = resultant(f, d);
    // Compensate when f' drops degree (characteristic dividing n).
    const int gap = (n - 1) - d.degree();
    r = r * fpow(f.lc(), gap);
    if (((n * (n - 1)) / 2) & 1) r = -r;
    return r / f.lc();
}

/// Square-free decomposition in characteristic 0 (Yun). Monic factors with multiplicities.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_char0(const Poly<F>& f) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (f.degree() < 1) return out;
    Poly<F> fm = f.monic();
    Poly<F> d = fm.derivative();
    Poly<F> a0 = gcd(fm, d);
    Poly<F> b = exact_div(fm, a0);
    Poly<F> c = exact_div(d, a0);
    Poly<F> e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly<F> a = gcd(b, e);
        b = exact_div(b, a);
        c = exact_div(e, a);
        e = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(a, i);
        ++i;
    }
    return out;
}

/// Total order on polynomials: degree, then coefficients from the constant term up.
template <class F>
bool poly_less(const Poly<F>& a, const Poly<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        const F x = a.coeff(i), y = b.coeff(i);
        if (x == y) continue;
        return x < y;
    }
    return false;
}

/// Human-readable form, highest degree first, e.g. "X^3 + 3*X + 2".
template <class F>
std::string format_poly(const Poly<F>& f, const std::string& var = "X") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        F c = f.coeff(i);
        if (is_zero(c)) continue;
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool unit = (cs == "1");
        if (i == 0) os << cs;
        else {
            if (!unit) os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& f) { return os << format_poly(f); }

/// Comma-separated coefficient list, constant term first.
template <class F>
std::string coeff_list(const Poly<F>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) s += ",";
        s += to_string(f.coeff(i));
    }
    return s;
}

}  // namespace tschirn
