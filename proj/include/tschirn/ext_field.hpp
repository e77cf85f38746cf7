#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "factor_fp.hpp"
#include "poly.hpp"
#include "prime_field.hpp"

namespace tschirn {

/// GF(p^k) = F_p[z]/(m(z)); shared by all elements of the field.
struct GfContext {
    std::uint64_t p = 0;
    int k = 0;
    std::vector<std::uint64_t> modulus;  // monic, size k + 1, constant term first
};

/// Element of GF(p^k), coordinates in the power basis 1, z, ..., z^{k-1}.
class Gf {
public:
    Gf() = default;
    Gf(std::vector<std::uint64_t> c, std::shared_ptr<const GfContext> ctx) : c_(std::move(c)), ctx_(std::move(ctx)) {
        c_.resize(static_cast<std::size_t>(ctx_->k), 0);
        for (auto& x : c_) x %= ctx_->p;
    }

    const std::vector<std::uint64_t>& coords() const { return c_; }
    const std::shared_ptr<const GfContext>& context() const { return ctx_; }
    std::uint64_t p() const { return ctx_->p; }
    bool is_zero() const {
        for (auto x : c_) if (x) return false;
        return true;
    }

    Gf& operator+=(const Gf& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (Fp(c_[i], p()) + Fp(o.c_[i], p())).value();
        return *this;
    }
    Gf& operator-=(const Gf& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (Fp(c_[i], p()) - Fp(o.c_[i], p())).value();
        return *this;
    }
    friend Gf operator+(Gf a, const Gf& b) { return a += b; }
    friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
    friend Gf operator-(const Gf& a) {
        Gf r = a;
        for (auto& x : r.c_) x = (-Fp(x, a.p())).value();
        return r;
    }

    friend Gf operator*(const Gf& a, const Gf& b) {
        const std::uint64_t p = a.p();
        const int k = a.ctx_->k;
        std::vector<Fp> t(static_cast<std::size_t>(2 * k - 1), Fp(0, p));
        for (int i = 0; i < k; ++i) {
            if (!a.c_[i]) continue;
            for (int j = 0; j < k; ++j) t[i + j] += Fp(a.c_[i], p) * Fp(b.c_[j], p);
        }
        const auto& m = a.ctx_->modulus;
        for (int d = 2 * k - 2; d >= k; --d) {
            Fp c = t[d];
            if (c.is_zero()) continue;
            for (int j = 0; j < k; ++j) t[d - k + j] -= c * Fp(m[j], p);
            t[d] = Fp(0, p);
        }
        std::vector<std::uint64_t> out(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) out[i] = t[i].value();
        return Gf(std::move(out), a.ctx_);
    }
    Gf& operator*=(const Gf& o) { return *this = *this * o; }

    Gf inverse() const {
        if (is_zero()) throw precondition_error("x = 0", "no inverse in GF(p^k)");
        auto [g, s, t] = ext_gcd(to_poly(), modulus_poly());
        (void)t;
        if (g.degree() != 0) throw precondition_error("modulus", "not irreducible");
        return from_poly(s);
    }
    friend Gf operator/(const Gf& a, const Gf& b) { return a * b.inverse(); }
    Gf& operator/=(const Gf& o) { return *this = *this / o; }

    friend bool operator==(const Gf& a, const Gf& b) { return a.c_ == b.c_; }
    friend bool operator<(const Gf& a, const Gf& b) { return a.c_ < b.c_; }

    Poly<Fp> to_poly() const {
        std::vector<Fp> v;
        for (auto x : c_) v.emplace_back(x, p());
        return Poly<Fp>(std::move(v), Fp(0, p()));
    }
    Poly<Fp> modulus_poly() const {
        std::vector<Fp> v;
        for (auto x : ctx_->modulus) v.emplace_back(x, p());
        return Poly<Fp>(std::move(v), Fp(0, p()));
    }
    Gf from_poly(const Poly<Fp>& f) const {
        Poly<Fp> r = f % modulus_poly();
        std::vector<std::uint64_t> v(static_cast<std::size_t>(ctx_->k), 0);
        for (int i = 0; i <= r.degree(); ++i) v[i] = r.coeff(i).value();
        return Gf(std::move(v), ctx_);
    }

    Gf frobenius() const {
        Gf r = one_of(ctx_), b = *this;
        std::uint64_t e = p();
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    static Gf zero_of(const std::shared_ptr<const GfContext>& ctx) { return Gf({}, ctx); }
    static Gf one_of(const std::shared_ptr<const GfContext>& ctx) { return Gf({1}, ctx); }

private:
    std::vector<std::uint64_t> c_;
    std::shared_ptr<const GfContext> ctx_;
};

inline Gf zero_like(const Gf& x) { return Gf::zero_of(x.context()); }
inline Gf one_like(const Gf& x) { return Gf::one_of(x.context()); }
inline Gf int_like(const Gf& x, long n) { return Gf({Fp::from_int(n, x.p()).value()}, x.context()); }
inline bool is_zero(const Gf& x) { return x.is_zero(); }
inline unsigned long characteristic(const Gf& x) { return x.p(); }
/// Base-p digits of i as coordinates; field_order saturates at 2^64 - 1.
inline Gf nth_like(const Gf& x, std::uint64_t i) {
    std::vector<std::uint64_t> c;
    for (int j = 0; j < x.context()->k; ++j) {
        c.push_back(i % x.p());
        i /= x.p();
    }
    return Gf(std::move(c), x.context());
}
inline std::uint64_t field_order(const Gf& x) {
    std::uint64_t q = 1;
    for (int j = 0; j < x.context()->k; ++j) {
        if (q > UINT64_MAX / x.p()) return UINT64_MAX;
        q *= x.p();
    }
    return q;
}
inline std::string to_string(const Gf& x) {
    if (x.coords().size() == 1) return std::to_string(x.coords()[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < x.coords().size(); ++i) s += (i ? "," : "") + std::to_string(x.coords()[i]);
    return s + ")";
}

/// Descriptor for GF(p^k); makes elements sharing one context.
class ExtField {
public:
    explicit ExtField(std::shared_ptr<const GfContext> ctx) : ctx_(std::move(ctx)) {}
    std::uint64_t p() const { return ctx_->p; }
    int k() const { return ctx_->k; }
    std::uint64_t order() const {
        std::uint64_t q = 1;
        for (int i = 0; i < ctx_->k; ++i) q *= ctx_->p;
        return q;
    }
    const std::vector<std::uint64_t>& modulus() const { return ctx_->modulus; }
    const std::shared_ptr<const GfContext>& context() const { return ctx_; }

    Gf zero() const { return Gf::zero_of(ctx_); }
    Gf one() const { return Gf::one_of(ctx_); }
    Gf operator()(long long n) const { return Gf({Fp::from_int(n, ctx_->p).value()}, ctx_); }
    Gf element(std::vector<std::uint64_t> c) const { return Gf(std::move(c), ctx_); }
    /// The generator z of the power basis.
    Gf gen() const {
        if (ctx_->k == 1) return zero();
        return Gf({0, 1}, ctx_);
    }
    /// Element with index i in 0..order-1 (base-p digits, z^0 first).
    Gf by_index(std::uint64_t i) const {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(ctx_->k));
        for (auto& x : c) { x = i % ctx_->p; i /= ctx_->p; }
        return Gf(std::move(c), ctx_);
    }
    std::string modulus_string() const {
        std::vector<Fp> v;
        for (auto x : ctx_->modulus) v.emplace_back(x, ctx_->p);
        return format_poly(Poly<Fp>(std::move(v), Fp(0, ctx_->p)), "z");
    }

private:
    std::shared_ptr<const GfContext> ctx_;
};

/**
 * Builds GF(p^k), 1 <= k <= 6. The modulus is the first irreducible monic
 * polynomial at or after position `seed` in the enumeration of monic degree-k
 * polynomials by base-p index of (c_0, ..., c_{k-1}), c_0 least significant.
 * For k = 1 the modulus is always X.
 */
inline ExtField gf_build(std::uint64_t p, int k, std::uint64_t seed = 0) {
    PrimeField base(p);
    if (k < 1 || k > 6) throw precondition_error("k = " + std::to_string(k), "extension degree must be in 1..6");
    auto ctx = std::make_shared<GfContext>();
    ctx->p = p;
    ctx->k = k;
    if (k == 1) {
        ctx->modulus = {0, 1};
        return ExtField(ctx);
    }
    mpz_class count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<unsigned long>(p);
    mpz_class start = mpz_class(static_cast<unsigned long>(seed)) % count;
    for (mpz_class step = 0; step < count; ++step) {
        mpz_class idx = (start + step) % count;
        std::vector<Fp> c;
        for (int i = 0; i < k; ++i) {
            mpz_class digit = idx % static_cast<unsigned long>(p);
            c.push_back(base(static_cast<long long>(digit.get_ui())));
            idx /= static_cast<unsigned long>(p);
        }
        c.push_back(base.one());
        Poly<Fp> f(c, base.zero());
        if (is_irreducible_fp(f)) {
            for (auto& x : c) ctx->modulus.push_back(x.value());
            return ExtField(ctx);
        }
    }
    throw precondition_error("GF(p^k)", "no irreducible modulus found");
}

}  // namespace tschirn
