#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace tschirn {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Element of F_p. Carries its modulus so polynomials need no side context.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_int(long long n, std::uint64_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp inverse() const {
        if (v_ == 0) throw precondition_error("x = 0", "no inverse in F_p");
        return Fp(detail::powmod(v_, p_ - 2, p_), p_);
    }

    Fp pow(std::uint64_t e) const { return Fp(detail::powmod(v_, e, p_), p_); }

    Fp& operator+=(const Fp& o) { v_ = (v_ >= p_ - o.v_) ? v_ - (p_ - o.v_) : v_ + o.v_; return *this; }
    Fp& operator-=(const Fp& o) { v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + (p_ - o.v_); return *this; }
    Fp& operator*=(const Fp& o) { v_ = detail::mulmod(v_, o.v_, p_); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

private:
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 1;
};

inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline Fp int_like(const Fp& x, long n) { return Fp::from_int(n, x.modulus()); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline unsigned long characteristic(const Fp& x) { return x.modulus(); }
inline Fp nth_like(const Fp& x, std::uint64_t i) { return Fp(i % x.modulus(), x.modulus()); }
inline std::uint64_t field_order(const Fp& x) { return x.modulus(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

/// The prime field F_p; validates p on construction and makes elements.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw precondition_error("p = " + std::to_string(p), "not prime");
        if (p >= (1ULL << 62)) throw precondition_error("p >= 2^62", "modulus too large");
    }
    std::uint64_t p() const { return p_; }
    Fp operator()(long long n) const { return Fp::from_int(n, p_); }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

private:
    std::uint64_t p_;
};

}  // namespace tschirn
