#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace tschirn {

/**
 * Exact rational number in lowest terms with positive denominator.
 *
 * Thin value wrapper over GMP's mpq_class. Results are always materialised,
 * so `auto` never captures a lazy GMP expression.
 */
class Rat {
public:
    Rat() = default;
    Rat(int v) : v_(v) {}
    Rat(long v) : v_(v) {}
    Rat(long long v) : v_(static_cast<long>(v)) {}
    Rat(unsigned long v) : v_(v) {}
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw precondition_error("denominator = 0", "division by zero");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    static Rat parse(std::string_view text) {
        std::string s(text);
        auto trim = [](std::string& x) {
            auto b = x.find_first_not_of(" \t");
            auto e = x.find_last_not_of(" \t");
            x = (b == std::string::npos) ? std::string() : x.substr(b, e - b + 1);
        };
        trim(s);
        if (s.empty()) throw parse_error("empty rational");
        auto slash = s.find('/');
        auto parse_int = [&](std::string part) {
            trim(part);
            if (part.empty()) throw parse_error("malformed rational '" + s + "'");
            std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
            if (i == part.size()) throw parse_error("malformed rational '" + s + "'");
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') throw parse_error("malformed rational '" + s + "'");
            if (part[0] == '+') part.erase(0, 1);
            return mpz_class(part, 10);
        };
        if (slash == std::string::npos) return Rat(parse_int(s));
        mpz_class n = parse_int(s.substr(0, slash));
        mpz_class d = parse_int(s.substr(slash + 1));
        if (d == 0) throw parse_error("zero denominator in '" + s + "'");
        return Rat(n, d);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// max(|num|, den)
    mpz_class height() const {
        mpz_class n = v_.get_num();
        if (n < 0) n = -n;
        return n > v_.get_den() ? n : mpz_class(v_.get_den());
    }

    Rat inverse() const {
        if (is_zero()) throw precondition_error("x = 0", "no inverse");
        mpq_class r = 1 / v_;
        return Rat(r);
    }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    Rat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        Rat r;
        r.v_ = mpq_class(n, d);
        return r;
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw precondition_error("divisor = 0", "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_;
};

// Field-element protocol used by Poly<F>; Fp and Gf provide the same overloads.
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat int_like(const Rat&, long n) { return Rat(n); }
inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline unsigned long characteristic(const Rat&) { return 0; }
/// i-th element of an enumeration of the field; field_order 0 means infinite.
inline Rat nth_like(const Rat&, std::uint64_t i) { return Rat(static_cast<long>(i)); }
inline std::uint64_t field_order(const Rat&) { return 0; }
inline std::string to_string(const Rat& x) { return x.str(); }

/// Orders rationals by (height, value); used for canonical witness choice.
inline bool height_less(const Rat& a, const Rat& b) {
    auto ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a < b;
}

/// Exact square root if `q` is the square of a rational.
inline bool rational_sqrt(const Rat& q, Rat& root) {
    if (q.sign() < 0) return false;
    mpz_class n = q.num(), d = q.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rat(rn, rd);
    return true;
}

inline bool is_square(const Rat& q) {
    Rat r;
    return rational_sqrt(q, r);
}

}  // namespace tschirn
