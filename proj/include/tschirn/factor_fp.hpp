#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "prime_field.hpp"

namespace tschirn {

/// Rabin's test: f of degree k is irreducible iff X^{p^k} = X mod f and
/// gcd(X^{p^{k/q}} - X, f) = 1 for each prime q | k.
inline bool is_irreducible_fp(const Poly<Fp>& f) {
    const int k = f.degree();
    if (k < 1) return false;
    if (k == 1) return true;
    const Fp z = f.zero();
    const std::uint64_t p = z.modulus();
    Poly<Fp> X = Poly<Fp>::x(z);
    auto frob_pow = [&](int times) {
        Poly<Fp> h = X;
        for (int i = 0; i < times; ++i) h = powmod(h, mpz_class(static_cast<unsigned long>(p)), f);
        return h;
    };
    if (!(frob_pow(k) == X % f)) return false;
    for (int q = 2; q <= k; ++q) {
        if (k % q) continue;
        bool prime = true;
        for (int r = 2; r * r <= q; ++r) if (q % r == 0) prime = false;
        if (!prime) continue;
        if (gcd(frob_pow(k / q) - X, f).degree() != 0) return false;
    }
    return true;
}

/// Irreducible factor with multiplicity.
template <class F>
struct Factor {
    Poly<F> poly;
    int multiplicity = 1;
};

/// unit * prod factor^multiplicity, factors monic and sorted by poly_less.
template <class F>
struct Factorization {
    F unit{};
    std::vector<Factor<F>> factors;

    /// Degrees of the factors, each repeated by multiplicity, ascending.
    std::vector<int> degree_pattern() const {
        std::vector<int> d;
        for (const auto& f : factors)
            for (int i = 0; i < f.multiplicity; ++i) d.push_back(f.poly.degree());
        std::sort(d.begin(), d.end());
        return d;
    }

    Poly<F> expand() const {
        Poly<F> r = Poly<F>::constant(unit);
        for (const auto& f : factors)
            for (int i = 0; i < f.multiplicity; ++i) r *= f.poly;
        return r;
    }
};

namespace detail {

/// p-th root of a polynomial in X^p over F_p (the Frobenius is the identity on F_p).
inline Poly<Fp> pth_root(const Poly<Fp>& f) {
    const std::uint64_t p = f.zero().modulus();
    std::vector<Fp> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return Poly<Fp>(std::move(c), f.zero());
}

inline void squarefree_fp(const Poly<Fp>& f, int mult, std::vector<std::pair<Poly<Fp>, int>>& out) {
    if (f.degree() < 1) return;
    const std::uint64_t p = f.zero().modulus();
    Poly<Fp> d = f.derivative();
    if (d.is_zero()) {
        squarefree_fp(pth_root(f), mult * static_cast<int>(p), out);
        return;
    }
    Poly<Fp> c = gcd(f, d);
    Poly<Fp> w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly<Fp> y = gcd(w, c);
        Poly<Fp> z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    if (c.degree() > 0) squarefree_fp(pth_root(c), mult * static_cast<int>(p), out);
}

/// Distinct-degree factorisation of a monic square-free polynomial.
inline std::vector<std::pair<Poly<Fp>, int>> distinct_degree(Poly<Fp> g) {
    std::vector<std::pair<Poly<Fp>, int>> out;
    const Fp z = g.zero();
    const mpz_class p(static_cast<unsigned long>(z.modulus()));
    const Poly<Fp> X = Poly<Fp>::x(z);
    Poly<Fp> h = X % g;
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = powmod(h, p, g);
        Poly<Fp> f = gcd(h - X, g);
        if (f.degree() > 0) {
            out.emplace_back(f, d);
            g = exact_div(g, f);
            h = h % g;
        }
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), g.degree());
    return out;
}

inline Poly<Fp> random_poly(int max_deg, const Fp& z, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, z.modulus() - 1);
    std::vector<Fp> c;
    for (int i = 0; i <= max_deg; ++i) c.emplace_back(dist(rng), z.modulus());
    return Poly<Fp>(std::move(c), z);
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map when p = 2).
inline void equal_degree(const Poly<Fp>& f, int d, std::mt19937_64& rng, std::vector<Poly<Fp>>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Fp z = f.zero();
    const std::uint64_t p = z.modulus();
    for (;;) {
        Poly<Fp> a = random_poly(f.degree() - 1, z, rng);
        if (a.degree() < 1) continue;
        Poly<Fp> b(z);
        if (p == 2) {
            Poly<Fp> t = a % f;
            b = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
            b = powmod(a, (q - 1) / 2, f) - Poly<Fp>::constant(one_like(z));
        }
        Poly<Fp> g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorisation over F_p. Deterministic for a given seed.
inline Factorization<Fp> factor_over_fp(const Poly<Fp>& f, std::uint64_t seed = 0x5eed) {
    if (f.is_zero()) throw precondition_error("f = 0", "cannot factor the zero polynomial");
    Factorization<Fp> res;
    res.unit = f.lc();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly<Fp>, int>> sqf;
    detail::squarefree_fp(f.monic(), 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<Poly<Fp>> pieces;
            detail::equal_degree(block, d, rng, pieces);
            for (auto& q : pieces) res.factors.push_back({std::move(q), mult});
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.poly, b.poly); });
    return res;
}

/// Degree pattern of f mod p when f mod p is square-free.
inline std::vector<int> degree_pattern_fp(const Poly<Fp>& f) { return factor_over_fp(f).degree_pattern(); }

}  // namespace tschirn
