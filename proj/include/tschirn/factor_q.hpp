#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factor_fp.hpp"
#include "poly.hpp"
#include "prime_field.hpp"
#include "rat.hpp"

namespace tschirn {

using IntPoly = std::vector<mpz_class>;  // constant term first

namespace detail {

inline void itrim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline IntPoly imul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline IntPoly imod(IntPoly f, const mpz_class& m, bool symmetric = false) {
    mpz_class half = m / 2;
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (symmetric && c > half) c -= m;
    }
    itrim(f);
    return f;
}

inline Poly<Fp> to_fp(const IntPoly& f, std::uint64_t p) {
    std::vector<Fp> c;
    mpz_class P(static_cast<unsigned long>(p));
    for (const auto& x : f) {
        mpz_class r = x % P;
        if (r < 0) r += P;
        c.emplace_back(r.get_ui(), p);
    }
    return Poly<Fp>(std::move(c), Fp(0, p));
}

inline IntPoly from_fp(const Poly<Fp>& f) {
    IntPoly r;
    for (int i = 0; i <= f.degree(); ++i) r.push_back(mpz_class(static_cast<unsigned long>(f.coeff(i).value())));
    return r;
}

inline mpz_class icontent(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

/// Primitive integer polynomial with positive leading coefficient.
inline IntPoly primitive_part(IntPoly f) {
    itrim(f);
    if (f.empty()) return f;
    mpz_class g = icontent(f);
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

/// Clears denominators of f and returns its primitive integer multiple.
inline IntPoly integer_primitive(const Poly<Rat>& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) l = lcm(l, c.den());
    IntPoly r;
    for (const auto& c : f.coeffs()) r.push_back(c.num() * (l / c.den()));
    return primitive_part(std::move(r));
}

inline Poly<Rat> to_rat(const IntPoly& f) {
    std::vector<Rat> c;
    for (const auto& x : f) c.emplace_back(x);
    return Poly<Rat>(std::move(c), Rat(0));
}

/// Lifts f = g0 * h0 (mod p), g0 monic, lc(h0) = lc(f) mod p, to modulus p^k.
inline std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const Poly<Fp>& g0, const Poly<Fp>& h0,
                                               std::uint64_t p, int k) {
    const mpz_class P(static_cast<unsigned long>(p));
    mpz_class Pk;
    mpz_pow_ui(Pk.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(k));
    auto [one, s, t] = ext_gcd(g0, h0);
    if (one.degree() != 0) throw precondition_error("gcd(g, h) != 1", "Hensel lifting needs coprime factors");
    IntPoly g = from_fp(g0);
    IntPoly h = from_fp(h0);
    h.back() = f.back() % Pk;
    if (h.back() < 0) h.back() += Pk;
    mpz_class pj = P;
    for (int j = 1; j < k; ++j) {
        IntPoly gh = imul(g, h);
        IntPoly e(std::max(f.size(), gh.size()), 0);
        for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
        for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        e = imod(e, pj * P);
        for (auto& c : e) c /= pj;
        Poly<Fp> ep = to_fp(e, p);
        auto [q, r] = divmod(t * ep, g0);
        Poly<Fp> dh = s * ep + q * h0;
        IntPoly dg = from_fp(r), dhi = from_fp(dh);
        if (g.size() < dg.size()) g.resize(dg.size(), 0);
        if (h.size() < dhi.size()) h.resize(dhi.size(), 0);
        for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pj * dg[i];
        for (std::size_t i = 0; i < dhi.size(); ++i) h[i] += pj * dhi[i];
        pj *= P;
    }
    return {imod(g, Pk), imod(h, Pk)};
}

/// Lifts f = lc(f) * prod gs (mod p) to monic factors mod p^k.
inline std::vector<IntPoly> hensel_multi(const IntPoly& f, const std::vector<Poly<Fp>>& gs, std::uint64_t p, int k) {
    mpz_class Pk;
    mpz_ui_pow_ui(Pk.get_mpz_t(), p, static_cast<unsigned long>(k));
    std::vector<IntPoly> out;
    IntPoly cur = f;
    const Fp lcp = to_fp(IntPoly{f.back()}, p).coeff(0);
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
        Poly<Fp> h0 = Poly<Fp>::constant(lcp);
        for (std::size_t j = i + 1; j < gs.size(); ++j) h0 *= gs[j];
        auto [G, H] = hensel_pair(cur, gs[i], h0, p, k);
        out.push_back(std::move(G));
        cur = std::move(H);
    }
    mpz_class inv;
    mpz_class l = cur.back();
    mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), Pk.get_mpz_t());
    for (auto& c : cur) c *= inv;
    out.push_back(imod(cur, Pk));
    return out;
}

/// True (with quotient) if integer polynomial g divides f exactly over Z.
inline bool idivides(const IntPoly& f, const IntPoly& g, IntPoly& quotient) {
    auto [q, r] = divmod(to_rat(f), to_rat(g));
    if (!r.is_zero()) return false;
    quotient.clear();
    for (const auto& c : q.coeffs()) {
        if (!c.is_integer()) return false;
        quotient.push_back(c.num());
    }
    return true;
}

inline std::uint64_t choose_prime(const IntPoly& f) {
    for (std::uint64_t p = 5;; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (f.back() % mpz_class(static_cast<unsigned long>(p)) == 0) continue;
        Poly<Fp> fp = to_fp(f, p);
        if (gcd(fp, fp.derivative()).degree() == 0) return p;
    }
}

/// Zassenhaus: irreducible factors of a square-free primitive integer polynomial.
inline std::vector<IntPoly> zassenhaus(IntPoly f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    const std::uint64_t p = choose_prime(f);
    Factorization<Fp> fac = factor_over_fp(to_fp(f, p));
    if (fac.factors.size() == 1) return {f};
    std::vector<Poly<Fp>> gs;
    for (const auto& x : fac.factors) gs.push_back(x.poly);

    // Landau-Mignotte: B = 2^n |f|_2 |lc f|, lift until p^k > 2B.
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    mpz_class B = (mpz_class(1) << n) * norm * abs(f.back());
    int k = 1;
    mpz_class Pk(static_cast<unsigned long>(p));
    while (Pk <= 2 * B) {
        Pk *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<IntPoly> lifted = hensel_multi(f, gs, p, k);

    std::vector<IntPoly> result;
    std::vector<std::size_t> idx(lifted.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::size_t d = 1;
    while (2 * d <= idx.size()) {
        bool found = false;
        std::vector<std::size_t> sel(d);
        for (std::size_t i = 0; i < d; ++i) sel[i] = i;
        while (true) {
            IntPoly prod{f.back()};
            for (auto i : sel) prod = imod(imul(prod, lifted[idx[i]]), Pk);
            IntPoly cand = primitive_part(imod(prod, Pk, true));
            IntPoly q;
            if (!cand.empty() && cand.size() > 1 && idivides(f, cand, q)) {
                result.push_back(cand);
                f = primitive_part(q);
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    if (std::find(sel.begin(), sel.end(), i) == sel.end()) rest.push_back(idx[i]);
                idx = std::move(rest);
                found = true;
                break;
            }
            // next combination of d out of idx.size()
            std::size_t m = idx.size();
            int pos = static_cast<int>(d) - 1;
            while (pos >= 0 && sel[pos] == m - d + static_cast<std::size_t>(pos)) --pos;
            if (pos < 0) break;
            ++sel[pos];
            for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < d; ++j) sel[j] = sel[j - 1] + 1;
        }
        if (!found) ++d;
    }
    if (f.size() > 1) result.push_back(f);
    return result;
}

}  // namespace detail

/// Complete factorisation over Q: unit = lc(f), monic irreducible factors sorted by poly_less.
inline Factorization<Rat> factor_over_q(const Poly<Rat>& f) {
    if (f.is_zero()) throw precondition_error("f = 0", "cannot factor the zero polynomial");
    Factorization<Rat> res;
    res.unit = f.lc();
    for (const auto& [part, mult] : squarefree_char0(f)) {
        for (const auto& g : detail::zassenhaus(detail::integer_primitive(part))) {
            res.factors.push_back({detail::to_rat(g).monic(), mult});
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.poly, b.poly); });
    return res;
}

/// Distinct rational roots, ascending.
inline std::vector<Rat> rational_roots(const Poly<Rat>& f) {
    std::vector<Rat> r;
    if (f.degree() < 1) return r;
    for (const auto& fac : factor_over_q(f).factors)
        if (fac.poly.degree() == 1) r.push_back(-fac.poly.coeff(0));
    std::sort(r.begin(), r.end());
    return r;
}

inline bool is_irreducible_q(const Poly<Rat>& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_q(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace tschirn
