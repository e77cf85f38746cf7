#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "decide.hpp"
#include "errors.hpp"
#include "factor_q.hpp"
#include "prime_field.hpp"
#include "rat.hpp"
#include "resolvent.hpp"

namespace tschirn {

enum class NormalKind { Depressed, OneParam, OneParamAlternate, Shanks };

inline const char* to_string(NormalKind k) {
    switch (k) {
        case NormalKind::Depressed: return "depressed";
        case NormalKind::OneParam: return "one-param";
        case NormalKind::OneParamAlternate: return "one-param-alternate";
        case NormalKind::Shanks: return "shanks";
    }
    return "?";
}

/// A normal-form cubic and a transformation from the input cubic to it.
struct NormalForm {
    NormalKind kind{};
    CubicTriple<Rat> target;
    TschirnCoeffs<Rat> witness;
    Rat parameter;  // S3 unused; a for X^3 + aX + a; m for Shanks
};

/// X -> X - a1/3 gives X^3 + S2 X - S3 with S2 = -A/3, S3 = B/27.
inline NormalForm reduce_depressed(const CubicTriple<Rat>& a) {
    const auto inv = cubic_invariants(a);
    NormalForm nf{NormalKind::Depressed, {Rat(0), -inv.A / Rat(3), inv.B / Rat(27)}, {-a.a1 / Rat(3), Rat(1), Rat(0)},
                  Rat(0)};
    if (!verify_transformation(a, nf.target, nf.witness)) throw std::logic_error("depressed witness failed");
    return nf;
}

/**
 * X^3 + a* X + a* with a* = -27 A^3 / B^2 via the affine map
 * X -> (9A/B)(X - a1/3). For A = 0 returns X^3 - 3X - (B + 1/B) instead.
 */
inline NormalForm reduce_one_param(const CubicTriple<Rat>& a) {
    const auto inv = cubic_invariants(a);
    if (inv.D.is_zero()) throw precondition_error("D_a = 0", "inseparable cubic");
    if (inv.B.is_zero()) throw precondition_error("B_a = 0", "X^3 + aX + a has B = 27a^2 != 0");
    NormalForm nf;
    if (inv.A.is_zero()) {
        auto [t, c] = detail::normalise_A_zero(a);
        nf = {NormalKind::OneParamAlternate, t, c, t.a3};
    } else {
        const Rat k = Rat(9) * inv.A / inv.B;
        const Rat as = Rat(-27) * inv.A * inv.A * inv.A / (inv.B * inv.B);
        nf = {NormalKind::OneParam, one_param_triple(as), {-k * a.a1 / Rat(3), k, Rat(0)}, as};
    }
    if (!verify_transformation(a, nf.target, nf.witness)) throw std::logic_error("one-parameter witness failed");
    return nf;
}

/**
 * Shanks parameters m = -(3 Delta + B)/(2 Delta) for Delta = +-sqrt(D_a); the
 * two values satisfy m1 + m2 + 3 = 0. Witnesses come from the same-field
 * decision. Ordered by height.
 */
inline std::vector<NormalForm> reduce_shanks(const CubicTriple<Rat>& a) {
    if (galois_type(a) != GaloisType::C3) throw precondition_error("D_a not a square or f(a) reducible", "not a cyclic cubic");
    const auto inv = cubic_invariants(a);
    Rat delta;
    rational_sqrt(inv.D, delta);
    std::vector<NormalForm> out;
    for (const Rat& d : {delta, -delta}) {
        const Rat m = -(Rat(3) * d + inv.B) / (Rat(2) * d);
        const auto target = shanks_triple(m);
        auto same = decide_same_splitting(a, target);
        if (!same.same || !same.witness) throw std::logic_error("Shanks candidate does not share the splitting field");
        out.push_back({NormalKind::Shanks, target, *same.witness, m});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return height_less(x.parameter, y.parameter); });
    return out;
}

/// b = a (u^2 + 9u - 3a)^3 / (u^3 - 2au^2 - 9au - 2a^2 - 27a)^2.
inline Rat family_s3(const Rat& a, const Rat& u) {
    if ((a * (Rat(4) * a + Rat(27))).is_zero()) throw precondition_error("a(4a+27) = 0", "X^3 + aX + a inseparable");
    const Rat den = u * u * u - Rat(2) * a * u * u - Rat(9) * a * u - Rat(2) * a * a - Rat(27) * a;
    if (den.is_zero()) throw precondition_error("u^3 - 2au^2 - 9au - 2a^2 - 27a = 0", "family undefined at u");
    const Rat num = u * u + Rat(9) * u - Rat(3) * a;
    return a * num * num * num / (den * den);
}

/// The two n with Spl(Shanks m) = Spl(Shanks n) attached to z.
inline std::pair<Rat, Rat> family_c3(const Rat& m, const Rat& z) {
    const Rat z2 = z * z, z3 = z2 * z;
    const Rat den = m * z * (z + Rat(1)) + z3 + Rat(3) * z2 - Rat(1);
    if (den.is_zero()) throw precondition_error("mz(z+1) + z^3 + 3z^2 - 1 = 0", "family undefined at z");
    const Rat n1 = (m * (z3 - Rat(3) * z - Rat(1)) - Rat(9) * z * (z + Rat(1))) / den;
    const Rat n2 = -(m * (z3 + Rat(3) * z2 - Rat(1)) + Rat(3) * (z3 - Rat(3) * z - Rat(1))) / den;
    return {n1, n2};
}

/// All p/q with max(|p|, q) <= H, ordered by (height, value); height(0) = 1.
inline std::vector<Rat> rationals_by_height(long H) {
    std::vector<Rat> out;
    for (long q = 1; q <= H; ++q)
        for (long p = -H; p <= H; ++p)
            if (std::gcd(p, q) == 1 || (p == 0 && q == 1)) out.push_back(Rat(mpz_class(p), mpz_class(q)));
    std::sort(out.begin(), out.end(), height_less);
    return out;
}

struct FamilyMember {
    Rat param;           // u for S3, z for C3
    std::vector<Rat> b;  // one value for S3, two for C3
};

/// Admissible u of height <= H with b = family_s3(a,u) != 0, in height order.
inline std::vector<FamilyMember> enumerate_family_s3(const Rat& a, long H) {
    std::vector<FamilyMember> out;
    for (const Rat& u : rationals_by_height(H)) {
        try {
            Rat b = family_s3(a, u);
            if (b.is_zero()) continue;
            out.push_back({u, {b}});
        } catch (const precondition_error&) {
        }
    }
    return out;
}

inline std::vector<FamilyMember> enumerate_family_c3(const Rat& m, long H) {
    std::vector<FamilyMember> out;
    for (const Rat& z : rationals_by_height(H)) {
        try {
            auto [n1, n2] = family_c3(m, z);
            out.push_back({z, {n1, n2}});
        } catch (const precondition_error&) {
        }
    }
    return out;
}

namespace detail {

/// False when some small prime not dividing the leading coefficient sees no root.
inline bool may_have_rational_root(const Poly<Rat>& f) {
    static const std::uint64_t primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    const IntPoly g = integer_primitive(f);
    for (std::uint64_t p : primes) {
        if (mpz_divisible_ui_p(g.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const Poly<Fp> h = to_fp(g, p);
        bool root = false;
        for (std::uint64_t x = 0; x < p && !root; ++x) root = h(Fp(x, p)).is_zero();
        if (!root) return false;
    }
    return true;
}

}  // namespace detail

struct ScanHit {
    long m, n;
    bool plus;  // F2+ has the rational root, else F2-
};

struct ScanResult {
    std::vector<ScanHit> hits;              // sorted by (m, n, plus)
    std::vector<std::vector<long>> classes;  // union-find classes of size >= 2, sorted
};

/**
 * Integer pairs m_min <= m <= m_max, m < n <= n_max for which F2+(m,n) or
 * F2-(m,n) has a rational root, with the classes they generate.
 * Work is split by m across `jobs` threads; output does not depend on jobs.
 */
inline ScanResult scan_equal_splitting(long m_min, long m_max, long n_max, unsigned jobs = 1) {
    ScanResult res;
    if (m_min > m_max) return res;
    const long count = m_max - m_min + 1;
    std::vector<std::vector<ScanHit>> per_m(static_cast<std::size_t>(count));
    auto work = [&](unsigned worker) {
        for (long i = worker; i < count; i += static_cast<long>(jobs)) {
            const long m = m_min + i;
            for (long n = m + 1; n <= n_max; ++n) {
                auto [fp, fm] = cyclic_F2_pm(Rat(m), Rat(n));
                for (int k = 0; k < 2; ++k) {
                    const Poly<Rat>& f = k == 0 ? fp : fm;
                    if (!detail::may_have_rational_root(f)) continue;
                    if (!rational_roots(f).empty()) per_m[static_cast<std::size_t>(i)].push_back({m, n, k == 0});
                }
            }
        }
    };
    if (jobs == 0) jobs = 1;
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    for (auto& v : per_m) res.hits.insert(res.hits.end(), v.begin(), v.end());
    std::sort(res.hits.begin(), res.hits.end(), [](const ScanHit& x, const ScanHit& y) {
        return std::tie(x.m, x.n, x.plus) < std::tie(y.m, y.n, y.plus);
    });

    std::map<long, long> parent;
    auto find = [&](long x) {
        if (!parent.count(x)) parent[x] = x;
        long r = x;
        while (parent[r] != r) r = parent[r];
        while (parent[x] != r) {
            long next = parent[x];
            parent[x] = r;
            x = next;
        }
        return r;
    };
    for (const auto& h : res.hits) {
        long ra = find(h.m), rb = find(h.n);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<long, std::vector<long>> groups;
    for (auto& [x, unused] : parent) groups[find(x)].push_back(x);
    for (auto& [root, members] : groups)
        if (members.size() >= 2) res.classes.push_back(members);
    std::sort(res.classes.begin(), res.classes.end());
    return res;
}

}  // namespace tschirn
