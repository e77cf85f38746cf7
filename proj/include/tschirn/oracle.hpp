#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace tschirn {

/// Explicit roots xs of f(s) and ys of f(t); both pairwise distinct, 2 <= n <= 6.
template <class F>
struct RootTuple {
    std::vector<F> xs, ys;

    void validate() const {
        const std::size_t n = xs.size();
        if (n < 2 || n > 6) throw precondition_error("n not in [2,6]", "root tuple size out of range");
        if (ys.size() != n) throw precondition_error("#xs != #ys", "root tuple size mismatch");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (xs[i] == xs[j]) throw precondition_error("x_i = x_j", "repeated root in xs");
                if (ys[i] == ys[j]) throw precondition_error("y_i = y_j", "repeated root in ys");
            }
    }
};

/// The n! coefficient vectors u(tau) with y_tau(i) = sum_j u_j x_i^j, tau in lexicographic order.
template <class F>
std::vector<std::vector<F>> oracle_coefficients(const RootTuple<F>& rt) {
    rt.validate();
    std::vector<std::size_t> tau(rt.xs.size());
    std::iota(tau.begin(), tau.end(), 0);
    std::vector<std::vector<F>> out;
    do {
        std::vector<F> ys;
        for (std::size_t i : tau) ys.push_back(rt.ys[i]);
        out.push_back(vandermonde_solve(rt.xs, ys));
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

/// F_i = prod over all n! transformations of (X - u_i).
template <class F>
Poly<F> oracle_resolvent(const RootTuple<F>& rt, int i) {
    if (i < 0 || i >= static_cast<int>(rt.xs.size())) throw precondition_error("i >= n", "coefficient index out of range");
    Poly<F> r = Poly<F>::constant(one_like(rt.xs.at(0)));
    for (const auto& u : oracle_coefficients(rt)) r *= Poly<F>::linear_root(u[static_cast<std::size_t>(i)]);
    return r;
}

}  // namespace tschirn
