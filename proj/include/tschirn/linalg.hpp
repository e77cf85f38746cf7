#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace tschirn {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/**
 * Solves M x = rhs by fraction-free (Bareiss) elimination with row pivoting.
 * Throws if M is singular.
 */
template <class F>
std::vector<F> solve_linear(Matrix<F> M, std::vector<F> rhs) {
    const std::size_t n = M.size();
    if (n == 0) return {};
    const F zero = zero_like(M[0][0]);
    for (std::size_t i = 0; i < n; ++i) M[i].push_back(rhs[i]);
    F prev = one_like(zero);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(M[piv][k])) ++piv;
        if (piv == n) throw precondition_error("det = 0", "singular linear system");
        if (piv != k) std::swap(M[piv], M[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
            M[i][k] = zero;
        }
        prev = M[k][k];
    }
    std::vector<F> x(n, zero);
    for (std::size_t i = n; i-- > 0;) {
        F acc = M[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc = acc - M[i][j] * x[j];
        x[i] = acc / M[i][i];
    }
    return x;
}

/// Coefficients u with sum_j u_j xs_i^j = ys_i, i.e. V(xs) u = ys.
template <class F>
std::vector<F> vandermonde_solve(const std::vector<F>& xs, const std::vector<F>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw precondition_error("#xs != #ys", "size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) throw precondition_error("x_i = x_j", "repeated root, Vandermonde matrix singular");
    Matrix<F> V(n, std::vector<F>(n, zero_like(xs[0])));
    for (std::size_t i = 0; i < n; ++i) {
        F p = one_like(xs[0]);
        for (std::size_t j = 0; j < n; ++j) {
            V[i][j] = p;
            p = p * xs[i];
        }
    }
    return solve_linear(std::move(V), ys);
}

/// Independent 3x3 path by cofactors (Cramer's rule).
template <class F>
std::vector<F> cramer3(const Matrix<F>& M, const std::vector<F>& b) {
    auto det3 = [](const Matrix<F>& A) {
        return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    };
    F d = det3(M);
    if (is_zero(d)) throw precondition_error("det = 0", "singular linear system");
    std::vector<F> x;
    for (int c = 0; c < 3; ++c) {
        Matrix<F> A = M;
        for (int r = 0; r < 3; ++r) A[r][c] = b[r];
        x.push_back(det3(A) / d);
    }
    return x;
}

/// Characteristic polynomial det(X I - M) via reduction to Hessenberg form.
template <class F>
Poly<F> charpoly(Matrix<F> H) {
    const std::size_t n = H.size();
    if (n == 0) throw precondition_error("n = 0", "empty matrix");
    const F zero = zero_like(H[0][0]);
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m + 1;
        while (i < n && is_zero(H[i][m - 1])) ++i;
        if (i == n) continue;
        if (is_zero(H[m][m - 1])) {
            std::swap(H[i], H[m]);
            for (std::size_t r = 0; r < n; ++r) std::swap(H[r][i], H[r][m]);
        } else {
            i = m;
        }
        if (is_zero(H[m][m - 1])) continue;
        const F t = H[m][m - 1];
        for (std::size_t r = m + 1; r < n; ++r) {
            if (is_zero(H[r][m - 1])) continue;
            const F u = H[r][m - 1] / t;
            for (std::size_t c = 0; c < n; ++c) H[r][c] = H[r][c] - u * H[m][c];
            for (std::size_t c = 0; c < n; ++c) H[c][m] = H[c][m] + u * H[c][r];
        }
    }
    std::vector<Poly<F>> P;
    P.push_back(Poly<F>::constant(one_like(zero)));
    const Poly<F> X = Poly<F>::x(zero);
    for (std::size_t m = 0; m < n; ++m) {
        Poly<F> pm = (X - Poly<F>::constant(H[m][m])) * P[m];
        F t = one_like(zero);
        for (std::size_t i = 1; i <= m; ++i) {
            t = t * H[m - i + 1][m - i];
            pm -= P[m - i] * (t * H[m - i][m]);
        }
        P.push_back(std::move(pm));
    }
    return P[n];
}

/// Matrix of multiplication by c in k[Y]/(f), power basis, columns = images of Y^j.
template <class F>
Matrix<F> multiplication_matrix(const Poly<F>& f, const Poly<F>& c) {
    const int n = f.degree();
    const F zero = f.zero();
    Matrix<F> M(static_cast<std::size_t>(n), std::vector<F>(static_cast<std::size_t>(n), zero));
    Poly<F> basis = Poly<F>::constant(one_like(zero));
    const Poly<F> Y = Poly<F>::x(zero);
    const Poly<F> cm = c % f;
    for (int j = 0; j < n; ++j) {
        Poly<F> img = (cm * basis) % f;
        for (int i = 0; i < n; ++i) M[i][j] = img.coeff(i);
        basis = (basis * Y) % f;
    }
    return M;
}

/**
 * Tschirnhausen image of a monic f under Y -> c(Y):
 * Res_Y(f(Y), X - c(Y)) = prod over roots a of f of (X - c(a)).
 */
template <class F>
Poly<F> tschirnhausen_image(const Poly<F>& f, const Poly<F>& c) {
    if (f.degree() < 1) throw precondition_error("deg f < 1", "no roots to transform");
    return charpoly(multiplication_matrix(f.monic(), c));
}

}  // namespace tschirn
