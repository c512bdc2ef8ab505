#pragma once

#include <utility>
#include <vector>

#include "splitjac/algebra/polynomial.hpp"

namespace splitjac {

template <class R>
R ring_pow(const R& x, std::size_t e) {
    R r(1), b = x;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// Fraction-free Gaussian elimination (Bareiss).  Every division is exact in
// an integral domain, so this works over nested polynomial rings.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return R(0);
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = R(0);
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? -det : det;
}

template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Polynomial<R>& f, const Polynomial<R>& g) {
    const std::size_t m = f.deg0(), n = g.deg0(), N = m + n;
    std::vector<std::vector<R>> s(N, std::vector<R>(N, R(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
    return s;
}

// Determinant of the Sylvester matrix.  A zero argument gives 0 (the other
// must be nonzero); two nonzero constants give 1.
template <class R>
R resultant(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (f.is_zero() && g.is_zero()) throw MathError("f=g=0", "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return R(0);
    return bareiss_determinant(sylvester_matrix(f, g));
}

// (-1)^(n(n-1)/2) res(f, f') / lc(f)
template <class R>
R discriminant(const Polynomial<R>& f) {
    if (f.degree() < Degree(2)) throw MathError("deg<2", "discriminant needs degree at least 2");
    const std::size_t n = f.deg0();
    R d = exact_div(resultant(f, f.derivative()), f.leading());
    return (n * (n - 1) / 2) % 2 ? -d : d;
}

}  // namespace splitjac
