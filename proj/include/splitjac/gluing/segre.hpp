#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "splitjac/hesse.hpp"

namespace splitjac::glue {

using hesse::HesseCurve;
using hesse::HessePoint;

template <Field T>
using Vec9 = std::array<T, 9>;

template <Field T>
using LinearForm9 = Vec9<T>;

template <Field T>
using QuadraticForm9 = Form<T, 9>;

// Projective point of P^8, normalized like Hesse points.
template <Field T>
struct SegrePoint {
    Vec9<T> X;

    static SegrePoint from(const Vec9<T>& v) {
        for (int i = 8; i >= 0; --i) {
            if (!is_zero(v[i])) {
                T inv = T(1) / v[i];
                SegrePoint s;
                for (int k = 0; k < 9; ++k) s.X[k] = v[k] * inv;
                return s;
            }
        }
        throw std::logic_error("zero vector is not a point of P^8");
    }

    // the 3x3 matrix (X_{3i+j}) has rank one
    bool on_segre_image() const {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = k + 1; l < 3; ++l)
                        if (!is_zero(X[3 * i + k] * X[3 * j + l] - X[3 * i + l] * X[3 * j + k])) return false;
        return true;
    }
    friend bool operator==(const SegrePoint&, const SegrePoint&) = default;
};

template <Field T>
SegrePoint<T> segre_embed(const HessePoint<T>& P, const HessePoint<T>& Q) {
    auto p = P.coords(), q = Q.coords();
    Vec9<T> v;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[3 * i + j] = p[i] * q[j];
    return SegrePoint<T>::from(v);
}

// X -> M X, acting projectively.
template <Field T>
struct ProjLinearMap9 {
    std::array<Vec9<T>, 9> M;

    // new X_k = coeff[k] * X_{src[k]}
    static ProjLinearMap9 monomial(const std::array<int, 9>& src, const Vec9<T>& coeff) {
        ProjLinearMap9 m;
        const T zero = coeff[0] - coeff[0];
        for (auto& row : m.M) row.fill(zero);
        for (int k = 0; k < 9; ++k) m.M[k][src[k]] = coeff[k];
        return m;
    }
    static ProjLinearMap9 identity(const T& one) {
        std::array<int, 9> src{0, 1, 2, 3, 4, 5, 6, 7, 8};
        Vec9<T> c;
        c.fill(one);
        return monomial(src, c);
    }

    Vec9<T> operator()(const Vec9<T>& x) const {
        Vec9<T> out;
        for (int k = 0; k < 9; ++k) {
            T acc = M[k][0] * x[0];
            for (int j = 1; j < 9; ++j) acc = acc + M[k][j] * x[j];
            out[k] = acc;
        }
        return out;
    }
    SegrePoint<T> operator()(const SegrePoint<T>& p) const { return SegrePoint<T>::from((*this)(p.X)); }

    friend ProjLinearMap9 operator*(const ProjLinearMap9& A, const ProjLinearMap9& B) {
        ProjLinearMap9 C;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                T acc = A.M[i][0] * B.M[0][j];
                for (int k = 1; k < 9; ++k) acc = acc + A.M[i][k] * B.M[k][j];
                C.M[i][j] = acc;
            }
        return C;
    }

    bool projectively_equal(const ProjLinearMap9& o) const {
        std::optional<T> lambda;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                if (is_zero(M[i][j]) != is_zero(o.M[i][j])) return false;
                if (is_zero(M[i][j])) continue;
                T r = M[i][j] / o.M[i][j];
                if (!lambda) lambda = r;
                else if (!(r == *lambda)) return false;
            }
        return lambda.has_value();
    }

    // the linear form L(M X)
    LinearForm9<T> pullback(const LinearForm9<T>& L) const {
        LinearForm9<T> out;
        for (int j = 0; j < 9; ++j) {
            T acc = L[0] * M[0][j];
            for (int k = 1; k < 9; ++k) acc = acc + L[k] * M[k][j];
            out[j] = acc;
        }
        return out;
    }

    QuadraticForm9<T> pullback(const QuadraticForm9<T>& q) const {
        std::array<QuadraticForm9<T>, 9> rows;
        for (int k = 0; k < 9; ++k) rows[k] = QuadraticForm9<T>::linear(M[k]);
        return q.compose(rows);
    }
};

template <Field T>
T evaluate(const LinearForm9<T>& L, const Vec9<T>& x) {
    T acc = L[0] * x[0];
    for (int k = 1; k < 9; ++k) acc = acc + L[k] * x[k];
    return acc;
}

template <Field T>
std::optional<T> linear_ratio(const LinearForm9<T>& a, const LinearForm9<T>& b) {
    std::optional<T> lambda;
    for (int k = 0; k < 9; ++k) {
        if (is_zero(a[k]) != is_zero(b[k])) return std::nullopt;
        if (is_zero(a[k])) continue;
        T r = a[k] / b[k];
        if (!lambda) lambda = r;
        else if (!(r == *lambda)) return std::nullopt;
    }
    return lambda;
}

template <Field T>
struct StructuralMaps {
    ProjLinearMap9<T> inversion, trans1, trans2;
    std::array<LinearForm9<T>, 9> L;
    std::array<LinearForm9<T>, 5> S1;
    std::array<LinearForm9<T>, 4> S2;
    std::array<QuadraticForm9<T>, 4> kummer;
};

// Inversion, the two translation generators, the invariant hyperplanes
// L1..L9, the two eigenform sets and the four Kummer quadrics.
template <Field T>
StructuralMaps<T> structural_maps(const T& like) {
    const T one = one_like(like), zero = T(0) * one, w = omega(like), w2 = w * w;
    StructuralMaps<T> s;
    Vec9<T> ones;
    ones.fill(one);
    // indices are 0-based: X_k is entry k-1
    s.inversion = ProjLinearMap9<T>::monomial({4, 3, 5, 1, 0, 2, 7, 6, 8}, ones);
    s.trans1 = ProjLinearMap9<T>::monomial({4, 5, 3, 7, 8, 6, 1, 2, 0}, ones);
    s.trans2 = ProjLinearMap9<T>::monomial({0, 1, 2, 3, 4, 5, 6, 7, 8}, {one, w, w2, w2, one, w, w, w2, one});

    auto lf = [&](std::initializer_list<std::pair<int, T>> terms) {
        LinearForm9<T> v;
        v.fill(zero);
        for (const auto& [k, c] : terms) v[k - 1] = c;
        return v;
    };
    s.L = {lf({{1, one}, {5, one}, {9, one}}),  lf({{1, w}, {5, w2}, {9, one}}),  lf({{1, w2}, {5, w}, {9, one}}),
           lf({{3, one}, {4, one}, {8, one}}),  lf({{2, one}, {6, one}, {7, one}}), lf({{3, w2}, {4, w}, {8, one}}),
           lf({{2, w}, {6, w2}, {7, one}}),     lf({{3, w}, {4, w2}, {8, one}}),  lf({{2, w2}, {6, w}, {7, one}})};
    s.S1 = {lf({{1, one}, {5, one}}), lf({{2, one}, {4, one}}), lf({{3, one}, {6, one}}), lf({{7, one}, {8, one}}),
            lf({{9, one}})};
    s.S2 = {lf({{1, one}, {5, -one}}), lf({{2, one}, {4, -one}}), lf({{3, one}, {6, -one}}), lf({{7, one}, {8, -one}})};

    auto X = [&](int k) { return QuadraticForm9<T>::var(k - 1, one); };
    s.kummer = {X(2) * X(4) + X(3) * X(7) + X(6) * X(8), X(2) * X(3) + X(4) * X(6) + X(7) * X(8),
                X(2) * X(8) + X(3) * X(6) + X(4) * X(7), X(1) * X(1) + X(5) * X(5) + X(9) * X(9)};
    return s;
}

// ---- which translations the two generators realize ----

// Element m S + n T of E_a[3] glued to m S + 2n T of E_b[3].
struct GammaElement {
    int m = 0, n = 0;
    friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

inline std::string to_string(const GammaElement& g) {
    return "(" + std::to_string(g.m) + "S+" + std::to_string(g.n) + "T, " + std::to_string(g.m) + "S+" +
           std::to_string((2 * g.n) % 3) + "T)";
}

struct TranslationCorrespondence {
    GammaElement trans1, trans2;
    int samples = 0;
};

namespace detail {

template <Field T>
HessePoint<T> torsion_combination(const HesseCurve<T>& E, int m, int n) {
    auto S = hesse::torsion_S(E), Tt = hesse::torsion_T(E);
    return hesse::add(hesse::mul(m, S), hesse::mul(n, Tt));
}

}  // namespace detail

inline TranslationCorrespondence translation_correspondence(const Fp& a, const Fp& b, std::uint64_t seed = 1,
                                                            int samples = 12) {
    HesseCurve<Fp> Ea(a), Eb(b);
    if (!has_omega(a)) throw MathError("omega not in field", "p must be 1 mod 3");
    auto maps = structural_maps(a);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<HessePoint<Fp>, HessePoint<Fp>>> pts;
    for (int i = 0; i < samples; ++i) pts.emplace_back(hesse::random_point(Ea, rng), hesse::random_point(Eb, rng));

    auto realized = [&](const ProjLinearMap9<Fp>& M) {
        std::vector<GammaElement> hits;
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
                if (m == 0 && n == 0) continue;
                auto g1 = detail::torsion_combination(Ea, m, n), g2 = detail::torsion_combination(Eb, m, 2 * n);
                bool ok = true;
                for (const auto& [P, Q] : pts)
                    if (!(M(segre_embed(P, Q)) == segre_embed(hesse::add(P, g1), hesse::add(Q, g2)))) {
                        ok = false;
                        break;
                    }
                if (ok) hits.push_back({m, n});
            }
        if (hits.size() != 1)
            throw MathError("no consistent matching",
                            "translation matrix matches " + std::to_string(hits.size()) + " elements of the glued group");
        return hits.front();
    };
    return {realized(maps.trans1), realized(maps.trans2), samples};
}

template <Field T>
Json to_json(const SegrePoint<T>& p) { return splitjac::to_json(std::vector<T>(p.X.begin(), p.X.end())); }

}  // namespace splitjac::glue
