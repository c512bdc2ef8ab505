#pragma once

#include <array>
#include <utility>
#include <vector>

#include "splitjac/hesse.hpp"
#include "splitjac/invariants/igusa.hpp"

namespace splitjac::glue {

// 3a^2b^2 + a^3 + b^3 - 3ab + 2; zero exactly when E_a and E_b are 2-isogenous
// through the fixed gluing.
template <Ring R>
R degeneracy_value(const R& a, const R& b) {
    return R(3) * a * a * b * b + a * a * a + b * b * b - R(3) * a * b + R(2);
}

template <Ring R>
R modular_phi2(const R& X, const R& Y) {
    R X2 = X * X, Y2 = Y * Y;
    return X2 * X + Y2 * Y - X2 * Y2 + R(1488) * (X2 * Y + X * Y2) - R(162000) * (X2 + Y2) + R(40773375) * X * Y +
           R(8748000000LL) * (X + Y) - R(157464000000000LL);
}

namespace detail {

struct SymTerm {
    long long coeff;
    int m, n;  // contributes coeff * (a^m b^n + a^n b^m), once when m == n
};

// inner factor of I2 (I2 = 72 * this)
inline constexpr std::array<SymTerm, 15> kI2Inner{{
    {9, 6, 6},    {-30, 7, 4},  {-88, 5, 5}, {1, 8, 2},    {54, 6, 3}, {65, 4, 4},  {-32, 7, 1}, {-104, 5, 2},
    {40, 6, 0},   {44, 3, 3},   {100, 4, 1}, {-68, 2, 2},  {16, 3, 0}, {112, 1, 1}, {-20, 0, 0},
}};

// I4 = 36 deg^4 * this
inline constexpr std::array<SymTerm, 7> kI4Inner{{
    {9, 4, 4}, {240, 3, 3}, {8, 4, 1}, {240, 2, 2}, {160, 3, 0}, {256, 1, 1}, {320, 0, 0},
}};

// I6 = 72 deg^4 * this
inline constexpr std::array<SymTerm, 32> kI6Inner{{
    {729, 10, 10},    {-3402, 11, 8},  {30456, 9, 9},   {81, 12, 6},     {-70794, 10, 7}, {-201555, 8, 8},
    {-2160, 11, 5},   {60, 12, 3},     {106560, 9, 6},  {-148932, 7, 7}, {-121608, 10, 4}, {480, 11, 2},
    {-358740, 8, 5},  {-8, 12, 0},     {156928, 9, 3},  {336444, 6, 6}, {-50160, 10, 1}, {81072, 7, 4},
    {-462096, 5, 5},  {-167112, 8, 2}, {84224, 9, 0},   {455568, 6, 3}, {761040, 4, 4},  {181152, 7, 1},
    {-93600, 5, 2},   {219552, 6, 0},  {383424, 3, 3},  {564480, 4, 1}, {88512, 2, 2},   {74624, 3, 0},
    {314112, 1, 1},   {-55040, 0, 0},
}};

template <Ring R, std::size_t N>
R eval_sym(const std::array<SymTerm, N>& terms, const R& a, const R& b) {
    std::array<R, 13> pa, pb;
    pa[0] = R(1);
    pb[0] = R(1);
    for (int i = 1; i < 13; ++i) {
        pa[i] = pa[i - 1] * a;
        pb[i] = pb[i - 1] * b;
    }
    R acc(0);
    for (const auto& t : terms) {
        R mono = pa[t.m] * pb[t.n];
        if (t.m != t.n) mono = mono + pa[t.n] * pb[t.m];
        acc = acc + R(t.coeff) * mono;
    }
    return acc;
}

}  // namespace detail

// The four closed-form Igusa-Clebsch polynomials, evaluated in any ring
// (numbers, or nested polynomials for symbolic checks).
template <Ring R>
std::array<R, 4> prop2_polynomials(const R& a, const R& b) {
    R d = degeneracy_value(a, b);
    R d2 = d * d, d4 = d2 * d2, d12 = d4 * d4 * d4;
    return {R(72) * detail::eval_sym(detail::kI2Inner, a, b), R(36) * d4 * detail::eval_sym(detail::kI4Inner, a, b),
            R(72) * d4 * detail::eval_sym(detail::kI6Inner, a, b),
            R(36864) * (a * a * a + R(1)) * (b * b * b + R(1)) * d12};
}

template <Field T>
igusa::IgusaClebsch<T> prop2_invariants(const T& a, const T& b) {
    if (is_zero(a * a * a + T(1))) throw MathError("a^3=-1", "E_a is singular (a^3 = -1)");
    if (is_zero(b * b * b + T(1))) throw MathError("b^3=-1", "E_b is singular (b^3 = -1)");
    if (is_zero(degeneracy_value(a, b)))
        throw MathError("3a^2b^2+a^3+b^3-3ab+2=0",
                        "E_a and E_b are 2-isogenous: quotient splits as a product of elliptic curves, not a Jacobian");
    auto v = prop2_polynomials(a, b);
    return {v[0], v[1], v[2], v[3]};
}

// Classes of the 144 pairs (a', b') from orbit12(a) x orbit12(b) with
// weighted-projectively equal invariants.  Index pairs refer to the orbit
// lists; pairs whose entry is undefined or whose quotient is degenerate are
// collected separately.
struct OrbitPartition {
    std::vector<std::vector<std::pair<int, int>>> classes;
    std::vector<std::pair<int, int>> excluded;
};

template <Field T>
OrbitPartition orbit_pair_partition(const T& a, const T& b) {
    auto oa = hesse::orbit12(a), ob = hesse::orbit12(b);
    OrbitPartition out;
    std::vector<igusa::IgusaClebsch<T>> reps;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            if (!oa[i].value || !ob[j].value) {
                out.excluded.emplace_back(i, j);
                continue;
            }
            igusa::IgusaClebsch<T> ic;
            try {
                ic = prop2_invariants(*oa[i].value, *ob[j].value);
            } catch (const MathError&) {
                out.excluded.emplace_back(i, j);
                continue;
            }
            std::size_t k = 0;
            for (; k < reps.size(); ++k)
                if (igusa::wp_equal(reps[k], ic)) break;
            if (k == reps.size()) {
                reps.push_back(ic);
                out.classes.emplace_back();
            }
            out.classes[k].emplace_back(i, j);
        }
    return out;
}

}  // namespace splitjac::glue
