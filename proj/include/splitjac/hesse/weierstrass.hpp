#pragma once

#include <algorithm>
#include <array>

#include "splitjac/hesse/curve.hpp"

namespace splitjac::hesse {

template <Field T>
struct HesseConversion {
    T t, u;
    std::array<T, 3> ordered_roots;         // (t1, t2, t3) on the surface
    std::array<std::array<T, 3>, 3> iso;    // rows give the new x, y, z
};

template <Field T>
using TernaryForm = Form<T, 3>;

// -y^2 z + x^3 + A x z^2 + B z^3
template <Field T>
TernaryForm<T> weierstrass_form(const T& A, const T& B) {
    const T one = one_like(A + B);
    auto x = TernaryForm<T>::var(0, one), y = TernaryForm<T>::var(1, one), z = TernaryForm<T>::var(2, one);
    return x * x * x - y * y * z + (x * z * z).scale(A) + (z * z * z).scale(B);
}

template <Field T>
TernaryForm<T> hesse_form(const T& a) {
    const T one = one_like(a);
    auto x = TernaryForm<T>::var(0, one), y = TernaryForm<T>::var(1, one), z = TernaryForm<T>::var(2, one);
    return x * x * x + y * y * y + z * z * z + (x * y * z).scale(T(3) * a);
}

// 3x^4 + 6Ax^2 + 12Bx - A^2, whose roots are the x-coordinates of the flexes.
template <Field T>
Polynomial<T> flex_quartic(const T& A, const T& B) {
    return Polynomial<T>({-(A * A), T(12) * B, T(6) * A, T(0) * A, T(3) * one_like(A + B)});
}

// Hesse parameter t and the linear isomorphism from
// -y^2 z + x^3 - 3t(t^3-8) x z^2 - 2(t^6+20t^3-8) z^3 onto E_t.  That model
// is y^2 = x^3 + A x + B rescaled by u (A u^2, B u^3), i.e. a quadratic twist.
template <Field T>
HesseConversion<T> weierstrass_to_hesse(const T& A, const T& B) {
    const T one = one_like(A + B);
    if (is_zero(T(4) * A * A * A + T(27) * B * B)) throw MathError("4A^3+27B^2=0", "singular Weierstrass model");
    if (!has_omega(one)) throw MathError("omega not in field", "the field does not contain a primitive cube root of unity");
    const T w = omega(one);
    std::vector<T> r = roots(flex_quartic(A, B));
    if (r.size() < 4)
        throw MathError("quartic does not split",
                        "3x^4+6Ax^2+12Bx-A^2 has " + std::to_string(r.size()) + " roots in the field: the 3-torsion is not rational");
    const T w2 = w * w;
    std::array<int, 4> idx{0, 1, 2, 3};
    do {
        const T &t1 = r[idx[0]], &t2 = r[idx[1]], &t3 = r[idx[2]];
        T surf = t1 * t1 + w * t2 * t2 + w2 * t3 * t3 - T(2) * w2 * t1 * t2 - T(2) * w * t1 * t3 - T(2) * t2 * t3;
        if (!is_zero(surf)) continue;
        T s = t2 - t3;
        T t = (T(3) * t1 + (T(5) + w) * t2 + (T(4) - w) * t3) / ((one + T(2) * w) * s);
        T u = T(12) * (t1 + (T(2) + w) * t2 + (one - w) * t3) / (s * s);
        if (is_zero(t * t * t + one)) throw std::logic_error("Hesse parameter with t^3 = -1");
        T r3 = one + T(2) * w;
        T c = T(3) * (t * t * t + T(4));
        std::array<std::array<T, 3>, 3> M{{{T(3) * t, -r3, c}, {T(3) * t, r3, c}, {T(6) * one, T(0) * one, T(-18) * t * t}}};
        return {t, u, {t1, t2, t3}, M};
    } while (std::next_permutation(idx.begin(), idx.end()));
    throw std::logic_error("no ordering of the flex roots lies on the surface");
}

// The normalized Weierstrass model attached to t.
template <Field T>
TernaryForm<T> normalized_weierstrass_form(const T& t) {
    T t3 = t * t * t;
    return weierstrass_form<T>(T(-3) * t * (t3 - T(8)), T(-2) * (t3 * t3 + T(20) * t3 - T(8)));
}

// H(M v) = lambda * F(v) with lambda != 0, as an identity of ternary forms.
template <Field T>
std::optional<T> hesse_substitution_factor(const HesseConversion<T>& c) {
    std::array<TernaryForm<T>, 3> rows;
    for (int i = 0; i < 3; ++i) rows[i] = TernaryForm<T>::linear(c.iso[i]);
    TernaryForm<T> lhs = hesse_form(c.t).compose(rows);
    return lhs.ratio_to(normalized_weierstrass_form(c.t));
}

template <Field T>
Json to_json(const HesseConversion<T>& c) {
    Json M = Json::array();
    for (const auto& row : c.iso) M.push_back(Json::array({splitjac::to_json(row[0]), splitjac::to_json(row[1]), splitjac::to_json(row[2])}));
    return Json{{"t", splitjac::to_json(c.t)}, {"u", splitjac::to_json(c.u)}, {"iso", M}};
}

}  // namespace splitjac::hesse
