#pragma once

#include <array>

#include "splitjac/hesse/weierstrass.hpp"

namespace splitjac::hesse {

// gamma: E_a -> E_b with kernel {O, [t:t:1]}.
template <Field T>
struct TwoIsogeny {
    T t, a, b;
    std::array<TernaryForm<T>, 3> map;
};

template <Field T>
TwoIsogeny<T> two_isogeny(const T& t) {
    const T one = one_like(t);
    const T t2 = t * t, t3 = t2 * t;
    if (is_zero(t * (t3 - one) * (T(8) * t3 + one)))
        throw MathError("t(t^3-1)(8t^3+1)=0", "the 2-isogeny family needs t(t^3-1)(8t^3+1) != 0");
    T a = -(one + T(2) * t3) / (T(3) * t2);
    T b = (one - T(4) * t3) / (T(3) * t);
    auto x = TernaryForm<T>::var(0, one), y = TernaryForm<T>::var(1, one), z = TernaryForm<T>::var(2, one);
    auto f1 = x * ((y * y).scale(T(-2) * t2) - (x * y).scale(t2) + (x * x).scale(t2) - y * z + (x * z).scale(T(2) * t3) +
                   (z * z).scale(t));
    auto f2 = y * ((x * x).scale(T(-2) * t2) - (x * y).scale(t2) + (y * y).scale(t2) - x * z + (y * z).scale(T(2) * t3) +
                   (z * z).scale(t));
    auto f3 = (z * (x + y + z.scale(t)) * (x + y - z.scale(T(2) * t))).scale(t);
    HesseCurve<T> Ea(a), Eb(b);  // rejects a^3 = -1 or b^3 = -1
    return {t, a, b, {f1, f2, f3}};
}

// gamma(P); where all three forms vanish, gamma(P) = gamma(P + R) - gamma(R)
// for a 3-torsion point R at which the forms do not vanish.
template <Field T>
HessePoint<T> apply(const TwoIsogeny<T>& g, const HessePoint<T>& P) {
    HesseCurve<T> Eb(g.b);
    auto raw = [&](const HessePoint<T>& q) {
        std::array<T, 3> c = q.coords();
        return std::array<T, 3>{g.map[0](c), g.map[1](c), g.map[2](c)};
    };
    auto r = raw(P);
    if (!detail::all_zero(r)) return make_point(Eb, r[0], r[1], r[2]);
    HesseCurve<T> Ea(g.a);
    auto S = torsion_S(Ea);
    for (const auto& R : {S, dbl(S), torsion_T(Ea), add(S, torsion_T(Ea))}) {
        auto r1 = raw(add(P, R)), r2 = raw(R);
        if (detail::all_zero(r1) || detail::all_zero(r2)) continue;
        return sub(make_point(Eb, r1[0], r1[1], r1[2]), make_point(Eb, r2[0], r2[1], r2[2]));
    }
    throw std::logic_error("2-isogeny base points exhausted");
}

template <Field T>
Json to_json(const TwoIsogeny<T>& g) {
    return Json{{"t", splitjac::to_json(g.t)},
                {"source", Json{{"a", splitjac::to_json(g.a)}}},
                {"target", Json{{"a", splitjac::to_json(g.b)}}},
                {"map", Json::array({splitjac::to_json(g.map[0]), splitjac::to_json(g.map[1]), splitjac::to_json(g.map[2])})}};
}

}  // namespace splitjac::hesse
