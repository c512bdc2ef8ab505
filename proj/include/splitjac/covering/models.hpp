#pragma once

#include <string>

#include "splitjac/algebra.hpp"

namespace splitjac::cover {

// d·y^2 = sextic(x)
template <Field T>
struct GenusTwoModel {
    Polynomial<T> sextic;
    T twist;
};

// s·Y^2 = X^3 + c2 X^2 + c1 X + c0
template <Field T>
struct WeierstrassModel {
    T c2, c1, c0;
    T scale;

    Polynomial<T> cubic() const { return Polynomial<T>({c0, c1, c2, one_like(scale)}); }

    static WeierstrassModel from_cubic(const Polynomial<T>& g, const T& s) {
        if (!(g.degree() == 3)) throw MathError("deg(g)!=3", "Weierstrass cubic must have degree 3");
        T lc = g.leading();
        return {g.coeff(2) / lc, g.coeff(1) / lc, g.coeff(0) / lc, s * lc};
    }
};

// (x, y) -> (x_map(x), y * y_multiplier(x))
template <Field T>
struct DegreeThreeCovering {
    GenusTwoModel<T> source;
    WeierstrassModel<T> target;
    RationalFunction<T> x_map;
    RationalFunction<T> y_multiplier;
};

template <Field T>
struct CoveringPair {
    GenusTwoModel<T> curve;
    DegreeThreeCovering<T> phi1, phi2;
    T jE1, jE2;
};

// Classical j = c4^3 / Delta of y^2 = x^3 + a2 x^2 + a4 x + a6; the scale s
// only twists the curve and does not enter.
template <Field T>
T j_of_weierstrass(const WeierstrassModel<T>& E) {
    Polynomial<T> g = E.cubic();
    T disc = discriminant(g);
    if (is_zero(disc)) throw MathError("disc(cubic)=0", "singular Weierstrass cubic");
    if (is_zero(E.scale)) throw MathError("s=0", "Weierstrass model with zero scale");
    T c4 = T(16) * E.c2 * E.c2 - T(48) * E.c1;
    return c4 * c4 * c4 / (T(16) * disc);
}

// s·h^2·sextic/d == g(f), cleared of denominators:
// s·hn^2·sextic·M^3 == d·hd^2·(N^3 + c2 N^2 M + c1 N M^2 + c0 M^3).
template <Field T>
bool verify_covering(const DegreeThreeCovering<T>& cov) {
    const auto& f = cov.x_map;
    if (f.map_degree() != 3) return false;
    if (is_zero(cov.source.twist) || is_zero(cov.target.scale)) return false;
    const Polynomial<T>& N = f.num();
    const Polynomial<T>& M = f.den();
    const Polynomial<T>& hn = cov.y_multiplier.num();
    const Polynomial<T>& hd = cov.y_multiplier.den();
    const auto& E = cov.target;
    Polynomial<T> M2 = M * M, N2 = N * N;
    Polynomial<T> G = N2 * N + (N2 * M).scale(E.c2) + (N * M2).scale(E.c1) + (M2 * M).scale(E.c0);
    Polynomial<T> lhs = (hn * hn * cov.source.sextic * M2 * M).scale(E.scale);
    Polynomial<T> rhs = (hd * hd * G).scale(cov.source.twist);
    return lhs == rhs;
}

template <Field T>
T F_relation(const T& X, const T& Y) {
    return X * X * X - T(1296) * X * X - T(729) * X * Y + T(559872) * X - T(80621568);
}

template <Field T>
Json to_json(const GenusTwoModel<T>& C) {
    return Json{{"sextic", splitjac::to_json(C.sextic)}, {"twist", splitjac::to_json(C.twist)}};
}

template <Field T>
Json to_json(const WeierstrassModel<T>& E) {
    return Json{{"cubic", splitjac::to_json(E.cubic())}, {"scale", splitjac::to_json(E.scale)}};
}

template <Field T>
Json to_json(const DegreeThreeCovering<T>& c) {
    return Json{{"x_num", splitjac::to_json(c.x_map.num())},
                {"x_den", splitjac::to_json(c.x_map.den())},
                {"y_mul_num", splitjac::to_json(c.y_multiplier.num())},
                {"y_mul_den", splitjac::to_json(c.y_multiplier.den())},
                {"target", to_json(c.target)}};
}

template <Field T>
Json to_json(const CoveringPair<T>& p) {
    return Json{{"curve", to_json(p.curve)},
                {"maps", Json::array({to_json(p.phi1), to_json(p.phi2)})},
                {"j", Json::array({splitjac::to_json(p.jE1), splitjac::to_json(p.jE2)})}};
}

}  // namespace splitjac::cover
