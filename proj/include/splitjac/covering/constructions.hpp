#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitjac/covering/models.hpp"
#include "splitjac/covering/residue.hpp"

namespace splitjac::cover {

// ---- polynomial building blocks; S may be a field or a parameter ring ----

template <class S>
Polynomial<S> cubic_P(const S& a, const S& b, const S& c) { return Polynomial<S>({c, b, a, S(1)}); }

template <class S>
Polynomial<S> cubic_Q(const S& b, const S& c) {
    return Polynomial<S>({c * c, S(2) * b * c, b * b, S(4) * c});
}

// (bx+3c)^2 ((b^3 - 4abc + 9c^2) x + c(b^2 - 3ac))
template <class S>
Polynomial<S> generic_f2_numerator(const S& a, const S& b, const S& c) {
    Polynomial<S> l({S(3) * c, b});
    Polynomial<S> m({c * (b * b - S(3) * a * c), b * b * b - S(4) * a * b * c + S(9) * c * c});
    return l * l * m;
}

// (a^2 - 4b) x^3 - 2ab x^2 - 3b^2 x
template <class S>
Polynomial<S> special_first_Q(const S& a, const S& b) {
    return Polynomial<S>({S(0), -(S(3) * b * b), -(S(2) * a * b), a * a - S(4) * b});
}

// (ax + 3b)^2 (a(a^2 - 4b) x + b(a^2 - 3b))
template <class S>
Polynomial<S> special_first_f2_numerator(const S& a, const S& b) {
    Polynomial<S> l({S(3) * b, a});
    Polynomial<S> m({b * (a * a - S(3) * b), a * (a * a - S(4) * b)});
    return l * l * m;
}

// (bx + 3c)(9c x^2 + 2b^2 x + 3bc)
template <class S>
Polynomial<S> special_second_P(const S& b, const S& c) {
    return Polynomial<S>({S(3) * c, b}) * Polynomial<S>({S(3) * b * c, S(2) * b * b, S(9) * c});
}

namespace detail {

template <Field T>
void require_nonzero(const T& v, const std::string& condition, const std::string& what) {
    if (is_zero(v)) throw MathError(condition, what + " (" + condition + ")");
}

template <Field T>
RationalFunction<T> derivative_over(const RationalFunction<T>& f, const Polynomial<T>& l) {
    auto d = f.derivative();
    return RationalFunction<T>(d.num(), d.den() * l);
}

}  // namespace detail

// Target model of f read off from the curve: the cubic whose roots are the
// images of the Weierstrass points outside the pole fibre, h from the square
// root of g(f)/sextic, and the scale s as the remaining constant.
template <Field T>
DegreeThreeCovering<T> derive_covering(const RationalFunction<T>& f, const GenusTwoModel<T>& C) {
    using PT = Polynomial<T>;
    using PPT = Polynomial<PT>;
    const PT& N = f.num();
    const PT& M = f.den();
    if (f.map_degree() != 3) throw MathError("deg(f)!=3", "covering map must have degree 3");
    PT comp;
    try {
        comp = exact_div(C.sextic, M);
    } catch (const MathError&) {
        throw MathError("den(f) does not divide sextic", "the pole divisor of f is not made of Weierstrass points");
    }
    const T one = one_like(C.twist);

    // res_y(X M(y) - N(y), comp(y)) in T[X]
    std::vector<PT> a;
    for (std::size_t i = 0; i <= std::max(N.deg0(), M.deg0()); ++i) a.push_back(PT({-N.coeff(i), M.coeff(i)}));
    PPT A(std::move(a));
    PPT Cy = comp.map([](const T& c) { return PT(c); });
    PT g = resultant(A, Cy);
    if (comp.deg0() == 2) {
        if (N.deg0() > M.deg0()) throw MathError("pole at infinity twice", "inconsistent pole fibre");
        T at_inf = N.deg0() == M.deg0() ? N.leading() / M.leading() : T(0) * one;
        g = g * PT({-at_inf, one});
    }
    if (!(g.degree() == 3)) throw MathError("deg(g)!=3", "derived target cubic has wrong degree");
    g = g.scale(one / g.leading());

    PT M2 = M * M, N2 = N * N;
    PT G = N2 * N + (N2 * M).scale(g.coeff(2)) + (N * M2).scale(g.coeff(1)) + (M2 * M).scale(g.coeff(0));
    RationalFunction<T> ratio(G, M2 * M * C.sextic);
    PT hn = monic_sqrt(ratio.num());
    PT hd = monic_sqrt(ratio.den());
    PT L = (G * hd * hd).scale(C.twist);
    PT Rr = M2 * M * C.sextic * hn * hn;
    T s = L.leading() / Rr.leading();
    if (!(L == Rr.scale(s))) throw std::logic_error("derived covering scale is not constant");
    WeierstrassModel<T> E{g.coeff(2), g.coeff(1), g.coeff(0), s};
    return {C, E, f, RationalFunction<T>(hn, hd)};
}

template <Field T>
CoveringPair<T> generic_cover(const T& a, const T& b, const T& c, std::optional<T> twist = std::nullopt) {
    using PT = Polynomial<T>;
    const T d = twist ? *twist : one_like(a + b + c);
    const T one = one_like(d);
    detail::require_nonzero(d, "d=0", "twist must be nonzero");
    detail::require_nonzero(c, "c=0", "generic parameters need c != 0");
    const T D1 = a * a * b * b - T(4) * b * b * b - T(4) * a * a * a * c + T(18) * a * b * c - T(27) * c * c;
    detail::require_nonzero(D1, "disc(P)=0", "P has a repeated root");
    const T D2 = b * b * b - T(27) * c * c;
    detail::require_nonzero(D2, "b^3-27c^2=0", "generic parameters need b^3 != 27c^2");
    PT P = cubic_P(a, b, c), Q = cubic_Q(b, c);
    detail::require_nonzero(discriminant(Q), "disc(Q)=0", "Q has a repeated root");
    detail::require_nonzero(resultant(P, Q), "res(P,Q)=0", "P and Q share a root");

    GenusTwoModel<T> C{P * Q, d};
    PT x2({T(0) * one, T(0) * one, one});
    RationalFunction<T> f1(x2, P);
    RationalFunction<T> h1 = detail::derivative_over(f1, PT({T(0) * one, one}));
    WeierstrassModel<T> E1{T(2) * (-a * b * b + T(6) * a * a * c - T(9) * b * c) / D1, (b * b - T(12) * a * c) / D1,
                           T(4) * c / D1, d / D1};

    PT N2 = generic_f2_numerator(a, b, c);
    detail::require_nonzero(resultant(N2, Q), "res(num(f2),den(f2))=0", "numerator and denominator of f2 share a root");
    RationalFunction<T> f2(N2, Q);
    RationalFunction<T> h2 = detail::derivative_over(f2, PT({T(3) * c, b}));
    T t = T(2) * b * b * b - T(9) * a * b * c + T(27) * c * c;
    WeierstrassModel<T> E2{a * b * b * b - T(27) * b * b * c + T(54) * a * c * c,
                           b.pow(7) - T(18) * a * b.pow(5) * c + T(54) * a * a * b * b * b * c * c +
                               T(189) * b.pow(4) * c * c - T(972) * a * b * b * c * c * c + T(729) * a * a * c.pow(4) +
                               T(729) * b * c.pow(4),
                           -c * t * t * t, D2 * d};

    T num1 = a * a * b.pow(4) + T(12) * b.pow(5) - T(126) * a * b * b * b * c + T(216) * a * a * b * c * c +
             T(405) * b * b * c * c - T(972) * a * c * c * c;
    T jE1 = T(16) * num1 * num1 * num1 / (D2 * D2 * D2 * D1 * D1);
    T u = a * a - T(3) * b;
    T jE2 = T(256) * u * u * u / D1;
    return {C, {C, E1, f1, h1}, {C, E2, f2, h2}, jE1, jE2};
}

template <Field T>
CoveringPair<T> special_first(const T& a, const T& b, std::optional<T> twist = std::nullopt) {
    using PT = Polynomial<T>;
    const T d = twist ? *twist : one_like(a + b);
    const T one = one_like(d);
    detail::require_nonzero(d, "d=0", "twist must be nonzero");
    detail::require_nonzero(b, "b=0", "special parameters need b != 0");
    const T e4 = a * a - T(4) * b, e3 = a * a - T(3) * b;
    detail::require_nonzero(e4, "a^2-4b=0", "special parameters need a^2 != 4b");
    detail::require_nonzero(e3, "a^2-3b=0", "special parameters need a^2 != 3b");
    PT Pm({b, a, one});
    PT Q = special_first_Q(a, b);
    PT sextic = Q * Pm;
    detail::require_nonzero(discriminant(sextic), "disc(C)=0", "the model sextic is not squarefree");

    GenusTwoModel<T> C{sextic, d};
    PT x3({T(0) * one, T(0) * one, T(0) * one, one});
    RationalFunction<T> f1(x3, Pm);
    PT N2 = special_first_f2_numerator(a, b);
    detail::require_nonzero(resultant(N2, Q), "res(num(f2),den(f2))=0", "numerator and denominator of f2 share a root");
    RationalFunction<T> f2(N2, Q);

    T inner = T(16) * a.pow(6) - T(144) * a.pow(4) * b + T(405) * a * a * b * b - T(324) * b * b * b;
    T jE1 = T(16) * inner * inner * inner / (T(729) * b.pow(4) * e3 * e3 * e3 * e4 * e4);
    T jE2 = T(256) * e3 * e3 * e3 / (b * b * e4);
    return {C, derive_covering(f1, C), derive_covering(f2, C), jE1, jE2};
}

template <Field T>
CoveringPair<T> special_second(const T& b, const T& c, std::optional<T> twist = std::nullopt) {
    using PT = Polynomial<T>;
    const T d = twist ? *twist : one_like(b + c);
    const T one = one_like(d);
    detail::require_nonzero(d, "d=0", "twist must be nonzero");
    detail::require_nonzero(b, "b=0", "special parameters need b != 0");
    detail::require_nonzero(c, "c=0", "special parameters need c != 0");
    PT P = special_second_P(b, c), Q = cubic_Q(b, c);
    if (is_zero(resultant(P, Q)))
        throw MathError("res(P,Q)=0",
                        "P and Q share a root, so y^2 = P(x)Q(x) is not a hyperelliptic curve (a common root is a "
                        "multiple root of both P(x) and Q(x))");
    const T D = b * b * b - T(27) * c * c;
    detail::require_nonzero(D, "b^3-27c^2=0", "special parameters need b^3 != 27c^2");
    const T D4 = T(4) * b * b * b - T(27) * c * c;
    detail::require_nonzero(D4, "4b^3-27c^2=0", "special parameters need 4b^3 != 27c^2");
    detail::require_nonzero(discriminant(P * Q), "disc(C)=0", "the model sextic is not squarefree");

    GenusTwoModel<T> C{P * Q, d};
    PT x2({T(0) * one, T(0) * one, one});
    RationalFunction<T> f1(x2, P);
    RationalFunction<T> h1 = detail::derivative_over(f1, PT({T(0) * one, one}));
    T D3 = D * D * D;
    WeierstrassModel<T> E1{T(3) / D, -(T(3) * (T(5) * b * b * b + T(108) * c * c)) / (T(4) * D3), one / D3,
                           T(9) * b * d / (T(4) * D3)};

    PT l({T(3) * c, b});
    RationalFunction<T> f2(l * l * l, Q);
    RationalFunction<T> h2 = detail::derivative_over(f2, l);
    WeierstrassModel<T> E2{T(2) * D / c, -(T(27) * D), T(0) * one, d / c};

    T jE1 = T(64) * b * b * b / (c * c);
    T jE2 = T(64) * D4 * D4 * D4 / (T(729) * b * b * b * c.pow(4));
    return {C, {C, E1, f1, h1}, {C, E2, f2, h2}, jE1, jE2};
}

}  // namespace splitjac::cover
