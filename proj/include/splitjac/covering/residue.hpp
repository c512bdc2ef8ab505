#pragma once

#include <numeric>

#include "splitjac/algebra.hpp"

namespace splitjac::cover {

namespace detail {

template <class S>
void collect_base(const S& s, std::vector<Rational>& out) {
    if constexpr (is_polynomial_v<S>) {
        for (const auto& c : s.coefficients()) collect_base(c, out);
    } else {
        out.push_back(s);
    }
}

}  // namespace detail

// Canonical representative of p up to units of the coefficient ring: content
// removed, then (over Q) integer coefficients with gcd 1 and positive leading
// base coefficient; over other fields, monic in the recursive sense.
template <class S>
Polynomial<S> canonical_scaling(const Polynomial<S>& p) {
    if (p.is_zero()) return p;
    Polynomial<S> q = primitive_part(p);
    if constexpr (std::same_as<base_field_t<S>, Rational>) {
        std::vector<Rational> base;
        detail::collect_base(q, base);
        mpz_class l = 1, g = 0;
        for (const auto& r : base) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.denominator().get_mpz_t());
        for (const auto& r : base) {
            mpz_class n = r.numerator() * (l / r.denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
        Rational factor(l, g);
        if (base_leading(q).sign() < 0) factor = -factor;
        return divide_by_base(q, factor.inverse());
    } else {
        return normalize_unit(q);
    }
}

// Remainder of the complementary-fibre polynomial modulo P.
//
// For f = N/M of degree 3 let D be the ramification polynomial with the
// multiple zeros of N divided out.  res_y(N(x)M(y) - N(y)M(x), D(y)) is
// divisible by D(x)^2, and the cofactor R (times triple zeros of N) has as
// roots the points that share a fibre with a ramification point.  f is the
// complement of the map with pole divisor P exactly when P | R.  When deg P is
// 2 (P has a zero at infinity) the x^3 coefficient of R must also vanish; it
// is returned as the coefficient of x^deg(P).
template <class S>
Polynomial<S> complement_residue(const Polynomial<S>& N, const Polynomial<S>& M, const Polynomial<S>& P) {
    using PS = Polynomial<S>;
    using PPS = Polynomial<PS>;
    if (N.is_zero() || M.is_zero()) throw MathError("f=0", "degenerate candidate: zero numerator or denominator");
    if (gcd(N, M).deg0() > 0)
        throw MathError("gcd(num,den)!=1", "degenerate candidate: numerator and denominator share a factor");
    if (P.degree() < Degree(2) || P.degree() > Degree(3)) throw MathError("deg(P) not in {2,3}", "P must have degree 2 or 3");

    PS W = N.derivative() * M - N * M.derivative();
    PS g = gcd(N, N.derivative());
    PS D = canonical_scaling(exact_div(W, g));
    if (D.deg0() == 0) throw MathError("deg(D)=0", "candidate has no simple ramification");

    // A(y) = N(x) M(y) - N(y) M(x) with coefficients in S[x]
    std::vector<PS> a;
    for (std::size_t i = 0; i <= std::max(N.deg0(), M.deg0()); ++i) a.push_back(N.scale(M.coeff(i)) - M.scale(N.coeff(i)));
    PPS A(std::move(a));
    PPS Dy = D.map([](const S& c) { return PS(c); });

    PS res = resultant(A, Dy);
    PS R = exact_div(res, D * D);
    PS triple = gcd(g, g.derivative());
    if (triple.deg0() > 0) R = R * triple;
    R = canonical_scaling(R);

    if (P.degree() == 3) return prem(R, P);
    S r3 = R.coeff(3);
    PS lower = R - PS::monomial(r3, 3);
    return prem(lower, P) + PS::monomial(r3, P.deg0());
}

template <class S>
Polynomial<S> complement_residue(const RationalFunction<S>& f, const Polynomial<S>& P) {
    return complement_residue(f.num(), f.den(), P);
}

}  // namespace splitjac::cover
