#pragma once

#include <string>
#include <vector>

#include "splitjac/covering/constructions.hpp"

namespace splitjac::cover {

using QPoly = Polynomial<Rational>;  // Q[t]
using QPoly2 = Polynomial<QPoly>;    // Q[a][b], b outer

struct SpecialFamily {
    std::string condition;  // "a=0" or "b=3a^2/8"
    std::string parameter;  // name of the remaining free parameter
    RationalFunction<QPoly> f1, f2;
    Rational jE1, jE2;
    bool complementary;
};

struct BothSpecialClassification {
    Polynomial<QPoly2> remainder;      // residue of R modulo x^2+ax+b
    QPoly2 vanishing;                  // gcd of its coefficients, excluded factors removed
    std::vector<SpecialFamily> families;
};

namespace detail {

inline Rational specialize(const QPoly& p, const Rational& t) { return p(t); }

inline RationalFunction<Rational> specialize(const RationalFunction<QPoly>& f, const Rational& t) {
    auto sp = [&](const QPoly& c) { return c(t); };
    return RationalFunction<Rational>(f.num().map(sp), f.den().map(sp));
}

inline bool is_rational_square(const Rational& r) {
    if (r.sign() < 0) return false;
    return mpz_perfect_square_p(r.numerator().get_mpz_t()) && mpz_perfect_square_p(r.denominator().get_mpz_t());
}

// Is n/d a square in Q(t)?
inline bool is_square_in_qt(const QPoly& n, const QPoly& d) {
    QPoly prod = n * d;
    if (prod.is_zero()) return true;
    if (!is_rational_square(prod.leading())) return false;
    try {
        monic_sqrt(prod);
        return true;
    } catch (const MathError&) {
        return false;
    }
}

// Looks for xi(x) = k/x with k in Q(t) and f2 a constant multiple of f1∘xi,
// for f1 = x^3/(alpha x^2 + beta x + gamma) and f2 = 1/(A x^3 + B x^2 + C x).
// f1∘xi = k^3 / (gamma x^3 + beta k x^2 + alpha k^2 x).
inline bool related_by_inversion(const RationalFunction<QPoly>& f1, const RationalFunction<QPoly>& f2) {
    if (!(f1.num().degree() == 3) || f1.num().coeff(0) != QPoly() || f1.num().coeff(1) != QPoly() ||
        f1.num().coeff(2) != QPoly())
        return false;
    if (!f2.num().is_constant() || !(f2.den().degree() == 3) || !f2.den().coeff(0).is_zero()) return false;
    const QPoly alpha = f1.den().coeff(2), beta = f1.den().coeff(1), gamma = f1.den().coeff(0);
    const QPoly A = f2.den().coeff(3), B = f2.den().coeff(2), C = f2.den().coeff(1);
    if (!beta.is_zero()) {
        // k = B gamma / (A beta); then alpha k^2 A == C gamma
        QPoly kn = B * gamma, kd = A * beta;
        return alpha * kn * kn * A == C * gamma * kd * kd;
    }
    if (!B.is_zero()) return false;
    return is_square_in_qt(C * gamma, A * alpha);
}

inline Rational target_j(const RationalFunction<Rational>& f, const GenusTwoModel<Rational>& C) {
    return j_of_weierstrass(derive_covering(f, C).target);
}

}  // namespace detail

// Both maps special: f1 = x^3/(x^2+ax+b), f2 = 1/Q.  The complementarity
// remainder is computed symbolically over Q[a,b] and its zero locus, after
// removing the excluded factors b and a^2-4b, is split into the families.
inline BothSpecialClassification both_special_families() {
    using PX = Polynomial<QPoly2>;
    const QPoly2 a(QPoly::x());
    const QPoly2 b = QPoly2::x();
    PX P({b, a, QPoly2(1)});
    PX Q = special_first_Q(a, b);
    PX rem = complement_residue(PX(QPoly2(1)), Q, P);

    QPoly2 g = gcd(rem.coeff(0), rem.coeff(1));
    for (const QPoly2& excluded : {b, a * a - QPoly2(4) * b}) {
        for (;;) {
            QPoly2 h = gcd(g, excluded);
            if (h.is_zero() || h == QPoly2(1)) break;
            g = exact_div(g, h);
        }
    }

    BothSpecialClassification out{rem, g, {}};
    auto finish = [&](std::string cond, std::string param, const QPoly& a_val, const QPoly& b_val) {
        // substitute and normalize num/den to primitive integral representatives
        auto sub = [&](const PX& p) {
            return p.map([&](const QPoly2& c) { return c.map([&](const QPoly& ca) { return QPoly(ca(a_val)); })(b_val); });
        };
        Polynomial<QPoly> Pm = sub(P), Qm = sub(Q);
        Polynomial<QPoly> x3 = Polynomial<QPoly>::monomial(QPoly(1), 3);
        RationalFunction<QPoly> f1(canonical_scaling(x3), canonical_scaling(Pm));
        RationalFunction<QPoly> f2(Polynomial<QPoly>(QPoly(1)), canonical_scaling(Qm));

        Rational j1, j2;
        bool first = true;
        for (long t : {1L, 2L}) {
            auto f1s = detail::specialize(f1, Rational(t));
            auto f2s = detail::specialize(f2, Rational(t));
            GenusTwoModel<Rational> C{f1s.den() * f2s.den(), Rational(1)};
            Rational a1 = detail::target_j(f1s, C), a2 = detail::target_j(f2s, C);
            if (!first && (a1 != j1 || a2 != j2)) throw std::logic_error("family j-invariant is not constant");
            j1 = a1;
            j2 = a2;
            first = false;
        }
        bool complementary = !detail::related_by_inversion(f1, f2);
        out.families.push_back({std::move(cond), std::move(param), f1, f2, j1, j2, complementary});
    };

    // content in Q[a]: rational roots give a = const, b free
    QPoly ca = content(g);
    for (const Rational& r : roots(ca)) {
        QPoly av(r);
        finish("a=" + r.to_string(), "b", av, QPoly::x());
    }
    // primitive part linear in b: b = phi(a), a free
    QPoly2 pp = primitive_part(g);
    if (pp.degree() == 1) {
        if (!pp.coeff(1).is_constant()) throw std::logic_error("b-solution is not polynomial in a");
        QPoly phi = (-pp.coeff(0)).scale(Rational(1) / pp.coeff(1).leading());
        std::string cond = "b=" + phi.to_string("a");
        finish(cond, "a", QPoly::x(), phi);
    } else if (pp.degree() > Degree(1)) {
        throw std::logic_error("unexpected higher-degree component in the both-special locus");
    }
    return out;
}

}  // namespace splitjac::cover
