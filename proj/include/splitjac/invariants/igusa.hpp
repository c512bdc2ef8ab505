#pragma once

#include <array>
#include <string>

#include "splitjac/algebra.hpp"
#include "splitjac/invariants/ic_terms.hpp"

namespace splitjac::igusa {

// Binary sextic c0 + c1 x + ... + c6 x^6; c6 = 0 means a root at infinity.
template <Field T>
struct BinarySextic {
    std::array<T, 7> c;

    static BinarySextic from_polynomial(const Polynomial<T>& f) {
        if (f.degree() > Degree(6)) throw MathError("deg>6", "binary sextic of degree " + f.degree().to_string());
        BinarySextic s;
        for (std::size_t i = 0; i < 7; ++i) s.c[i] = f.coeff(i);
        return s;
    }
    Polynomial<T> polynomial() const { return Polynomial<T>(std::vector<T>(c.begin(), c.end())); }

    // 6 minus the multiplicity of the root at infinity.
    Degree degree() const { return polynomial().degree(); }
};

template <Field T>
struct IgusaClebsch {
    T I2, I4, I6, I10;
    std::array<T, 4> values() const { return {I2, I4, I6, I10}; }
    friend bool operator==(const IgusaClebsch&, const IgusaClebsch&) = default;
};

template <Field T>
struct IgusaInvariants {
    T J2, J4, J6, J8, J10;
    friend bool operator==(const IgusaInvariants&, const IgusaInvariants&) = default;
};

template <Field T>
struct AbsoluteInvariants {
    T j1, j2, j3;
    friend bool operator==(const AbsoluteInvariants&, const AbsoluteInvariants&) = default;
};

namespace detail {

template <Field T, std::size_t N>
T evaluate_terms(const std::array<SexticTerm, N>& terms, const std::array<T, 7>& c) {
    // powers[i][e] = c_i^e for e <= 6
    std::array<std::array<T, 7>, 7> powers;
    for (std::size_t i = 0; i < 7; ++i) {
        powers[i][0] = T(1);
        for (std::size_t e = 1; e < 7; ++e) powers[i][e] = powers[i][e - 1] * c[i];
    }
    T acc(0);
    for (const auto& t : terms) {
        T m(t.coeff);
        for (std::size_t i = 0; i < 7; ++i)
            if (t.exps[i]) m = m * powers[i][t.exps[i]];
        acc = acc + m;
    }
    return acc;
}

}  // namespace detail

// Discriminant of the binary form: disc(f) in degree 6, c5^2 disc(f) in degree 5.
template <Field T>
T binary_discriminant(const BinarySextic<T>& f) {
    Polynomial<T> p = f.polynomial();
    if (p.degree() == 6) return discriminant(p);
    if (p.degree() == 5) return f.c[5] * f.c[5] * discriminant(p);
    throw MathError("deg<5", "a genus-2 sextic needs degree 5 or 6, got " + p.degree().to_string());
}

// Igusa-Clebsch invariants (I2, I4, I6, I10) normalized as the root-difference
// sums lc^2 Sum (12)^2(34)^2(56)^2, ... with I10 the binary discriminant.
template <Field T>
IgusaClebsch<T> igusa_clebsch(const BinarySextic<T>& f) {
    T i10 = binary_discriminant(f);
    if (is_zero(i10)) throw MathError("disc=0", "singular model: the sextic has a repeated root");
    return {detail::evaluate_terms(detail::kI2Terms, f.c), detail::evaluate_terms(detail::kI4Terms, f.c),
            detail::evaluate_terms(detail::kI6Terms, f.c), i10};
}

template <Field T>
IgusaClebsch<T> igusa_clebsch(const Polynomial<T>& f) { return igusa_clebsch(BinarySextic<T>::from_polynomial(f)); }

template <Field T>
IgusaInvariants<T> igusa_from_clebsch(const IgusaClebsch<T>& ic) {
    const T like = ic.I2 + ic.I4 + ic.I6 + ic.I10;
    auto q = [&](long n, long d) { return from_rational(Rational(n, d), like); };
    T J2 = ic.I2 * q(1, 8);
    T J4 = (q(4, 1) * J2 * J2 - ic.I4) * q(1, 96);
    T J6 = (q(8, 1) * J2 * J2 * J2 - q(160, 1) * J2 * J4 - ic.I6) * q(1, 576);
    T J8 = (J2 * J6 - J4 * J4) * q(1, 4);
    T J10 = ic.I10 * q(1, 4096);
    return {J2, J4, J6, J8, J10};
}

template <Field T>
IgusaClebsch<T> clebsch_from_igusa(const IgusaInvariants<T>& J) {
    return {T(8) * J.J2, T(4) * J.J2 * J.J2 - T(96) * J.J4,
            T(8) * J.J2 * J.J2 * J.J2 - T(160) * J.J2 * J.J4 - T(576) * J.J6, T(4096) * J.J10};
}

template <Field T>
AbsoluteInvariants<T> absolute_invariants(const IgusaInvariants<T>& J) {
    if (is_zero(J.J10)) throw MathError("J10=0", "absolute invariants need J10 != 0");
    T J2sq = J.J2 * J.J2;
    return {J2sq * J2sq * J.J2 / J.J10, J2sq * J.J2 * J.J4 / J.J10, J2sq * J.J6 / J.J10};
}

// Equality in P(2,4,6,10) over the algebraic closure: same zero pattern and
// v_i^{w_j} u_j^{w_i} = v_j^{w_i} u_i^{w_j} for weights w = (1,2,3,5).
template <Field T>
bool wp_equal(const IgusaClebsch<T>& u, const IgusaClebsch<T>& v) {
    const auto a = u.values(), b = v.values();
    auto all_zero = [](const std::array<T, 4>& x) {
        for (const auto& e : x)
            if (!is_zero(e)) return false;
        return true;
    };
    if (all_zero(a) && all_zero(b)) throw MathError("u=v=0", "weighted comparison of two zero tuples");
    constexpr std::array<unsigned, 4> w{1, 2, 3, 5};
    for (std::size_t i = 0; i < 4; ++i)
        if (is_zero(a[i]) != is_zero(b[i])) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            T lhs = ring_pow(b[i], w[j]) * ring_pow(a[j], w[i]);
            T rhs = ring_pow(b[j], w[i]) * ring_pow(a[i], w[j]);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

template <Field T>
Json to_json(const IgusaClebsch<T>& ic) {
    return Json{{"values", Json::array({splitjac::to_json(ic.I2), splitjac::to_json(ic.I4), splitjac::to_json(ic.I6),
                                        splitjac::to_json(ic.I10)})},
                {"weights", Json::array({2, 4, 6, 10})}};
}

}  // namespace splitjac::igusa
