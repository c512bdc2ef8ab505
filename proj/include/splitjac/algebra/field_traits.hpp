#pragma once

#include <concepts>
#include <string>

#include "splitjac/algebra/prime_field.hpp"
#include "splitjac/algebra/quad_ext.hpp"
#include "splitjac/algebra/rational.hpp"

namespace splitjac {

template <class T>
concept Ring = std::copyable<T> && std::equality_comparable<T> && requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { is_zero(a) } -> std::same_as<bool>;
    T(0);
    T(1);
};

template <class T>
struct FieldTraits {
    static constexpr bool is_field = false;
};

template <class T>
concept Field = Ring<T> && FieldTraits<T>::is_field && requires(const T& a, const T& b) {
    { a / b } -> std::convertible_to<T>;
};

inline MathError no_omega(const std::string& where) {
    return MathError("omega not in field", "a primitive cube root of unity is not available in " + where);
}

template <>
struct FieldTraits<Rational> {
    static constexpr bool is_field = true;
    static std::string name() { return "Q"; }
    static Rational from_rational(const Rational& r, const Rational&) { return r; }
    static Rational omega(const Rational&) { throw no_omega("Q"); }
    static bool has_omega(const Rational&) { return false; }
};

template <long D>
struct FieldTraits<QuadExt<D>> {
    static constexpr bool is_field = true;
    static std::string name() { return D == -3 ? "Q(w)" : "Q(sqrt(" + std::to_string(D) + "))"; }
    static QuadExt<D> from_rational(const Rational& r, const QuadExt<D>&) { return QuadExt<D>(r); }
    static QuadExt<D> omega(const QuadExt<D>&) {
        if constexpr (D == -3) return QuadExt<D>(Rational(-1, 2), Rational(1, 2));
        else throw no_omega(name());
    }
    static bool has_omega(const QuadExt<D>&) { return D == -3; }
};

template <>
struct FieldTraits<Fp> {
    static constexpr bool is_field = true;
    static std::string name() { return "F_p"; }
    static Fp from_rational(const Rational& r, const Fp& like) {
        std::uint64_t p = like.modulus();
        if (p == 0) throw std::logic_error("from_rational needs a bound F_p element");
        mpz_class pp(std::to_string(p));
        mpz_class n = r.numerator() % pp, d = r.denominator() % pp;
        if (n < 0) n += pp;
        if (d == 0) throw MathError("p | denominator", "denominator of " + r.to_string() + " vanishes mod " + std::to_string(p));
        return Fp(static_cast<std::int64_t>(n.get_ui()), p) / Fp(static_cast<std::int64_t>(d.get_ui()), p);
    }
    static bool has_omega(const Fp& like) { return like.modulus() % 3 == 1; }
    // The numerically smaller of the two primitive cube roots of unity.
    static Fp omega(const Fp& like) {
        std::uint64_t p = like.modulus();
        if (p == 0) throw std::logic_error("omega needs a bound F_p element");
        if (p % 3 != 1) throw no_omega("F_" + std::to_string(p));
        for (std::uint64_t g = 2; g < p; ++g) {
            std::uint64_t w = detail::powmod(g, (p - 1) / 3, p);
            if (w != 1) {
                std::uint64_t w2 = detail::mulmod(w, w, p);
                return Fp(static_cast<std::int64_t>(w < w2 ? w : w2), p);
            }
        }
        throw std::logic_error("unreachable");
    }
};

template <Field T>
T from_rational(const Rational& r, const T& like) { return FieldTraits<T>::from_rational(r, like); }

template <Field T>
T omega(const T& like) { return FieldTraits<T>::omega(like); }

template <Field T>
bool has_omega(const T& like) { return FieldTraits<T>::has_omega(like); }

// 1 in the same field as `like` (binds the modulus for F_p).
template <Field T>
T one_like(const T& like) { return from_rational(Rational(1), like); }

}  // namespace splitjac
