#pragma once

#include <concepts>
#include <ostream>
#include <string>

#include "splitjac/algebra/rational.hpp"

namespace splitjac {

// a + b·sqrt(D) in Q(sqrt(D)).  D is part of the type, so elements of
// different quadratic fields cannot be combined.
template <long D>
class QuadExt {
    static_assert(D != 0 && D != 1, "D must not be a square");

public:
    static constexpr long d = D;

    QuadExt() = default;
    template <std::integral I>
    QuadExt(I n) : a_(n) {}
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static QuadExt sqrt_d() { return {Rational(0), Rational(1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return {a_, -b_}; }
    Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }
    Rational trace() const { return a_ + a_; }

    QuadExt inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt(" + std::to_string(D) + "))");
        return {a_ / n, -b_ / n};
    }

    QuadExt pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadExt r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        Rational na = a_ * o.a_ + Rational(D) * b_ * o.b_;
        b_ = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const QuadExt&, const QuadExt&) = default;

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string s = a_.is_zero() ? "" : a_.to_string();
        std::string coef = b_.to_string();
        if (!s.empty() && b_.sign() > 0) s += "+";
        s += coef + "*sqrt(" + std::to_string(D) + ")";
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

private:
    Rational a_, b_;
};

using QOmega = QuadExt<-3>;
using QSqrt3 = QuadExt<3>;

template <long D>
bool is_zero(const QuadExt<D>& x) { return x.is_zero(); }
template <long D>
QuadExt<D> exact_div(const QuadExt<D>& a, const QuadExt<D>& b) { return a / b; }

}  // namespace splitjac
