#pragma once

#include <string>

#include "splitjac/algebra/polynomial.hpp"
#include "splitjac/algebra/resultant.hpp"

namespace splitjac {

// num/den with gcd(num, den) = 1.  Common factors are divided out using the
// unit-normalized gcd, so the caller's scaling of num and den survives.
template <class R>
class RationalFunction {
public:
    using Poly = Polynomial<R>;

    RationalFunction() : num_(), den_(R(1)) {}
    RationalFunction(const Poly& num) : num_(num), den_(R(1)) {}
    RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        reduce();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    // max(deg num, deg den), the degree of the induced map P^1 -> P^1.
    std::size_t map_degree() const { return std::max(num_.deg0(), den_.deg0()); }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string(const std::string& var = "x") const {
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(R(1));
            return;
        }
        Poly g = gcd(num_, den_);
        if (!(g == Poly(R(1)))) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }

    Poly num_, den_;
};

}  // namespace splitjac
