#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "splitjac/algebra/errors.hpp"

namespace splitjac {

// Exact rational number, always kept in lowest terms with a positive
// denominator (mpq_class canonicalizes after every operation).
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : q_(static_cast<long>(n)) {}
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "n" or "n/d" with optional leading sign.
    static Rational parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty rational literal");
        auto valid_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char ch : s)
                if (ch < '0' || ch > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
            throw ParseError("not a rational literal: '" + std::string(text) + "'");
        auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
        mpz_class n(strip_plus(num), 10), d(strip_plus(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational");
        return Rational(mpq_class(1) / q_);
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace splitjac
