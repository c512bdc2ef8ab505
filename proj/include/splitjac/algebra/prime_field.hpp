#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "splitjac/algebra/errors.hpp"

namespace splitjac {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

// Element of F_p.  The modulus travels with the value.  A modulus of 0 marks
// an integer constant that has not met a bound element yet (what Fp(0) and
// Fp(1) produce inside generic code); it adopts the modulus of the first bound
// operand it is combined with.
class Fp {
public:
    Fp() = default;
    template <std::integral I>
    Fp(I n) : v_(static_cast<std::int64_t>(n)), p_(0) {}
    Fp(std::int64_t v, std::uint64_t p) : p_(p) {
        if (p <= 3) throw std::invalid_argument("prime field modulus must exceed 3");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        v_ = r < 0 ? r + static_cast<std::int64_t>(p) : r;
    }

    std::uint64_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }
    // Canonical representative in [0, p); only meaningful when bound.
    std::uint64_t value() const { return static_cast<std::uint64_t>(v_); }
    std::int64_t raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }

    Fp inverse() const {
        if (!bound()) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::logic_error("inverse of an Fp constant with unknown modulus");
        }
        if (v_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
        return Fp(static_cast<std::int64_t>(detail::powmod(value(), p_ - 2, p_)), p_);
    }

    Fp pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        Fp r = bound() ? Fp(1, p_) : Fp(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Fp& operator+=(const Fp& o) { return combine(o, [](unsigned __int128 a, unsigned __int128 b, unsigned __int128 p) { return (a + b) % p; }, [](std::int64_t a, std::int64_t b) { return a + b; }); }
    Fp& operator-=(const Fp& o) { return combine(o, [](unsigned __int128 a, unsigned __int128 b, unsigned __int128 p) { return (a + p - b) % p; }, [](std::int64_t a, std::int64_t b) { return a - b; }); }
    Fp& operator*=(const Fp& o) { return combine(o, [](unsigned __int128 a, unsigned __int128 b, unsigned __int128 p) { return a * b % p; }, [](std::int64_t a, std::int64_t b) { return a * b; }); }
    Fp& operator/=(const Fp& o) {
        Fp lhs = *this, rhs = o;
        unify(lhs, rhs);
        return *this = lhs * rhs.inverse();
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) {
        if (!a.bound()) return Fp(-a.v_);
        return Fp(-a.v_, a.p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        Fp x = a, y = b;
        unify(x, y);
        return x.v_ == y.v_;
    }

    std::string to_string() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }

private:
    static void unify(Fp& a, Fp& b) {
        if (a.p_ == b.p_) return;
        if (a.p_ == 0) a = Fp(a.v_, b.p_);
        else if (b.p_ == 0) b = Fp(b.v_, a.p_);
        else throw std::logic_error("mixing F_" + std::to_string(a.p_) + " and F_" + std::to_string(b.p_));
    }

    template <class Bound, class Free>
    Fp& combine(const Fp& o, Bound bound_op, Free free_op) {
        Fp rhs = o;
        unify(*this, rhs);
        if (p_ == 0) {
            v_ = free_op(v_, rhs.v_);
        } else {
            v_ = static_cast<std::int64_t>(bound_op(static_cast<unsigned __int128>(v_), static_cast<unsigned __int128>(rhs.v_), p_));
        }
        return *this;
    }

    std::int64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }

// Validated factory for elements of one prime field.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p == 2 || p == 3) throw MathError("p in {2,3}", "characteristic 2 and 3 are not supported");
        if (!detail::is_prime_u64(p)) throw MathError("p not prime", std::to_string(p) + " is not prime");
        if (p >= (1ull << 62)) throw MathError("p >= 2^62", "modulus too large");
    }
    std::uint64_t p() const { return p_; }
    Fp operator()(std::int64_t v) const { return Fp(v, p_); }

private:
    std::uint64_t p_;
};

}  // namespace splitjac
