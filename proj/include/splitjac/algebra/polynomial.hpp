#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "splitjac/algebra/field_traits.hpp"

namespace splitjac {

// Degree of a polynomial; the zero polynomial has degree minus infinity,
// which compares below every finite degree.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    explicit Degree(std::size_t d) : d_(d) {}

    bool is_minus_infinity() const { return !d_.has_value(); }
    std::size_t value() const {
        if (!d_) throw std::logic_error("degree of the zero polynomial has no value");
        return *d_;
    }

    friend bool operator==(const Degree&, const Degree&) = default;
    friend auto operator<=>(const Degree&, const Degree&) = default;
    friend bool operator==(const Degree& a, std::size_t b) { return a.d_ && *a.d_ == b; }

    std::string to_string() const { return d_ ? std::to_string(*d_) : "-inf"; }

private:
    Degree() = default;
    std::optional<std::size_t> d_;
};

template <class R>
class Polynomial;

template <class T>
struct is_polynomial : std::false_type {};
template <class R>
struct is_polynomial<Polynomial<R>> : std::true_type {};
template <class T>
inline constexpr bool is_polynomial_v = is_polynomial<T>::value;

// Scalars of the innermost coefficient ring.
template <class T>
struct base_field {
    using type = T;
};
template <class R>
struct base_field<Polynomial<R>> {
    using type = typename base_field<R>::type;
};
template <class T>
using base_field_t = typename base_field<T>::type;

// Dense univariate polynomial, coefficient i belongs to x^i.  Nesting
// Polynomial<Polynomial<...>> gives multivariate polynomials with the outer
// type carrying the main variable.
template <class R>
class Polynomial {
public:
    using coefficient_type = R;

    Polynomial() = default;

    template <class U>
        requires(!std::same_as<std::remove_cvref_t<U>, Polynomial> && std::constructible_from<R, const U&>)
    Polynomial(const U& c) {
        R r(c);
        if (!coef_zero(r)) c_.push_back(std::move(r));
    }

    Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const R& c, std::size_t k) {
        if (coef_zero(c)) return {};
        std::vector<R> v(k + 1, zero_like(c));
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial x() { return monomial(R(1), 1); }

    Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
    // Degree as a plain number; zero polynomial maps to 0.
    std::size_t deg0() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    std::size_t size() const { return c_.size(); }
    const std::vector<R>& coefficients() const { return c_; }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    const R& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    R constant_term() const { return coeff(0); }

    template <class V>
    V operator()(const V& v) const {
        if (c_.empty()) return V(R(0)) * v - V(R(0)) * v;
        V acc = V(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * v + V(c_[i]);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * R(static_cast<long>(i)));
        return Polynomial(std::move(d));
    }

    Polynomial scale(const R& s) const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c * s);
        return Polynomial(std::move(v));
    }

    Polynomial shift(std::size_t k) const {
        if (c_.empty() || k == 0) return *this;
        std::vector<R> v(k, zero_like(c_.front()));
        v.insert(v.end(), c_.begin(), c_.end());
        return Polynomial(std::move(v));
    }

    template <class F>
    auto map(F&& fn) const {
        using S = std::remove_cvref_t<decltype(fn(std::declval<const R&>()))>;
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(fn(c));
        return Polynomial<S>(std::move(v));
    }

    // Coefficients reversed with respect to a formal degree n >= deg.
    Polynomial reversed(std::size_t n) const {
        std::vector<R> v(n + 1, R(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<R> v;
        v.reserve(a.c_.size());
        for (const auto& c : a.c_) v.push_back(-c);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<R> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (coef_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r(R(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const std::string& var = "x") const { return to_string(std::vector<std::string>{var}); }

    // vars[0] names this level's variable, vars[1] the next inner one, ...
    std::string to_string(std::vector<std::string> vars) const {
        static const char* defaults[] = {"x", "y", "z", "u", "v", "w", "s", "t"};
        for (std::size_t k = vars.size(); k < 8; ++k) vars.push_back(defaults[k]);
        const std::string var = vars.front();
        const std::vector<std::string> inner(vars.begin() + 1, vars.end());
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (coef_zero(c_[i])) continue;
            std::string cs = element_string(c_[i], inner);
            bool compound = cs.find_first_of("+-", 1) != std::string::npos;
            if (compound) cs = "(" + cs + ")";
            std::string term;
            if (i == 0) term = cs;
            else {
                std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
                if (cs == "1") term = mono;
                else if (cs == "-1") term = "-" + mono;
                else term = cs + "*" + mono;
            }
            if (!out.empty() && term.front() != '-') out += "+";
            out += term;
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    static R zero_like(const R& r) { return r - r; }
    static bool coef_zero(const R& r) {
        using splitjac::is_zero;
        return is_zero(r);
    }

    template <class T>
    static std::string element_string(const T& t, const std::vector<std::string>& vars) {
        if constexpr (is_polynomial_v<T>) return t.to_string(vars);
        else return t.to_string();
    }

    void trim() {
        while (!c_.empty() && coef_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) { return p.is_zero(); }

// ---- base-field helpers used by content and gcd normalization ----

template <class T>
base_field_t<T> base_leading(const T& t) {
    if constexpr (is_polynomial_v<T>) return base_leading(t.leading());
    else return t;
}

template <class T>
T divide_by_base(const T& t, const base_field_t<T>& s) {
    if constexpr (is_polynomial_v<T>)
        return t.map([&](const auto& c) { return divide_by_base(c, s); });
    else return t / s;
}

// Scales t so that its innermost leading coefficient is 1.
template <class T>
T normalize_unit(const T& t) {
    if (is_zero(t)) return t;
    return divide_by_base(t, base_leading(t));
}

// ---- division ----

template <Field R>
std::pair<Polynomial<R>, Polynomial<R>> divrem(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
    if (f.degree() < g.degree()) return {Polynomial<R>(), f};
    std::vector<R> r = f.coefficients();
    const std::size_t dg = g.deg0();
    const R inv = R(1) / g.leading();
    std::vector<R> q(f.deg0() - dg + 1, R(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        R t = r[k + dg] * inv;
        q[k] = t;
        if (is_zero(t)) continue;
        for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= t * g.coefficients()[j];
    }
    r.resize(dg);
    return {Polynomial<R>(std::move(q)), Polynomial<R>(std::move(r))};
}

// Quotient f/g, throwing if g does not divide f.  Over a field this is
// ordinary division; over nested rings it recurses into the coefficients.
template <class R>
Polynomial<R> exact_div(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (g.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw MathError("not divisible", "exact division has a remainder");
    if constexpr (Field<R>) {
        auto [q, r] = divrem(f, g);
        if (!r.is_zero()) throw MathError("not divisible", "exact division has a remainder");
        return q;
    } else {
        std::vector<R> r = f.coefficients();
        const std::size_t dg = g.deg0();
        std::vector<R> q(f.deg0() - dg + 1, R(0));
        for (std::size_t k = q.size(); k-- > 0;) {
            if (is_zero(r[k + dg])) continue;
            R t = exact_div(r[k + dg], g.leading());
            for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= t * g.coefficients()[j];
            q[k] = std::move(t);
        }
        for (std::size_t i = 0; i < dg; ++i)
            if (!is_zero(r[i])) throw MathError("not divisible", "exact division has a remainder");
        return Polynomial<R>(std::move(q));
    }
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed without division.
template <class R>
Polynomial<R> prem(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (g.is_zero()) throw DivisionByZero("pseudo-remainder by the zero polynomial");
    if (f.degree() < g.degree()) return f;
    const std::size_t dg = g.deg0();
    std::size_t steps = f.deg0() - dg + 1;
    const R& lc = g.leading();
    Polynomial<R> r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t k = r.deg0() - dg;
        R t = r.leading();
        r = r.scale(lc) - g.scale(t).shift(k);
        --steps;
    }
    for (; steps > 0; --steps) r = r.scale(lc);
    return r;
}

// ---- gcd and content ----

inline Rational gcd(const Rational& a, const Rational& b) {
    return (a.is_zero() && b.is_zero()) ? Rational(0) : Rational(1);
}
template <long D>
QuadExt<D> gcd(const QuadExt<D>& a, const QuadExt<D>& b) {
    return (a.is_zero() && b.is_zero()) ? QuadExt<D>(0) : QuadExt<D>(1);
}
inline Fp gcd(const Fp& a, const Fp& b) { return (a.is_zero() && b.is_zero()) ? Fp(0) : Fp(1); }

template <class R>
Polynomial<R> gcd(const Polynomial<R>& f, const Polynomial<R>& g);

// gcd of the coefficients, normalized; 1 over a field.
template <class R>
R content(const Polynomial<R>& f) {
    if (f.is_zero()) return R(0);
    if constexpr (Field<R>) {
        return R(1);
    } else {
        R c = f.coefficients().front();
        for (const auto& x : f.coefficients()) {
            c = gcd(c, x);
            if (c.is_constant() && !c.is_zero()) return normalize_unit(c);
        }
        return normalize_unit(c);
    }
}

template <class R>
Polynomial<R> primitive_part(const Polynomial<R>& f) {
    if (f.is_zero()) return f;
    if constexpr (Field<R>) {
        return f;
    } else {
        R c = content(f);
        return f.map([&](const R& x) { return exact_div(x, c); });
    }
}

template <class R>
Polynomial<R> gcd(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (f.is_zero()) return normalize_unit(g);
    if (g.is_zero()) return normalize_unit(f);
    if constexpr (Field<R>) {
        Polynomial<R> a = f, b = g;
        while (!b.is_zero()) {
            auto r = divrem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return normalize_unit(a);
    } else {
        R c = gcd(content(f), content(g));
        Polynomial<R> a = primitive_part(f), b = primitive_part(g);
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            auto r = prem(a, b);
            a = std::move(b);
            b = primitive_part(r);
        }
        return normalize_unit(primitive_part(a).scale(c));
    }
}

// Square root of a polynomial that is a perfect square, up to the square
// root of its leading coefficient: returns r with r^2 = f / lc(f).
template <Field R>
Polynomial<R> monic_sqrt(const Polynomial<R>& f) {
    if (f.is_zero()) return f;
    if (f.deg0() % 2 != 0) throw MathError("not a square", "odd-degree polynomial is not a square");
    Polynomial<R> m = f.scale(R(1) / f.leading());
    const std::size_t n = m.deg0() / 2;
    std::vector<R> r(n + 1, R(0) * f.leading());
    r[n] = one_like(f.leading());
    const R two = r[n] + r[n];
    for (std::size_t k = 1; k <= n; ++k) {
        // coefficient of x^(2n-k) in r^2 determines r[n-k]
        R acc = m.coeff(2 * n - k);
        for (std::size_t i = n - k + 1; i < n; ++i) {
            std::size_t j = 2 * n - k - i;
            if (j > n || j < n - k + 1) continue;
            acc -= r[i] * r[j];
        }
        r[n - k] = acc / two;
    }
    Polynomial<R> root(std::move(r));
    if (!(root * root == m)) throw MathError("not a square", "polynomial is not a perfect square");
    return root;
}

}  // namespace splitjac
