#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitjac/algebra/field_traits.hpp"
#include "splitjac/algebra/serialize.hpp"

namespace splitjac {

// Sparse polynomial in N variables.  Used for ternary cubics (N = 3) and
// for linear/quadratic forms on P^8 (N = 9).
template <Ring T, std::size_t N>
class Form {
public:
    using Exponent = std::array<std::uint8_t, N>;

    Form() = default;

    static Form constant(const T& c) {
        Form f;
        f.add_term(Exponent{}, c);
        return f;
    }
    static Form var(std::size_t i, const T& one) {
        Exponent e{};
        e[i] = 1;
        Form f;
        f.add_term(e, one);
        return f;
    }
    static Form linear(const std::array<T, N>& coeffs) {
        Form f;
        for (std::size_t i = 0; i < N; ++i) {
            Exponent e{};
            e[i] = 1;
            f.add_term(e, coeffs[i]);
        }
        return f;
    }

    const std::map<Exponent, T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    T coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T(0) : it->second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    T operator()(const std::array<T, N>& x) const {
        T acc(0);
        for (const auto& [e, c] : terms_) {
            T m = c;
            for (std::size_t i = 0; i < N; ++i)
                for (std::uint8_t k = 0; k < e[i]; ++k) m = m * x[i];
            acc = acc + m;
        }
        return acc;
    }

    // f(g_1, ..., g_N)
    Form compose(const std::array<Form, N>& g) const {
        Form out;
        for (const auto& [e, c] : terms_) {
            Form m = constant(c);
            for (std::size_t i = 0; i < N; ++i)
                for (std::uint8_t k = 0; k < e[i]; ++k) m = m * g[i];
            out = out + m;
        }
        return out;
    }

    Form scale(const T& s) const {
        Form out;
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return out;
    }

    friend Form operator+(const Form& a, const Form& b) {
        Form out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend Form operator-(const Form& a) { return a.scale(T(-1)); }
    friend Form operator-(const Form& a, const Form& b) { return a + (-b); }
    friend Form operator*(const Form& a, const Form& b) {
        Form out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < N; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend bool operator==(const Form& a, const Form& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (const auto& [e, c] : a.terms_) {
            auto it = b.terms_.find(e);
            if (it == b.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    // Some lambda with *this == lambda * other, if one exists.
    std::optional<T> ratio_to(const Form& other) const {
        if (other.is_zero() || is_zero()) return std::nullopt;
        const auto& [e0, c0] = *other.terms_.begin();
        auto it = terms_.find(e0);
        if (it == terms_.end()) return std::nullopt;
        T lambda = it->second / c0;
        if (*this == other.scale(lambda)) return lambda;
        return std::nullopt;
    }

    static std::string var_name(std::size_t i) {
        if constexpr (N == 3) return std::string(1, "xyz"[i]);
        else return "X" + std::to_string(i + 1);
    }

    static std::string monomial_name(const Exponent& e) {
        std::string s;
        for (std::size_t i = 0; i < N; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += var_name(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    void add_term(const Exponent& e, const T& c) {
        using splitjac::is_zero;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!is_zero(c)) terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero(it->second)) terms_.erase(it);
    }

    std::map<Exponent, T> terms_;
};

template <Ring T, std::size_t N>
Json to_json(const Form<T, N>& f) {
    Json j = Json::object();
    for (const auto& [e, c] : f.terms()) j[Form<T, N>::monomial_name(e)] = to_json(c);
    return j;
}

}  // namespace splitjac
