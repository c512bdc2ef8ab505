#pragma once

#include <json.hpp>

#include <string>

#include "splitjac/algebra/field_traits.hpp"
#include "splitjac/algebra/polynomial.hpp"

namespace splitjac {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.to_string(); }

template <long D>
Json to_json(const QuadExt<D>& x) {
    return Json{{"a", x.a().to_string()}, {"b", x.b().to_string()}, {"d", D}};
}

inline Json to_json(const Fp& x) { return x.to_string(); }

template <class R>
Json to_json(const Polynomial<R>& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
    return arr;
}

template <class T>
Json to_json(const std::vector<T>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

namespace detail {

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected an exact rational string, got " + j.dump());
}

}  // namespace detail

// Parses one field element.  `like` supplies the modulus for F_p.
template <Field T>
T element_from_json(const Json& j, const T& like) {
    if constexpr (std::same_as<T, Rational>) {
        return detail::rational_from_json(j);
    } else if constexpr (std::same_as<T, Fp>) {
        return from_rational(detail::rational_from_json(j), like);
    } else {
        if (j.is_object()) {
            if (!j.contains("a") || !j.contains("b") || !j.contains("d"))
                throw ParseError("quadratic element needs keys a, b, d: " + j.dump());
            if (!j["d"].is_number_integer() || j["d"].get<long>() != T::d)
                throw ParseError("element of Q(sqrt(" + j["d"].dump() + ")) used in Q(sqrt(" + std::to_string(T::d) + "))");
            return T(detail::rational_from_json(j["a"]), detail::rational_from_json(j["b"]));
        }
        return T(detail::rational_from_json(j));
    }
}

// Text form used on the command line: either a rational literal or a JSON
// encoding of the element.
template <Field T>
T element_from_text(const std::string& text, const T& like) {
    if (!text.empty() && (text.front() == '{' || text.front() == '"')) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("malformed JSON element '" + text + "': " + e.what());
        }
        return element_from_json(j, like);
    }
    return element_from_json(Json(text), like);
}

template <Field T>
Polynomial<T> polynomial_from_json(const Json& j, const T& like) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array of coefficients");
    std::vector<T> c;
    for (const auto& e : j) c.push_back(element_from_json(e, like));
    return Polynomial<T>(std::move(c));
}

}  // namespace splitjac
