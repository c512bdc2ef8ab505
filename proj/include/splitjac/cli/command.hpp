#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splitjac/covering.hpp"
#include "splitjac/covering/reference.hpp"
#include "splitjac/gluing.hpp"
#include "splitjac/hesse.hpp"
#include "splitjac/invariants/igusa.hpp"

namespace splitjac::cli {

struct CommandRequest {
    std::string subcommand;
    std::map<std::string, std::string> params;
};

struct Check {
    std::string name;
    bool pass = false;
    Json expected, actual;
};

enum class Status { ok, math_error, parse_error };

struct CommandReport {
    Status status = Status::ok;
    Json payload = Json::object();
    std::vector<Check> checks;
    std::string condition;  // set on errors
    std::string message;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int exit_code() const {
        switch (status) {
            case Status::math_error: return 1;
            case Status::parse_error: return 2;
            default: return all_pass() ? 0 : 3;
        }
    }
};

inline Json to_json(const CommandReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"result", c.pass ? "pass" : "fail"}, {"expected", c.expected}, {"actual", c.actual}});
    Json j{{"status", r.status == Status::ok ? "ok" : "error"}, {"payload", r.payload}, {"checks", checks}};
    if (r.status != Status::ok)
        j["error"] = Json{{"kind", r.status == Status::math_error ? "math" : "parse"}, {"condition", r.condition}, {"message", r.message}};
    return j;
}

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"cover-generic", "cover-special1", "cover-special2", "cover-both-special",
                                                "glue",          "hesse-j",        "hesse-orbit",    "to-hesse",
                                                "isogeny2",      "invariants",     "census",         "verify-appendix"};
    return names;
}

namespace detail {

class Params {
public:
    explicit Params(const std::map<std::string, std::string>& m) : m_(m) {}

    std::string required(const std::string& key) {
        used_.insert(key);
        auto it = m_.find(key);
        if (it == m_.end()) throw ParseError("missing parameter --" + key);
        return it->second;
    }
    std::optional<std::string> optional(const std::string& key) {
        used_.insert(key);
        auto it = m_.find(key);
        if (it == m_.end()) return std::nullopt;
        return it->second;
    }
    void reject_unknown() const {
        for (const auto& [k, v] : m_)
            if (!used_.count(k)) throw ParseError("unknown parameter --" + k);
    }

private:
    const std::map<std::string, std::string>& m_;
    std::set<std::string> used_;
};

inline Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON for " + what + ": " + e.what());
    }
}

inline std::uint64_t parse_prime(const std::string& text) {
    std::size_t pos = 0;
    unsigned long long p = 0;
    try {
        p = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer modulus: '" + text + "'");
    }
    if (pos != text.size()) throw ParseError("not an integer modulus: '" + text + "'");
    try {
        return PrimeField(p).p();
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad modulus: ") + e.what());
    }
}

// Calls f(like) with a zero of the selected field.
template <class F>
void with_field(const std::string& spec, F&& f) {
    if (spec == "Q") return f(Rational(0));
    if (spec == "Q(w)") return f(QOmega(0));
    if (spec == "Q(r3)") return f(QSqrt3(0));
    if (spec.rfind("Fp:", 0) == 0) return f(PrimeField(parse_prime(spec.substr(3)))(0));
    throw ParseError("unknown field '" + spec + "' (expected Q, Q(w), Q(r3) or Fp:<p>)");
}

template <Field T>
T element(Params& p, const std::string& key, const T& like) {
    return element_from_text(p.required(key), like);
}

template <Field T>
std::optional<T> optional_element(Params& p, const std::string& key, const T& like) {
    auto s = p.optional(key);
    if (!s) return std::nullopt;
    return element_from_text(*s, like);
}

inline void check(CommandReport& r, std::string name, bool pass, Json expected, Json actual) {
    r.checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
}

template <Field T>
void check_equal(CommandReport& r, std::string name, const T& expected, const T& actual) {
    check(r, std::move(name), expected == actual, to_json(expected), to_json(actual));
}

template <Field T>
void covering_pair_checks(CommandReport& r, const cover::CoveringPair<T>& cp) {
    check(r, "phi1 substitution identity", cover::verify_covering(cp.phi1), true, cover::verify_covering(cp.phi1));
    check(r, "phi2 substitution identity", cover::verify_covering(cp.phi2), true, cover::verify_covering(cp.phi2));
    check_equal(r, "closed-form j(E1) = j of target model", cp.jE1, cover::j_of_weierstrass(cp.phi1.target));
    check_equal(r, "closed-form j(E2) = j of target model", cp.jE2, cover::j_of_weierstrass(cp.phi2.target));
}

template <Field T>
igusa::IgusaClebsch<T> ic_from_json(const Json& j, const T& like) {
    if (!j.is_array() || j.size() != 4) throw ParseError("expected invariants as a 4-element array");
    return {element_from_json(j[0], like), element_from_json(j[1], like), element_from_json(j[2], like),
            element_from_json(j[3], like)};
}

inline Json qt_function_json(const RationalFunction<Polynomial<Rational>>& f, const std::string& param) {
    std::vector<std::string> vars{"x", param};
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.num().to_string(vars) + " / (" + f.den().to_string(vars) + ")"}};
}

// ---- subcommands ----

inline void cmd_cover(const std::string& which, Params& p, CommandReport& r) {
    with_field(p.optional("field").value_or("Q(w)"), [&](const auto& like) {
        using T = std::decay_t<decltype(like)>;
        std::optional<T> d = optional_element(p, "d", like);
        if (which == "cover-generic") {
            T a = element(p, "a", like), b = element(p, "b", like), c = element(p, "c", like);
            p.reject_unknown();
            auto cp = cover::generic_cover(a, b, c, d);
            r.payload = cover::to_json(cp);
            covering_pair_checks(r, cp);
        } else if (which == "cover-special1") {
            T a = element(p, "a", like), b = element(p, "b", like);
            p.reject_unknown();
            auto cp = cover::special_first(a, b, d);
            r.payload = cover::to_json(cp);
            covering_pair_checks(r, cp);
        } else {
            T b = element(p, "b", like), c = element(p, "c", like);
            p.reject_unknown();
            auto cp = cover::special_second(b, c, d);
            r.payload = cover::to_json(cp);
            covering_pair_checks(r, cp);
        }
    });
}

inline void cmd_both_special(Params& p, CommandReport& r) {
    p.reject_unknown();
    auto cls = cover::both_special_families();
    std::vector<std::string> vars{"x", "b", "a"};
    Json fams = Json::array();
    for (const auto& f : cls.families) {
        fams.push_back(Json{{"condition", f.condition},
                            {"parameter", f.parameter},
                            {"f1", qt_function_json(f.f1, f.parameter)},
                            {"f2", qt_function_json(f.f2, f.parameter)},
                            {"j", Json::array({to_json(f.jE1), to_json(f.jE2)})},
                            {"complementary", f.complementary}});
    }
    r.payload = Json{{"remainder", cls.remainder.to_string(vars)},
                     {"vanishing", cls.vanishing.to_string(std::vector<std::string>{"b", "a"})},
                     {"families", fams}};
    check(r, "family count", cls.families.size() == 2, 2, cls.families.size());
}

inline void cmd_glue(Params& p, CommandReport& r) {
    with_field(p.optional("field").value_or("Q(w)"), [&](const auto& like) {
        auto a = element(p, "a", like), b = element(p, "b", like);
        auto expect = p.optional("expect");
        p.reject_unknown();
        bool degenerate = is_zero(glue::degeneracy_value(a, b));
        r.payload = Json{{"degenerate", degenerate}};
        auto ic = glue::prop2_invariants(a, b);
        auto J = igusa::igusa_from_clebsch(ic);
        auto abs = igusa::absolute_invariants(J);
        r.payload = Json{{"invariants", igusa::to_json(ic)},
                         {"absolute", Json::array({to_json(abs.j1), to_json(abs.j2), to_json(abs.j3)})},
                         {"degenerate", false}};
        if (expect) {
            auto e = ic_from_json(parse_json(*expect, "--expect"), like);
            check(r, "weighted-projective match with expected invariants", igusa::wp_equal(ic, e), igusa::to_json(e),
                  igusa::to_json(ic));
        }
    });
}

inline void cmd_hesse_j(Params& p, CommandReport& r) {
    with_field(p.optional("field").value_or("Q(w)"), [&](const auto& like) {
        auto a = element(p, "a", like);
        p.reject_unknown();
        r.payload = Json{{"curve", hesse::to_json(hesse::HesseCurve(a))}, {"j", to_json(hesse::j_hesse(a))}};
    });
}

inline void cmd_hesse_orbit(Params& p, CommandReport& r) {
    with_field(p.optional("field").value_or("Q(w)"), [&](const auto& like) {
        auto a = element(p, "a", like);
        p.reject_unknown();
        hesse::HesseCurve E(a);
        auto j0 = hesse::j_hesse(a);
        Json entries = Json::array();
        bool same = true;
        for (const auto& e : hesse::orbit12(a)) {
            Json item{{"label", e.label}, {"degenerate", !e.value.has_value()}};
            item["value"] = e.value ? to_json(*e.value) : Json(nullptr);
            if (e.value) same = same && (hesse::j_hesse(*e.value) == j0);
            entries.push_back(item);
        }
        r.payload = Json{{"a", to_json(a)}, {"j", to_json(j0)}, {"orbit", entries}};
        check(r, "all defined entries share j", same, true, same);
    });
}

inline void cmd_to_hesse(Params& p, CommandReport& r) {
    with_field(p.optional("field").value_or("Q(w)"), [&](const auto& like) {
        using T = std::decay_t<decltype(like)>;
        T A = element(p, "A", like), B = element(p, "B", like);
        p.reject_unknown();
        auto c = hesse::weierstrass_to_hesse(A, B);
        r.payload = hesse::to_json(c);
        const T t = c.t, t3 = t * t * t;
        check_equal(r, "A u^2 = -3t(t^3-8)", T(-3) * t * (t3 - T(8)), A * c.u * c.u);
        check_equal(r, "B u^3 = -2(t^6+20t^3-8)", T(-2) * (t3 * t3 + T(20) * t3 - T(8)), B * c.u * c.u * c.u);
        auto lambda = hesse::hesse_substitution_factor(c);
        check(r, "H(M v) is a nonzero multiple of the Weierstrass form", lambda && !is_zero(*lambda), true,
              lambda ? to_json(*lambda) : Json(nullptr));
        T jE = T(6912) * A * A * A / (T(4) * A * A * A + T(27) * B * B);
        check_equal(r, "j_hesse(t) = j(y^2 = x^3 + Ax + B)", jE, hesse::j_hesse(t));
    });
}

inline void cmd_isogeny2(Params& p, CommandReport& r) {
    with_field(p.optional("field").value_or("Q(w)"), [&](const auto& like) {
        using T = std::decay_t<decltype(like)>;
        T t = element(p, "t", like);
        p.reject_unknown();
        auto g = hesse::two_isogeny(t);
        r.payload = hesse::to_json(g);
        check_equal(r, "degeneracy_value(a, b) = 0", T(0) * one_like(t), glue::degeneracy_value(g.a, g.b));
        check_equal(r, "Phi2(j(E_a), j(E_b)) = 0", T(0) * one_like(t),
                    glue::modular_phi2(hesse::j_hesse(g.a), hesse::j_hesse(g.b)));
        hesse::HesseCurve Ea(g.a), Eb(g.b);
        auto K = hesse::make_point(Ea, t, t, one_like(t));
        bool ker = hesse::apply(g, K) == hesse::identity(Eb);
        check(r, "gamma([t:t:1]) = O", ker, true, ker);
    });
}

inline void cmd_invariants(Params& p, CommandReport& r) {
    with_field(p.optional("field").value_or("Q(w)"), [&](const auto& like) {
        auto f = polynomial_from_json(parse_json(p.required("sextic"), "--sextic"), like);
        auto expect = p.optional("expect");
        p.reject_unknown();
        auto ic = igusa::igusa_clebsch(f);
        auto J = igusa::igusa_from_clebsch(ic);
        auto abs = igusa::absolute_invariants(J);
        r.payload = Json{{"sextic", to_json(f)},
                         {"igusa_clebsch", igusa::to_json(ic)},
                         {"igusa", Json::array({to_json(J.J2), to_json(J.J4), to_json(J.J6), to_json(J.J8), to_json(J.J10)})},
                         {"absolute", Json::array({to_json(abs.j1), to_json(abs.j2), to_json(abs.j3)})}};
        if (expect) {
            auto e = ic_from_json(parse_json(*expect, "--expect"), like);
            check(r, "weighted-projective match with expected invariants", igusa::wp_equal(ic, e), igusa::to_json(e),
                  igusa::to_json(ic));
        }
    });
}

inline void cmd_census(Params& p, CommandReport& r) {
    auto field = p.optional("field");
    auto pstr = p.optional("p");
    std::uint64_t prime = 0;
    if (pstr) prime = parse_prime(*pstr);
    else if (field && field->rfind("Fp:", 0) == 0) prime = parse_prime(field->substr(3));
    else throw ParseError("census needs --p <prime> or --field Fp:<p>");
    PrimeField F(prime);
    Fp like = F(0);
    Fp a = element(p, "a", like), b = element(p, "b", like);
    p.reject_unknown();
    auto rep = glue::two_torsion_census(a, b);
    r.payload = glue::to_json(rep);
    r.payload["degenerate"] = is_zero(glue::degeneracy_value(a, b));
    check(r, "plus + minus = 16", rep.plus + rep.minus == 16, 16, rep.plus + rep.minus);
}

// ---- worked examples ----

inline void reference_curve_checks(CommandReport& r, const cover::ReferenceCurve& c) {
    auto ic = igusa::igusa_clebsch(c.sextic);
    igusa::IgusaClebsch<Rational> e{c.invariants[0], c.invariants[1], c.invariants[2], c.invariants[3]};
    check(r, c.name + ": Igusa-Clebsch class", igusa::wp_equal(ic, e), igusa::to_json(e), igusa::to_json(ic));
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        const auto& m = c.maps[i];
        bool ok = cover::verify_covering(m.covering);
        check(r, c.name + ": " + m.name + " is a covering", ok, true, ok);
        check_equal(r, c.name + ": j of " + m.name + " target", c.j_values[i], cover::j_of_weierstrass(m.covering.target));
    }
}

inline void cmd_verify_appendix(Params& p, CommandReport& r) {
    p.reject_unknown();
    auto curves = cover::reference_curves();
    for (const auto& c : curves) reference_curve_checks(r, c);

    auto ic00 = glue::prop2_invariants(Rational(0), Rational(0));
    igusa::IgusaClebsch<Rational> e1{-90, 720, -15480, 144};
    check(r, "glued invariants at (0,0) match fermat-pair", igusa::wp_equal(ic00, e1), igusa::to_json(e1), igusa::to_json(ic00));

    QSqrt3 s(Rational(-1), Rational(1));
    auto ics = glue::prop2_invariants(s, s);
    igusa::IgusaClebsch<QSqrt3> e2{774, 9648, 2763360, 27648};
    check(r, "glued invariants at (-1+sqrt3, -1+sqrt3) match cm1728-pair", igusa::wp_equal(ics, e2), igusa::to_json(e2),
          igusa::to_json(ics));
    check_equal(r, "j_hesse(-1+sqrt3) = 1728", QSqrt3(1728), hesse::j_hesse(s));

    auto gc = cover::generic_cover(Rational(0), Rational(0), Rational(5));
    auto icg = igusa::igusa_clebsch(gc.curve.sextic);
    check(r, "generic construction at (0,0,5) gives the fermat-pair class", igusa::wp_equal(icg, e1), igusa::to_json(e1),
          igusa::to_json(icg));
    check_equal(r, "generic construction at (0,0,5): j(E1)", Rational(0), gc.jE1);
    check_equal(r, "generic construction at (0,0,5): j(E2)", Rational(0), gc.jE2);

    Rational jm = Rational(-873722816) / Rational(59049), j64 = Rational(64) / Rational(9);
    check_equal(r, "F(64/9, -873722816/59049) = 0", Rational(0), cover::F_relation(j64, jm));
    check_equal(r, "F(1728, 1728) = 0", Rational(0), cover::F_relation(Rational(1728), Rational(1728)));
    check_equal(r, "-873722816/59049 = -2^6 239^3 / 3^10", jm, Rational(-64) * Rational(239).pow(3) / Rational(3).pow(10));

    auto fam = cover::both_special_families();
    check(r, "both-special families: count", fam.families.size() == 2, 2, fam.families.size());
    if (fam.families.size() == 2) {
        const auto &f1 = fam.families[0], &f2 = fam.families[1];
        check(r, "both-special families: first is a=0 with j = (1728, 1728)",
              f1.condition == "a=0" && f1.jE1 == Rational(1728) && f1.jE2 == Rational(1728) && f1.complementary,
              Json::array({"a=0", "1728", "1728", true}), Json::array({f1.condition, to_json(f1.jE1), to_json(f1.jE2), f1.complementary}));
        check(r, "both-special families: second has b quadratic in a, not complementary",
              f2.condition.rfind("b=", 0) == 0 && f2.jE1 == jm && f2.jE2 == jm && !f2.complementary,
              Json::array({"b=3/8 a^2", to_json(jm), to_json(jm), false}),
              Json::array({f2.condition, to_json(f2.jE1), to_json(f2.jE2), f2.complementary}));
    }
    auto sf = cover::special_first(Rational(8), Rational(24));  // b = 3a^2/8 at a = 8
    check_equal(r, "special_first on b=3a^2/8: j(E1)", jm, sf.jE1);
    check_equal(r, "special_first on b=3a^2/8: j(E2)", j64, sf.jE2);
    r.payload = Json{{"curves", curves.size()}, {"checks", r.checks.size()}};
}

}  // namespace detail

inline CommandReport run(const CommandRequest& req) {
    CommandReport r;
    detail::Params p(req.params);
    try {
        const std::string& s = req.subcommand;
        if (s == "cover-generic" || s == "cover-special1" || s == "cover-special2") detail::cmd_cover(s, p, r);
        else if (s == "cover-both-special") detail::cmd_both_special(p, r);
        else if (s == "glue") detail::cmd_glue(p, r);
        else if (s == "hesse-j") detail::cmd_hesse_j(p, r);
        else if (s == "hesse-orbit") detail::cmd_hesse_orbit(p, r);
        else if (s == "to-hesse") detail::cmd_to_hesse(p, r);
        else if (s == "isogeny2") detail::cmd_isogeny2(p, r);
        else if (s == "invariants") detail::cmd_invariants(p, r);
        else if (s == "census") detail::cmd_census(p, r);
        else if (s == "verify-appendix") detail::cmd_verify_appendix(p, r);
        else throw ParseError("unknown subcommand '" + s + "'");
    } catch (const MathError& e) {
        r.status = Status::math_error;
        r.condition = e.condition();
        r.message = e.what();
        r.checks.clear();
    } catch (const ParseError& e) {
        r.status = Status::parse_error;
        r.condition = "parse";
        r.message = e.what();
        r.payload = Json::object();
        r.checks.clear();
    }
    return r;
}

}  // namespace splitjac::cli
