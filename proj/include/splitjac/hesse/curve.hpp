#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "splitjac/algebra.hpp"

namespace splitjac::hesse {

// x^3 + y^3 + z^3 + 3a xyz = 0
template <Field T>
struct HesseCurve {
    T a;

    explicit HesseCurve(const T& a_) : a(a_) {
        if (is_zero(a * a * a + T(1))) throw MathError("a^3=-1", "x^3+y^3+z^3+3axyz is singular for a^3 = -1");
    }

    T equation(const T& x, const T& y, const T& z) const { return x * x * x + y * y * y + z * z * z + T(3) * a * x * y * z; }
    T one() const { return one_like(a); }
    T zero() const { return T(0) * one(); }
};

// Projective point, stored with its last nonzero coordinate equal to 1.
template <Field T>
struct HessePoint {
    T x, y, z;
    T a;  // parameter of the parent curve

    std::array<T, 3> coords() const { return {x, y, z}; }
    friend bool operator==(const HessePoint& p, const HessePoint& q) {
        return p.x == q.x && p.y == q.y && p.z == q.z && p.a == q.a;
    }
};

namespace detail {

template <Field T>
bool all_zero(const std::array<T, 3>& v) {
    return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]);
}

template <Field T>
HessePoint<T> normalized(const std::array<T, 3>& v, const T& a) {
    for (int i = 2; i >= 0; --i) {
        if (!is_zero(v[i])) {
            T inv = T(1) / v[i];
            return {v[0] * inv, v[1] * inv, v[2] * inv, a};
        }
    }
    throw std::logic_error("[0:0:0] is not a projective point");
}

template <Field T>
std::array<T, 3> add_formula(const HessePoint<T>& p, const HessePoint<T>& q) {
    return {p.y * p.y * q.x * q.z - q.y * q.y * p.x * p.z, p.x * p.x * q.y * q.z - q.x * q.x * p.y * p.z,
            p.z * p.z * q.x * q.y - q.z * q.z * p.x * p.y};
}

template <Field T>
std::array<T, 3> dbl_formula(const HessePoint<T>& p) {
    T x3 = p.x * p.x * p.x, y3 = p.y * p.y * p.y, z3 = p.z * p.z * p.z;
    return {p.y * (x3 - z3), p.x * (z3 - y3), p.z * (y3 - x3)};
}

// [x:y:z] -> [y:z:x] is translation by a 3-torsion point.
template <Field T>
HessePoint<T> rotate(const HessePoint<T>& p) { return normalized<T>({p.y, p.z, p.x}, p.a); }
template <Field T>
HessePoint<T> unrotate(const HessePoint<T>& p) { return normalized<T>({p.z, p.x, p.y}, p.a); }

}  // namespace detail

template <Field T>
HessePoint<T> make_point(const HesseCurve<T>& E, const T& x, const T& y, const T& z) {
    std::array<T, 3> v{x, y, z};
    if (detail::all_zero(v)) throw MathError("x=y=z=0", "[0:0:0] is not a projective point");
    if (!is_zero(E.equation(x, y, z))) throw MathError("not on curve", "point does not satisfy the Hesse equation");
    return detail::normalized(v, E.a);
}

template <Field T>
HessePoint<T> identity(const HesseCurve<T>& E) { return make_point(E, -E.one(), E.one(), E.zero()); }

template <Field T>
HessePoint<T> neg(const HessePoint<T>& p) { return detail::normalized<T>({p.y, p.x, p.z}, p.a); }

template <Field T>
HessePoint<T> dbl(const HessePoint<T>& p) { return detail::normalized(detail::dbl_formula(p), p.a); }

template <Field T>
HessePoint<T> add(const HessePoint<T>& p, const HessePoint<T>& q) {
    if (!(p.a == q.a)) throw MathError("different curves", "points lie on different Hesse curves");
    if (p == q) return dbl(p);
    auto r = detail::add_formula(p, q);
    if (!detail::all_zero(r)) return detail::normalized(r, p.a);
    auto s = detail::add_formula(detail::rotate(p), q);
    if (detail::all_zero(s)) throw std::logic_error("Hesse addition degenerate after translation");
    return detail::unrotate(detail::normalized(s, p.a));
}

template <Field T>
HessePoint<T> sub(const HessePoint<T>& p, const HessePoint<T>& q) { return add(p, neg(q)); }

template <Field T>
HessePoint<T> mul(long k, const HessePoint<T>& p) {
    HesseCurve<T> E(p.a);
    if (k < 0) return mul(-k, neg(p));
    HessePoint<T> acc = identity(E), base = p;
    while (k) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

template <Field T>
T j_hesse(const T& a) {
    T a3 = a * a * a;
    T d = a3 + T(1);
    if (is_zero(d)) throw MathError("a^3=-1", "j is undefined for a^3 = -1");
    T n = a3 - T(8);
    return -(T(27) * a3 * n * n * n) / (d * d * d);
}

// ---- 3-torsion ----

struct TorsionVector {
    int m = 0, n = 0;
    friend bool operator==(const TorsionVector&, const TorsionVector&) = default;
};

template <Field T>
struct TorsionPoint {
    HessePoint<T> point;
    TorsionVector tag;
};

template <Field T>
HessePoint<T> torsion_S(const HesseCurve<T>& E) { return make_point(E, -E.one(), E.zero(), E.one()); }

template <Field T>
HessePoint<T> torsion_T(const HesseCurve<T>& E) {
    if (!has_omega(E.a)) throw MathError("omega not in field", "the field does not contain a primitive cube root of unity");
    return make_point(E, -omega(E.a), E.one(), E.zero());
}

// The nine points mS + nT, in the order (0,0), (0,1), ..., (2,2).
template <Field T>
std::vector<TorsionPoint<T>> three_torsion(const HesseCurve<T>& E) {
    auto S = torsion_S(E), Tt = torsion_T(E);
    std::vector<TorsionPoint<T>> out;
    HessePoint<T> mS = identity(E);
    for (int m = 0; m < 3; ++m) {
        HessePoint<T> p = mS;
        for (int n = 0; n < 3; ++n) {
            if (!is_zero(p.x * p.y * p.z)) throw std::logic_error("3-torsion point off xyz = 0");
            out.push_back({p, {m, n}});
            p = add(p, Tt);
        }
        mS = add(mS, S);
    }
    return out;
}

// omega^det(P, Q)
template <Field T>
T weil_pairing3(const TorsionVector& p, const TorsionVector& q, const T& like) {
    int d = ((p.m * q.n - p.n * q.m) % 3 + 3) % 3;
    T w = omega(like);
    return d == 0 ? one_like(like) : (d == 1 ? w : w * w);
}

// g(P + T) / g(P) with g = (x^2 z + y^2 x + z^2 y) / (xyz).
template <Field T>
T weil_pairing3_via_g(const HesseCurve<T>& E, const HessePoint<T>& P) {
    auto g = [](const HessePoint<T>& q) -> std::optional<T> {
        T den = q.x * q.y * q.z;
        T num = q.x * q.x * q.z + q.y * q.y * q.x + q.z * q.z * q.y;
        if (is_zero(den) || is_zero(num)) return std::nullopt;
        return num / den;
    };
    HessePoint<T> PT = add(P, torsion_T(E));
    auto g0 = g(P), g1 = g(PT);
    if (!g0 || !g1) throw MathError("g(P)g(P+T) in {0,inf}", "auxiliary point is a zero or pole of g at P or P+T");
    return *g1 / *g0;
}

// ---- the 12 parameters with isomorphic curves ----

template <Field T>
struct OrbitEntry {
    std::string label;
    std::optional<T> value;  // empty when a denominator vanishes
};

template <Field T>
std::vector<OrbitEntry<T>> orbit12(const T& a) {
    const T w = omega(a), one = one_like(a);
    const std::array<T, 3> pw{one, w, w * w};
    const std::array<std::string, 3> wl{"", "*w", "*w^2"};
    std::vector<OrbitEntry<T>> out;
    for (int k = 0; k < 3; ++k) out.push_back({"a" + wl[k], a * pw[k]});
    const std::array<std::string, 3> base{"(2-a)/(1+a)", "(2w-a)/(w+a)", "(2w^2-a)/(w^2+a)"};
    for (int i = 0; i < 3; ++i) {
        T den = pw[i] + a;
        std::optional<T> b;
        if (!is_zero(den)) b = (T(2) * pw[i] - a) / den;
        for (int k = 0; k < 3; ++k) out.push_back({base[i] + wl[k], b ? std::optional<T>(*b * pw[k]) : std::nullopt});
    }
    return out;
}

// ---- 2-torsion: P = -P means x = y; on z = 1 this is 2X^3 + 3aX^2 + 1 = 0 ----

template <Field T>
Polynomial<T> two_torsion_cubic(const HesseCurve<T>& E) {
    const T one = E.one();
    return Polynomial<T>({one, E.zero(), T(3) * E.a, T(2) * one});
}

template <Field T>
std::vector<HessePoint<T>> two_torsion(const HesseCurve<T>& E) {
    std::vector<HessePoint<T>> out;
    for (const T& r : roots(two_torsion_cubic(E))) out.push_back(make_point(E, r, r, E.one()));
    return out;
}

// Uniform-ish random point over F_p: random x, then a random root in y of
// y^3 + 3a x y + x^3 + 1.
inline HessePoint<Fp> random_point(const HesseCurve<Fp>& E, std::mt19937_64& rng) {
    const std::uint64_t p = E.a.modulus();
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        Fp x(static_cast<std::int64_t>(dist(rng)), p);
        Polynomial<Fp> g({x * x * x + Fp(1, p), Fp(3, p) * E.a * x, Fp(0, p), Fp(1, p)});
        auto ys = roots(g);
        if (ys.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, ys.size() - 1);
        return make_point(E, x, ys[pick(rng)], Fp(1, p));
    }
}

template <Field T>
Json to_json(const HessePoint<T>& p) {
    return Json::array({splitjac::to_json(p.x), splitjac::to_json(p.y), splitjac::to_json(p.z)});
}

template <Field T>
Json to_json(const HesseCurve<T>& E) { return Json{{"a", splitjac::to_json(E.a)}}; }

}  // namespace splitjac::hesse
