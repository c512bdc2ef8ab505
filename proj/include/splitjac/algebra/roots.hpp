#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "splitjac/algebra/polynomial.hpp"

// Roots lying in the coefficient field: F_p, Q and Q(sqrt(D)) for squarefree D.
// Only distinct roots are returned, in a deterministic order.

namespace splitjac {

namespace detail {

inline std::uint64_t modulus_of(const Polynomial<Fp>& f) {
    for (const auto& c : f.coefficients())
        if (c.bound()) return c.modulus();
    throw std::logic_error("polynomial over F_p has no bound coefficient");
}

inline Polynomial<Fp> bind(const Polynomial<Fp>& f, std::uint64_t p) {
    return f.map([p](const Fp& c) { return c.bound() ? c : Fp(c.raw(), p); });
}

inline Polynomial<Fp> powmod_poly(Polynomial<Fp> base, std::uint64_t e, const Polynomial<Fp>& m) {
    Polynomial<Fp> r(Fp(1, modulus_of(m)));
    base = divrem(base, m).second;
    while (e) {
        if (e & 1) r = divrem(r * base, m).second;
        base = divrem(base * base, m).second;
        e >>= 1;
    }
    return r;
}

inline void split_linear_factors(const Polynomial<Fp>& g, std::uint64_t p, std::vector<Fp>& out) {
    if (g.deg0() == 0) return;
    if (g.deg0() == 1) {
        out.push_back(-g.coeff(0) / g.coeff(1));
        return;
    }
    for (std::uint64_t delta = 0;; ++delta) {
        Polynomial<Fp> shift{Fp(static_cast<std::int64_t>(delta % p), p), Fp(1, p)};
        Polynomial<Fp> w = powmod_poly(shift, (p - 1) / 2, g) - Polynomial<Fp>(Fp(1, p));
        Polynomial<Fp> d = gcd(g, w);
        if (d.deg0() > 0 && d.deg0() < g.deg0()) {
            split_linear_factors(d, p, out);
            split_linear_factors(exact_div(g, d), p, out);
            return;
        }
        if (delta > 4 * p + 64) throw std::logic_error("equal-degree splitting did not terminate");
    }
}

inline mpz_class centered(const mpz_class& x, const mpz_class& m) {
    mpz_class r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

inline mpz_class invert_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r, xx = x % m;
    if (xx < 0) xx += m;
    if (mpz_invert(r.get_mpz_t(), xx.get_mpz_t(), m.get_mpz_t()) == 0) throw std::logic_error("not invertible mod p^k");
    return r;
}

inline mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
    mpz_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % m;
    return acc;
}

inline std::vector<mpz_class> derivative_z(const std::vector<mpz_class>& c) {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
    return d;
}

// Newton lift of a simple root r0 of c (mod p) to a root mod m = p^k.
inline mpz_class hensel_lift(const std::vector<mpz_class>& c, std::uint64_t r0, const mpz_class& m) {
    auto dc = derivative_z(c);
    mpz_class r = r0;
    for (int it = 0; it < 256; ++it) {
        mpz_class v = eval_mod(c, r, m);
        if (v == 0) return r;
        r = (r - v * invert_mod(eval_mod(dc, r, m), m)) % m;
        if (r < 0) r += m;
    }
    throw std::logic_error("Hensel lifting did not converge");
}

inline Polynomial<Fp> reduce_mod_p(const std::vector<mpz_class>& c, std::uint64_t p) {
    mpz_class pp(static_cast<unsigned long>(p));
    std::vector<Fp> v;
    for (const auto& x : c) {
        mpz_class r = x % pp;
        if (r < 0) r += pp;
        v.push_back(Fp(static_cast<std::int64_t>(r.get_ui()), p));
    }
    return Polynomial<Fp>(std::move(v));
}

}  // namespace detail

inline std::vector<Fp> roots(const Polynomial<Fp>& f0) {
    if (f0.is_zero()) throw MathError("f=0", "roots of the zero polynomial");
    if (f0.deg0() == 0) return {};
    const std::uint64_t p = detail::modulus_of(f0);
    Polynomial<Fp> f = detail::bind(f0, p);
    f = f.scale(f.leading().inverse());
    Polynomial<Fp> xp = detail::powmod_poly(Polynomial<Fp>::x().map([p](const Fp& c) { return Fp(c.raw(), p); }), p, f);
    Polynomial<Fp> g = gcd(f, xp - Polynomial<Fp>{Fp(0, p), Fp(1, p)});
    std::vector<Fp> out;
    detail::split_linear_factors(g, p, out);
    std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    return out;
}

namespace detail {

// Integer data of a polynomial over Q or Q(sqrt(D)): coefficient i is
// (A[i] + B[i] sqrt(D)), leading coefficient A.back() a rational integer.
struct IntegralImage {
    std::vector<mpz_class> A, B;
    mpz_class lc;
};

template <class K>
IntegralImage integral_image(const Polynomial<K>& f, long D) {
    mpz_class L = 1;
    auto parts = [](const K& c) -> std::pair<Rational, Rational> {
        if constexpr (std::same_as<K, Rational>) return {c, Rational(0)};
        else return {c.a(), c.b()};
    };
    for (const auto& c : f.coefficients()) {
        auto [a, b] = parts(c);
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a.denominator().get_mpz_t());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), b.denominator().get_mpz_t());
    }
    IntegralImage img;
    for (const auto& c : f.coefficients()) {
        auto [a, b] = parts(c);
        img.A.push_back(mpz_class(a.numerator() * (L / a.denominator())));
        img.B.push_back(mpz_class(b.numerator() * (L / b.denominator())));
    }
    // multiply by the conjugate of the leading coefficient so it becomes rational
    mpz_class la = img.A.back(), lb = img.B.back();
    if (lb != 0) {
        for (std::size_t i = 0; i < img.A.size(); ++i) {
            mpz_class a = img.A[i], b = img.B[i];
            img.A[i] = a * la - b * lb * D;
            img.B[i] = b * la - a * lb;
        }
    }
    img.lc = img.A.back();
    return img;
}

inline std::optional<std::uint64_t> sqrt_mod_p(long D, std::uint64_t p) {
    Polynomial<Fp> q{Fp(-static_cast<std::int64_t>(D), p), Fp(0, p), Fp(1, p)};
    auto r = roots(q);
    if (r.empty()) return std::nullopt;
    return r.front().value();
}

}  // namespace detail

// Roots in Q (D == 0) or Q(sqrt(D)), found p-adically: roots modulo a good
// prime are Hensel-lifted past a Cauchy-type height bound, then recognized
// and verified exactly.
template <class K>
std::vector<K> roots_padic(const Polynomial<K>& f0, long D) {
    if (f0.is_zero()) throw MathError("f=0", "roots of the zero polynomial");
    if (f0.deg0() == 0) return {};
    Polynomial<K> f = exact_div(f0, gcd(f0, f0.derivative()));
    if (f.deg0() == 0) return {};
    auto img = detail::integral_image(f, D);
    const bool quad = D != 0;

    mpz_class sqrt_bound = 0;
    if (quad) {
        mpz_class ad = D < 0 ? -D : D;
        mpz_sqrt(sqrt_bound.get_mpz_t(), ad.get_mpz_t());
        sqrt_bound += 1;
    }
    mpz_class height = 0;
    for (std::size_t i = 0; i < img.A.size(); ++i) {
        mpz_class h = abs(img.A[i]) + abs(img.B[i]) * sqrt_bound;
        if (h > height) height = h;
    }
    mpz_class cz = height + 1;
    mpz_class need = 4 * abs(img.lc) * cz + 2;

    for (std::uint64_t p = 5;; p += 2) {
        if (!detail::is_prime_u64(p)) continue;
        mpz_class pz(static_cast<unsigned long>(p));
        if (img.lc % pz == 0) continue;
        std::uint64_t s0 = 0;
        if (quad) {
            if ((D % static_cast<long>(p)) == 0) continue;
            auto s = detail::sqrt_mod_p(D, p);
            if (!s) continue;
            s0 = *s;
        }
        std::vector<std::vector<mpz_class>> embeddings;
        mpz_class m = pz;
        while (m <= need) m *= pz;
        mpz_class s = 0;
        if (quad) {
            s = detail::hensel_lift({mpz_class(-D), 0, 1}, s0, m);
            for (int sign : {1, -1}) {
                std::vector<mpz_class> c;
                for (std::size_t i = 0; i < img.A.size(); ++i) c.push_back(mpz_class((img.A[i] + sign * img.B[i] * s) % m));
                embeddings.push_back(std::move(c));
            }
        } else {
            embeddings.push_back(img.A);
        }
        bool good = true;
        std::vector<std::vector<Fp>> small;
        for (const auto& c : embeddings) {
            Polynomial<Fp> fp = detail::reduce_mod_p(c, p);
            if (gcd(fp, fp.derivative()).deg0() != 0) { good = false; break; }
            small.push_back(roots(fp));
        }
        if (!good) continue;

        std::vector<std::vector<mpz_class>> lifted;
        for (std::size_t e = 0; e < embeddings.size(); ++e) {
            std::vector<mpz_class> l;
            for (const auto& r : small[e]) l.push_back(detail::hensel_lift(embeddings[e], r.value(), m));
            lifted.push_back(std::move(l));
        }

        std::vector<K> out;
        auto accept = [&](const K& cand) {
            if (!is_zero(f(cand))) return;
            if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
        };
        if (!quad) {
            for (const auto& r : lifted[0]) {
                mpz_class U = detail::centered(mpz_class(img.lc * r), m);
                accept(K(Rational(U, img.lc)));
            }
        } else if constexpr (!std::same_as<K, Rational>) {
            mpz_class sinv = detail::invert_mod(s, m);
            for (const auto& rp : lifted[0])
                for (const auto& rm : lifted[1]) {
                    mpz_class U = detail::centered(mpz_class(img.lc * (rp + rm)), m);
                    mpz_class V = detail::centered(mpz_class(img.lc * (rp - rm) * sinv), m);
                    mpz_class den = 2 * img.lc;
                    accept(K(Rational(U, den), Rational(V, den)));
                }
        }
        std::sort(out.begin(), out.end(), [](const K& a, const K& b) {
            if constexpr (std::same_as<K, Rational>) return a < b;
            else return a.a() != b.a() ? a.a() < b.a() : a.b() < b.b();
        });
        return out;
    }
}

inline std::vector<Rational> roots(const Polynomial<Rational>& f) { return roots_padic(f, 0); }

template <long D>
std::vector<QuadExt<D>> roots(const Polynomial<QuadExt<D>>& f) { return roots_padic(f, D); }

}  // namespace splitjac
