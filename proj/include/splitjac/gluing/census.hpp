#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "splitjac/gluing/segre.hpp"

namespace splitjac::glue {

struct CensusReport {
    std::uint64_t p = 0;
    int plus = 0;   // 2-torsion points cut out by S1
    int minus = 0;  // ... by S2
    int on_D = 0;   // points with L1 = 0
};

namespace detail {

// Degree of the splitting field of 2X^3 + 3aX^2 + 1 over F_p.
inline int two_torsion_field_degree(const HesseCurve<Fp>& E) {
    auto n = hesse::two_torsion(E).size();
    return n == 3 ? 1 : (n == 1 ? 2 : 3);
}

}  // namespace detail

// Classifies the 16 points of (E_a x E_b)[2] by the eigenform set of the
// inversion that vanishes on them and counts those on D: L1 = 0.
inline CensusReport two_torsion_census(const Fp& a, const Fp& b) {
    const std::uint64_t p = a.modulus();
    if (p % 3 != 1) throw MathError("omega not in field", "census needs p = 1 mod 3");
    HesseCurve<Fp> Ea(a), Eb(b);
    int k = std::lcm(detail::two_torsion_field_degree(Ea), detail::two_torsion_field_degree(Eb));
    if (k != 1)
        throw MathError("2-torsion not rational",
                        "the 2-torsion of E_a x E_b is defined over F_{p^" + std::to_string(k) + "}, not over F_" +
                            std::to_string(p) + "; use an extension of degree " + std::to_string(k));
    auto maps = structural_maps(a);
    std::vector<HessePoint<Fp>> A{hesse::identity(Ea)}, B{hesse::identity(Eb)};
    for (const auto& P : hesse::two_torsion(Ea)) A.push_back(P);
    for (const auto& Q : hesse::two_torsion(Eb)) B.push_back(Q);

    CensusReport r;
    r.p = p;
    for (const auto& P : A)
        for (const auto& Q : B) {
            auto X = segre_embed(P, Q).X;
            bool s1 = std::all_of(maps.S1.begin(), maps.S1.end(), [&](const auto& L) { return is_zero(evaluate(L, X)); });
            bool s2 = std::all_of(maps.S2.begin(), maps.S2.end(), [&](const auto& L) { return is_zero(evaluate(L, X)); });
            if (s1 == s2) throw std::logic_error("2-torsion point in both or neither eigenspace");
            (s1 ? r.plus : r.minus)++;
            if (is_zero(evaluate(maps.L[0], X))) ++r.on_D;
        }
    return r;
}

// Smallest primes p = 1 mod 12 over which some E_a has all its 2-torsion
// rational.
inline std::vector<std::uint64_t> census_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 13; out.size() < count; p += 12) {
        if (!splitjac::detail::is_prime_u64(p)) continue;
        PrimeField F(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            Fp av = F(static_cast<std::int64_t>(a));
            if (is_zero(av * av * av + Fp(1))) continue;
            if (hesse::two_torsion(HesseCurve<Fp>(av)).size() == 3) {
                out.push_back(p);
                break;
            }
        }
    }
    return out;
}

inline Json to_json(const CensusReport& r) {
    return Json{{"p", r.p}, {"plus", r.plus}, {"minus", r.minus}, {"on_D", r.on_D}};
}

}  // namespace splitjac::glue
