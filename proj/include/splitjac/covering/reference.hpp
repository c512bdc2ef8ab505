#pragma once

#include <array>
#include <string>
#include <vector>

#include "splitjac/covering/models.hpp"

namespace splitjac::cover {

// Worked curves with explicit degree-3 maps, all over Q with twist 1.
struct ReferenceMap {
    std::string name;
    DegreeThreeCovering<Rational> covering;
};

struct ReferenceCurve {
    std::string name;
    Polynomial<Rational> sextic;
    std::array<long long, 4> invariants;  // projective Igusa-Clebsch class
    std::vector<ReferenceMap> maps;
    std::vector<Rational> j_values;  // j of the targets, in the order of maps
};

namespace detail {

using QP = Polynomial<Rational>;

inline QP qp(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (long long x : c) v.emplace_back(x);
    return QP(std::move(v));
}

inline ReferenceMap ref_map(std::string name, const QP& sextic, const QP& xn, const QP& xd, const QP& yn, const QP& yd,
                            const QP& cubic) {
    GenusTwoModel<Rational> C{sextic, Rational(1)};
    return {std::move(name),
            {C, WeierstrassModel<Rational>::from_cubic(cubic, Rational(1)), RationalFunction<Rational>(xn, xd),
             RationalFunction<Rational>(yn, yd)}};
}

}  // namespace detail

// y^2 = (x^3+5)(4x^3+5), both quotients with j = 0.
inline ReferenceCurve fermat_pair_curve() {
    using detail::qp;
    auto A = qp({5, 0, 0, 1}), B = qp({5, 0, 0, 4});
    auto C = A * B;
    return {"fermat-pair",
            C,
            {-90, 720, -15480, 144},
            {detail::ref_map("phi1", C, qp({0, 0, -15}), A, qp({-50, 0, 0, 5}), A * A, qp({100, 0, 0, 1})),
             detail::ref_map("phi2", C, qp({0, -75}), B, qp({-125, 0, 0, 200}), B * B, qp({625, 0, 0, 1}))},
            {Rational(0), Rational(0)}};
}

// y^2 = x(x^2+1)(4x^2+3), both quotients with j = 1728.
inline ReferenceCurve cm1728_pair_curve() {
    using detail::qp;
    auto A = qp({0, 3, 0, 4}), B = qp({1, 0, 1});
    auto C = A * B;
    auto x2 = qp({0, 0, 1});
    return {"cm1728-pair",
            C,
            {774, 9648, 2763360, 27648},
            {detail::ref_map("phi1", C, qp({1}), A, qp({1, 0, 4}), x2 * qp({3, 0, 4}) * qp({3, 0, 4}), qp({0, 1, 0, 1})),
             detail::ref_map("phi2", C, qp({0, 0, 0, 4}), B, qp({0, 12, 0, 4}), B * B, qp({0, 108, 0, 1}))},
            {Rational(1728), Rational(1728)}};
}

// y^2 = x(2x^2+4x+3)(3x^2+4x+2): two maps onto the j = -873722816/59049
// curve related by x -> 1/x, and two onto the j = 64/9 curve.
inline ReferenceCurve mixed_pair_curve() {
    using detail::qp;
    auto U = qp({2, 4, 3}), V = qp({3, 4, 2});
    auto C = qp({0, 1}) * V * U;
    auto xV = qp({0, 1}) * V;
    auto x2V2 = qp({0, 0, 1}) * V * V;
    auto E1 = qp({0, 486, 44, 1});
    auto E2 = qp({3, 1, -1, 1});
    Rational j1 = Rational(-873722816) / Rational(59049), j2 = Rational(64) / Rational(9);
    return {"mixed-pair",
            C,
            {86, 13456, 471968, 6718464},
            {detail::ref_map("phi1", C, qp({0, 0, 0, 18}), U, qp({0, 18}) * qp({6, 8, 3}), U * U, E1),
             detail::ref_map("phi1-inv", C, qp({18}), xV, qp({3, 8, 6}).scale(Rational(18)), x2V2, E1),
             detail::ref_map("phi2", C, qp({-2, 4, 5, 2}), U, qp({2, 1}) * qp({2, 0, 1}).scale(Rational(2)), U * U, E2),
             detail::ref_map("phi2-inv", C, qp({2, 5, 4, -2}), xV, qp({1, 2}) * qp({1, 0, 2}).scale(Rational(2)), x2V2,
                             E2)},
            {j1, j1, j2, j2}};
}

inline std::vector<ReferenceCurve> reference_curves() {
    return {fermat_pair_curve(), cm1728_pair_curve(), mixed_pair_curve()};
}

}  // namespace splitjac::cover
