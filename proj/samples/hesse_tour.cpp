// Group law, 3-torsion and the Weil pairing on a Hesse curve over F_31.
#include <iostream>
#include <random>

#include "splitjac/hesse.hpp"

using namespace splitjac;

int main() {
    PrimeField F(31);
    hesse::HesseCurve<Fp> E(F(5));
    std::mt19937_64 rng(7);
    auto P = hesse::random_point(E, rng), Q = hesse::random_point(E, rng);
    std::cout << "j(E_5) = " << hesse::j_hesse(E.a) << "\n";
    std::cout << "P = " << hesse::to_json(P).dump() << "\nQ = " << hesse::to_json(Q).dump() << "\n";
    std::cout << "P + Q = " << hesse::to_json(hesse::add(P, Q)).dump() << "\n";

    auto tors = hesse::three_torsion(E);
    std::cout << "E[3]:\n";
    for (const auto& t : tors)
        std::cout << "  " << t.tag.m << "S+" << t.tag.n << "T = " << hesse::to_json(t.point).dump() << "\n";
    std::cout << "e3(S,T) = " << hesse::weil_pairing3<Fp>({1, 0}, {0, 1}, E.a) << ", omega = " << omega(E.a) << "\n";

    // a Weierstrass curve with rational 3-torsion, put in Hesse form
    QOmega t0(2);
    QOmega t3 = t0 * t0 * t0;
    auto conv = hesse::weierstrass_to_hesse(QOmega(-3) * t0 * (t3 - QOmega(8)), QOmega(-2) * (t3 * t3 + QOmega(20) * t3 - QOmega(8)));
    std::cout << "Hesse parameter: " << conv.t << ", j = " << hesse::j_hesse(conv.t) << "\n";
}
