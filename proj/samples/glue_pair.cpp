// Glue E_a and E_b along their 3-torsion and look at the resulting genus-2 curve.
#include <iostream>

#include "splitjac/covering.hpp"
#include "splitjac/gluing.hpp"

using namespace splitjac;

int main() {
    auto ic = glue::prop2_invariants(Rational(0), Rational(0));
    std::cout << "glued at (0,0): " << igusa::to_json(ic).dump() << "\n";
    auto C = cover::fermat_pair_curve();
    std::cout << "y^2 = " << C.sextic.to_string() << " has class " << igusa::to_json(igusa::igusa_clebsch(C.sextic)).dump()
              << ", same point: " << std::boolalpha << igusa::wp_equal(ic, igusa::igusa_clebsch(C.sextic)) << "\n";

    try {
        glue::prop2_invariants(Rational(-17) / Rational(12), Rational(-31) / Rational(6));
    } catch (const MathError& e) {
        std::cout << "(-17/12, -31/6): " << e.condition() << "\n";
    }

    // first pair over F_37 whose 2-torsion is rational
    PrimeField F(37);
    for (int a = 0; a < 37; ++a)
        for (int b = a; b < 37; ++b) {
            try {
                auto r = glue::two_torsion_census(F(a), F(b));
                std::cout << "census for (" << a << "," << b << ") over F_37: " << glue::to_json(r).dump() << "\n";
                return 0;
            } catch (const MathError&) {
            }
        }
}
