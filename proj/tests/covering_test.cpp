#include <gtest/gtest.h>

#include "splitjac/covering.hpp"
#include "splitjac/invariants/igusa.hpp"
#include "support.hpp"

using namespace sjtest;
using cover::CoveringPair;

namespace {

template <Field T>
void expect_valid_pair(const CoveringPair<T>& cp) {
    EXPECT_TRUE(cover::verify_covering(cp.phi1));
    EXPECT_TRUE(cover::verify_covering(cp.phi2));
    EXPECT_EQ(cover::j_of_weierstrass(cp.phi1.target), cp.jE1);
    EXPECT_EQ(cover::j_of_weierstrass(cp.phi2.target), cp.jE2);
    for (const auto* m : {&cp.phi1, &cp.phi2}) {
        EXPECT_FALSE(is_zero(resultant(m->x_map.num(), m->x_map.den())));
        EXPECT_EQ(m->x_map.map_degree(), 3u);
    }
    EXPECT_FALSE(is_zero(discriminant(cp.curve.sextic)));
}

}  // namespace

TEST(Covering, GenericOverQ) {
    std::mt19937_64 rng(31);
    int n = 0;
    while (n < 50) {
        Rational a = random_rational(rng, 6), b = random_rational(rng, 6), c = random_rational(rng, 6);
        try {
            expect_valid_pair(cover::generic_cover(a, b, c));
        } catch (const MathError&) {
            continue;
        }
        ++n;
    }
}

TEST(Covering, GenericOverFp) {
    std::mt19937_64 rng(32);
    int n = 0;
    while (n < 50) {
        const std::uint64_t p = 10007;
        try {
            expect_valid_pair(cover::generic_cover(random_fp(p, rng), random_fp(p, rng), random_fp(p, rng), std::make_optional(random_fp(p, rng))));
        } catch (const MathError&) {
            continue;
        }
        ++n;
    }
}

TEST(Covering, GenericWithTwistAndOverQOmega) {
    auto cp = cover::generic_cover(QOmega(1), QOmega(Rational(0), Rational(1)), QOmega(2), std::make_optional(QOmega(3)));
    expect_valid_pair(cp);
    EXPECT_EQ(cp.curve.twist, QOmega(3));
}

TEST(Covering, GenericOnDiscDLocus) {
    // disc(P) = -135 but b^3 = 27c^2
    try {
        cover::generic_cover(Rational(0), Rational(3), Rational(-1));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.condition(), "b^3-27c^2=0");
    }
    expect_valid_pair(cover::generic_cover(Rational(0), Rational(3), Rational(1) / Rational(2)));
}

TEST(Covering, GenericErrors) {
    auto cond = [](auto f) {
        try {
            f();
        } catch (const MathError& e) {
            return e.condition();
        }
        return std::string("none");
    };
    EXPECT_EQ(cond([] { cover::generic_cover(Rational(1), Rational(1), Rational(0)); }), "c=0");
    // P = (x+1)^2 (x+2)
    EXPECT_EQ(cond([] { cover::generic_cover(Rational(4), Rational(5), Rational(2)); }), "disc(P)=0");
    EXPECT_EQ(cond([] { cover::generic_cover(Rational(0), Rational(3), Rational(1)); }), "b^3-27c^2=0");
    EXPECT_EQ(cond([] { cover::generic_cover(Rational(1), Rational(1), Rational(1), std::make_optional(Rational(0))); }), "d=0");
}

TEST(Covering, SpecialFirst) {
    std::mt19937_64 rng(33);
    int n = 0;
    while (n < 30) {
        try {
            expect_valid_pair(cover::special_first(random_rational(rng, 6), random_rational(rng, 6)));
        } catch (const MathError&) {
            continue;
        }
        ++n;
    }
    auto cp = cover::special_first(Rational(1), Rational(-1));
    EXPECT_EQ(cp.jE2, Rational(16384) / Rational(5));
    auto s = cover::special_first(Rational(8), Rational(24));
    EXPECT_EQ(s.jE1, Rational(-873722816) / Rational(59049));
    EXPECT_EQ(s.jE2, Rational(64) / Rational(9));
    expect_valid_pair(s);
    EXPECT_THROW(cover::special_first(Rational(2), Rational(1)), MathError);  // a^2 = 4b
    EXPECT_THROW(cover::special_first(Rational(1), Rational(0)), MathError);
}

TEST(Covering, SpecialSecond) {
    std::mt19937_64 rng(34);
    int n = 0;
    while (n < 30) {
        try {
            expect_valid_pair(cover::special_second(random_rational(rng, 6), random_rational(rng, 6)));
        } catch (const MathError&) {
            continue;
        }
        ++n;
    }
    auto cp = cover::special_second(Rational(1), Rational(1));
    EXPECT_EQ(cp.jE1, Rational(64));
    EXPECT_EQ(cp.jE2, Rational(64) * Rational(-23).pow(3) / Rational(729));
    // (3t^2, -t^3) shares a root for t = 1 and t = -1
    for (Rational c : {Rational(-1), Rational(1)}) {
        try {
            cover::special_second(Rational(3), c);
            FAIL() << "expected shared root";
        } catch (const MathError& e) {
            EXPECT_EQ(e.condition(), "res(P,Q)=0");
        }
    }
}

TEST(Covering, VerifyRejectsWrongTarget) {
    auto C = cover::fermat_pair_curve();
    auto m = C.maps[0].covering;
    EXPECT_TRUE(cover::verify_covering(m));
    m.target = cover::WeierstrassModel<Rational>::from_cubic(Polynomial<Rational>({Rational(101), Rational(0), Rational(0), Rational(1)}), Rational(1));
    EXPECT_FALSE(cover::verify_covering(m));
}

TEST(Covering, JOfWeierstrass) {
    using P = Polynomial<Rational>;
    auto j = [](P g) { return cover::j_of_weierstrass(cover::WeierstrassModel<Rational>::from_cubic(g, Rational(1))); };
    EXPECT_EQ(j(P({Rational(0), Rational(1), Rational(0), Rational(1)})), Rational(1728));
    EXPECT_EQ(j(P({Rational(100), Rational(0), Rational(0), Rational(1)})), Rational(0));
    EXPECT_EQ(j(P({Rational(0), Rational(486), Rational(44), Rational(1)})), Rational(-873722816) / Rational(59049));
    EXPECT_THROW(j(P({Rational(0), Rational(0), Rational(0), Rational(1)})), MathError);
}

TEST(Covering, FRelation) {
    EXPECT_EQ(cover::F_relation(Rational(1728), Rational(1728)), Rational(0));
    EXPECT_EQ(cover::F_relation(Rational(64) / Rational(9), Rational(-873722816) / Rational(59049)), Rational(0));
    EXPECT_EQ(cover::F_relation(Rational(0), Rational(0)), Rational(-80621568));
    // generic j paired with the special one from the first-special family
    std::mt19937_64 rng(35);
    for (int i = 0; i < 10; ++i) {
        try {
            auto cp = cover::special_first(random_rational(rng, 5), random_rational(rng, 5));
            EXPECT_EQ(cover::F_relation(cp.jE2, cp.jE1), Rational(0));
        } catch (const MathError&) {
        }
    }
}

TEST(Residue, GenericIsZeroSymbolically) {
    Symbols S;
    auto r = cover::complement_residue(cover::generic_f2_numerator(S.a, S.b, S.c), cover::cubic_Q(S.b, S.c),
                                       cover::cubic_P(S.a, S.b, S.c));
    EXPECT_TRUE(r.is_zero());
}

TEST(Residue, SpecialFirstIsZeroSymbolically) {
    using R2 = Polynomial<Q1>;  // Q[a][b]
    R2 a(Q1::x()), b = R2::x();
    Polynomial<R2> Pm({b, a, R2(1)});
    auto r = cover::complement_residue(cover::special_first_f2_numerator(a, b), cover::special_first_Q(a, b), Pm);
    EXPECT_TRUE(r.is_zero());
}

TEST(Residue, SpecialSecondIsZeroSymbolically) {
    using R2 = Polynomial<Q1>;  // Q[b][c]
    R2 b(Q1::x()), c = R2::x();
    Polynomial<R2> l({R2(3) * c, b});
    auto r = cover::complement_residue(l * l * l, cover::cubic_Q(b, c), cover::special_second_P(b, c));
    EXPECT_TRUE(r.is_zero());
}

TEST(Residue, PerturbedCandidateFails) {
    // d = 3c/b perturbed by one at (a, b, c) = (1, 2, 3)
    using P = Polynomial<Rational>;
    Rational a(1), b(2), c(3);
    Rational d = Rational(3) * c / b + Rational(1);
    P N = P({d, Rational(1)}).pow(2) * P({Rational(5), Rational(1)});
    EXPECT_FALSE(cover::complement_residue(N, cover::cubic_Q(b, c), cover::cubic_P(a, b, c)).is_zero());
    EXPECT_TRUE(cover::complement_residue(cover::generic_f2_numerator(a, b, c), cover::cubic_Q(b, c), cover::cubic_P(a, b, c))
                    .is_zero());
}

TEST(Residue, RejectsSharedFactor) {
    using P = Polynomial<Rational>;
    P N = P({Rational(1), Rational(1)}).pow(3), M = P({Rational(1), Rational(1)}) * P({Rational(0), Rational(0), Rational(1)});
    EXPECT_THROW(cover::complement_residue(N, M, cover::cubic_P(Rational(1), Rational(2), Rational(3))), MathError);
}

TEST(BothSpecial, Classification) {
    auto cls = cover::both_special_families();
    EXPECT_EQ(cls.remainder.to_string(std::vector<std::string>{"x", "b", "a"}),
              "(-32*a*b^2+20*a^3*b-3*a^5)*x+(8*a^2*b^2-3*a^4*b)");
    // -a(3a^2-8b)(a^2-4b) x - a^2 b (3a^2-8b), with b outer and a inner
    using R = Polynomial<Q1>;
    R a(Q1::x()), b = R::x();
    R k = R(3) * a * a - R(8) * b;
    Polynomial<R> expect({-(a * a * b * k), -(a * k * (a * a - R(4) * b))});
    EXPECT_EQ(cls.remainder, expect);

    ASSERT_EQ(cls.families.size(), 2u);
    const auto& f1 = cls.families[0];
    EXPECT_EQ(f1.condition, "a=0");
    EXPECT_EQ(f1.jE1, Rational(1728));
    EXPECT_EQ(f1.jE2, Rational(1728));
    EXPECT_TRUE(f1.complementary);
    std::vector<std::string> xb{"x", "b"};
    EXPECT_EQ(f1.f1.num().to_string(xb), "x^3");
    EXPECT_EQ(f1.f1.den().to_string(xb), "x^2+b");
    EXPECT_EQ(f1.f2.den().to_string(xb), "4*x^3+3*b*x");

    const auto& f2 = cls.families[1];
    Rational jm = Rational(-873722816) / Rational(59049);
    EXPECT_EQ(f2.jE1, jm);
    EXPECT_EQ(f2.jE2, jm);
    EXPECT_EQ(jm, Rational(-64) * Rational(239).pow(3) / Rational(3).pow(10));
    EXPECT_FALSE(f2.complementary);
    std::vector<std::string> xa{"x", "a"};
    EXPECT_EQ(f2.f1.den().to_string(xa), "8*x^2+8*a*x+3*a^2");
    EXPECT_EQ(f2.f2.den().to_string(xa), "32*x^3+48*a*x^2+27*a^2*x");
}
