#include <gtest/gtest.h>

#include "splitjac/gluing.hpp"
#include "support.hpp"

using namespace sjtest;
using namespace splitjac::glue;

namespace {

struct CensusPairs {
    std::vector<std::pair<Fp, Fp>> generic, degenerate;
};

// pairs over F_p whose 2-torsion is rational; degenerate ones come from the
// 2-isogeny family
CensusPairs find_census_pairs(std::uint64_t p) {
    PrimeField F(p);
    CensusPairs out;
    auto rational_2tors = [](const Fp& a) { return hesse::two_torsion(HesseCurve<Fp>(a)).size() == 3; };
    std::vector<Fp> good;
    for (std::uint64_t a = 0; a < p; ++a) {
        Fp v = F(static_cast<std::int64_t>(a));
        if (!is_zero(v * v * v + F(1)) && rational_2tors(v)) good.push_back(v);
    }
    for (const auto& a : good)
        for (const auto& b : good) {
            if (is_zero(degeneracy_value(a, b))) continue;
            out.generic.emplace_back(a, b);
        }
    for (std::uint64_t t = 1; t < p; ++t) {
        try {
            auto g = hesse::two_isogeny(F(static_cast<std::int64_t>(t)));
            if (rational_2tors(g.a) && rational_2tors(g.b)) out.degenerate.emplace_back(g.a, g.b);
        } catch (const MathError&) {
        }
    }
    return out;
}

}  // namespace

TEST(Segre, EmbeddingLandsOnSegreImage) {
    std::mt19937_64 rng(51);
    PrimeField F(37);
    HesseCurve<Fp> Ea(F(3)), Eb(F(5));
    for (int i = 0; i < 50; ++i) {
        auto X = segre_embed(hesse::random_point(Ea, rng), hesse::random_point(Eb, rng));
        EXPECT_TRUE(X.on_segre_image());
    }
}

TEST(Structure, InversionActsAsNegation) {
    std::mt19937_64 rng(52);
    for (std::uint64_t p : {37ull, 61ull, 73ull}) {
        PrimeField F(p);
        auto maps = structural_maps(F(0));
        HesseCurve<Fp> Ea(F(2)), Eb(F(7));
        for (int i = 0; i < 30; ++i) {
            auto P = hesse::random_point(Ea, rng), Q = hesse::random_point(Eb, rng);
            EXPECT_EQ(maps.inversion(segre_embed(P, Q)), segre_embed(hesse::neg(P), hesse::neg(Q)));
        }
    }
}

TEST(Structure, TranslationsRealizeGluedGroup) {
    for (std::uint64_t p : {37ull, 61ull, 73ull, 1009ull}) {
        PrimeField F(p);
        auto tc = translation_correspondence(F(2), F(5), p);
        EXPECT_EQ(tc.trans1, (GammaElement{1, 0})) << p;
        EXPECT_EQ(tc.trans2, (GammaElement{0, 1})) << p;
    }
    EXPECT_THROW(translation_correspondence(PrimeField(11)(3), PrimeField(11)(5)), MathError);
}

TEST(Structure, LinearFormsAreRelativeInvariants) {
    auto maps = structural_maps(QOmega(0));
    for (const auto* M : {&maps.trans1, &maps.trans2})
        for (const auto& L : maps.L) {
            auto r = linear_ratio(M->pullback(L), L);
            ASSERT_TRUE(r.has_value());
            EXPECT_EQ(r->pow(3), QOmega(1));
        }
    // L1 = X1 + X5 + X9 is inversion invariant
    EXPECT_EQ(maps.inversion.pullback(maps.L[0]), maps.L[0]);
}

TEST(Structure, KummerQuadricsInvariant) {
    auto maps = structural_maps(QOmega(0));
    for (const auto* M : {&maps.trans1, &maps.trans2, &maps.inversion})
        for (const auto& q : maps.kummer) EXPECT_EQ(M->pullback(q), q);
}

TEST(Structure, EigenformsOfInversion) {
    auto maps = structural_maps(QOmega(0));
    for (const auto& L : maps.S1) EXPECT_EQ(maps.inversion.pullback(L), L);
    for (const auto& L : maps.S2) {
        auto neg = L;
        for (auto& c : neg) c = -c;
        EXPECT_EQ(maps.inversion.pullback(L), neg);
    }
}

TEST(Structure, TranslationGeneratorsHaveOrderThree) {
    auto maps = structural_maps(QOmega(0));
    auto id = ProjLinearMap9<QOmega>::identity(QOmega(1));
    EXPECT_TRUE((maps.trans1 * maps.trans1 * maps.trans1).projectively_equal(id));
    EXPECT_TRUE((maps.trans2 * maps.trans2 * maps.trans2).projectively_equal(id));
    EXPECT_TRUE((maps.inversion * maps.inversion).projectively_equal(id));
}

TEST(Census, GenericAndDegeneratePairs) {
    int generic = 0, degenerate = 0;
    for (auto p : census_primes(3)) {
        auto pairs = find_census_pairs(p);
        for (std::size_t i = 0; i < pairs.generic.size() && i < 4; ++i) {
            auto r = two_torsion_census(pairs.generic[i].first, pairs.generic[i].second);
            EXPECT_EQ(r.plus, 6);
            EXPECT_EQ(r.minus, 10);
            EXPECT_EQ(r.on_D, 6);
            ++generic;
        }
        for (std::size_t i = 0; i < pairs.degenerate.size() && i < 3; ++i) {
            auto r = two_torsion_census(pairs.degenerate[i].first, pairs.degenerate[i].second);
            EXPECT_EQ(r.plus, 6);
            EXPECT_EQ(r.minus, 10);
            EXPECT_EQ(r.on_D, 7);
            ++degenerate;
        }
    }
    EXPECT_GE(generic, 5);
    EXPECT_GE(degenerate, 3);
}

TEST(Census, Primes) {
    EXPECT_EQ(census_primes(3), (std::vector<std::uint64_t>{37, 61, 73}));
}

TEST(Census, Errors) {
    auto cond = [](auto f) {
        try {
            f();
        } catch (const MathError& e) {
            return e.condition();
        }
        return std::string("none");
    };
    EXPECT_EQ(cond([] { two_torsion_census(PrimeField(11)(3), PrimeField(11)(5)); }), "omega not in field");
    EXPECT_EQ(cond([] { two_torsion_census(PrimeField(13)(1), PrimeField(13)(2)); }), "2-torsion not rational");
}

TEST(Prop2, ReferenceValues) {
    auto ic = prop2_invariants(Rational(0), Rational(0));
    EXPECT_TRUE(igusa::wp_equal(ic, igusa::IgusaClebsch<Rational>{-90, 720, -15480, 144}));
    EXPECT_EQ(ic, (igusa::IgusaClebsch<Rational>{-1440, 184320, -63406080, 150994944}));
    QSqrt3 s(Rational(-1), Rational(1));
    EXPECT_TRUE(igusa::wp_equal(prop2_invariants(s, s), igusa::IgusaClebsch<QSqrt3>{774, 9648, 2763360, 27648}));
}

TEST(Prop2, Symmetries) {
    std::mt19937_64 rng(53);
    QOmega w = omega(QOmega(0));
    int n = 0;
    while (n < 20) {
        QOmega a(random_rational(rng), random_rational(rng)), b(random_rational(rng), random_rational(rng));
        igusa::IgusaClebsch<QOmega> ic;
        try {
            ic = prop2_invariants(a, b);
        } catch (const MathError&) {
            continue;
        }
        EXPECT_TRUE(igusa::wp_equal(ic, prop2_invariants(b, a)));
        EXPECT_TRUE(igusa::wp_equal(ic, prop2_invariants(a * w, b * w * w)));
        EXPECT_TRUE(igusa::wp_equal(ic, prop2_invariants(a * w * w, b * w)));
        ++n;
    }
}

TEST(Prop2, SymbolicFactorization) {
    using R = Polynomial<Q1>;  // Q[a][b]
    R a(Q1::x()), b = R::x();
    auto v = prop2_polynomials(a, b);
    R d = degeneracy_value(a, b);
    R d4 = d.pow(4);
    EXPECT_EQ(v[3], R(36864) * (a.pow(3) + R(1)) * (b.pow(3) + R(1)) * d.pow(12));
    EXPECT_TRUE(prem(v[1], d4).is_zero());
    EXPECT_TRUE(prem(v[2], d4).is_zero());
    auto w = prop2_polynomials(b, a);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(v[i], w[i]);
}

TEST(Prop2, DegenerateAndSingularParameters) {
    try {
        prop2_invariants(Rational(-17) / Rational(12), Rational(-31) / Rational(6));
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.condition(), "3a^2b^2+a^3+b^3-3ab+2=0");
        EXPECT_NE(std::string(e.what()).find("2-isogenous: quotient splits"), std::string::npos);
    }
    EXPECT_THROW(prop2_invariants(Rational(-1), Rational(2)), MathError);
    EXPECT_THROW(prop2_invariants(Rational(2), Rational(-1)), MathError);
}

TEST(Prop2, OrbitPairPartition) {
    auto part = orbit_pair_partition(QOmega(3), QOmega(5));
    std::size_t total = part.excluded.size();
    for (const auto& c : part.classes) total += c.size();
    EXPECT_EQ(total, 144u);
    EXPECT_TRUE(part.excluded.empty());
    EXPECT_EQ(part.classes.size(), 12u);
    for (const auto& c : part.classes) EXPECT_EQ(c.size(), 12u);
}
