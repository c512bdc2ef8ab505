#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "splitjac/algebra.hpp"

namespace sjtest {

using namespace splitjac;

// primes = 1 mod 3 used for Hesse arithmetic
inline const std::vector<std::uint64_t> kPrimes1mod3{13, 31, 37, 61, 73, 1009};

inline Rational random_rational(std::mt19937_64& rng, long bound = 20) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Rational(num(rng)) / Rational(den(rng));
}

inline Fp random_fp(std::uint64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    return Fp(static_cast<std::int64_t>(d(rng)), p);
}

template <class Gen>
auto random_poly(std::size_t deg, Gen&& gen) {
    using T = decltype(gen());
    std::vector<T> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(gen());
    return Polynomial<T>(std::move(c));
}

// Q[a][b][c]: a innermost
using Q1 = Polynomial<Rational>;
using Q2 = Polynomial<Q1>;
using Q3 = Polynomial<Q2>;

struct Symbols {
    Q3 a{Q2(Q1::x())};
    Q3 b{Q2::x()};
    Q3 c{Q3::x()};
};

// specialize an element of Q[a][b][c]
inline Rational eval3(const Q3& f, const Rational& a, const Rational& b, const Rational& c) {
    Q1 g = f(Q2(Q1(c)))(Q1(b));
    return g(a);
}

}  // namespace sjtest
