#include <doctest.h>

#include "kwise/polynomial.hpp"
#include "kwise/rng.hpp"

using kwise::Polynomial;
using kwise::Rational;

namespace {

Polynomial random_poly(kwise::SplitMix64& rng, int max_degree) {
    const long degree = rng.range(0, max_degree);
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    for (auto& c : coeffs) c = Rational(rng.range(-9, 9));
    return Polynomial(std::move(coeffs));
}

} // namespace

TEST_CASE("evaluation") {
    const Polynomial p({Rational(-1), Rational(0), Rational(1)}); // x^2 - 1
    CHECK(p(Rational(3)) == Rational(8));
    CHECK(Polynomial()(Rational(17)) == Rational(0));
    const Polynomial q({Rational(2), Rational(-3), Rational(1)}); // (x-1)(x-2)
    CHECK(q(Rational(4)) == Rational(6));
    CHECK(q(Rational(1, 2)) == Rational(3, 4));
}

TEST_CASE("degree bookkeeping trims trailing zeros") {
    const Polynomial p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial::monomial(3).degree() == 3);
    CHECK((Polynomial::monomial(2) - Polynomial::monomial(2)).is_zero());
}

TEST_CASE("finite differences") {
    const Polynomial x2 = Polynomial::monomial(2);
    CHECK(kwise::finite_difference(x2) == Polynomial({Rational(1), Rational(2)}));
    CHECK(kwise::finite_difference(x2, 0) == x2);
    const Polynomial x3 = Polynomial::monomial(3);
    CHECK(kwise::finite_difference(x3, 2) == Polynomial({Rational(6), Rational(6)}));
    // degree drops by exactly one per application
    Polynomial p = Polynomial::monomial(5);
    for (int expected = 4; expected >= 0; --expected) {
        p = kwise::finite_difference(p);
        CHECK(p.degree() == expected);
    }
    CHECK(kwise::finite_difference(p).is_zero());
}

TEST_CASE("finite difference is linear") {
    kwise::SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = random_poly(rng, 8);
        const Polynomial q = random_poly(rng, 8);
        const Rational a(rng.range(-5, 5)), b(rng.range(-5, 5));
        CHECK(kwise::finite_difference(a * p + b * q) ==
              a * kwise::finite_difference(p) + b * kwise::finite_difference(q));
    }
}

TEST_CASE("choose_poly matches the defining product") {
    CHECK(kwise::choose_poly(0) == Polynomial::constant(Rational(1)));
    // C(x,2) = x(x-1)/2
    const Polynomial c2 = kwise::choose_poly(2);
    CHECK(c2(Rational(4)) == Rational(6));
    CHECK(c2(Rational(1)) == Rational(0));
    CHECK(c2(Rational(1, 2)) == Rational(-1, 8));
    // C(x-M, d) shifts the roots to M..M+d-1
    const Polynomial shifted = kwise::choose_poly(2, Rational(4));
    CHECK(shifted(Rational(4)) == Rational(0));
    CHECK(shifted(Rational(5)) == Rational(0));
    CHECK(shifted(Rational(6)) == Rational(1));
}

TEST_CASE("falling factorial coefficients reconstruct the polynomial") {
    kwise::SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = random_poly(rng, 10);
        const std::vector<Rational> b = kwise::falling_factorial_coeffs(p);
        Polynomial rebuilt;
        Polynomial basis = Polynomial::constant(Rational(1));
        for (size_t j = 0; j < b.size(); ++j) {
            rebuilt += b[j] * basis;
            basis = basis * Polynomial({Rational(-static_cast<long>(j)), Rational(1)});
        }
        CHECK(rebuilt == p);
    }
}

TEST_CASE("taylor shift") {
    const Polynomial q({Rational(2), Rational(-3), Rational(1)}); // (x-1)(x-2)
    const Polynomial s = q.shifted(Rational(1));                  // x(x-1)
    CHECK(s(Rational(0)) == Rational(0));
    CHECK(s(Rational(1)) == Rational(0));
    CHECK(s(Rational(3)) == Rational(6));
}

TEST_CASE("from_roots expands monic products") {
    const std::vector<long> roots{1, 2};
    const Polynomial p = Polynomial::from_integer_roots(roots);
    CHECK(p == Polynomial({Rational(2), Rational(-3), Rational(1)}));
    CHECK(p.leading() == Rational(1));
    CHECK(Polynomial::from_integer_roots(std::vector<long>{}) ==
          Polynomial::constant(Rational(1)));
}
