#include <doctest.h>

#include "kwise/errors.hpp"
#include "kwise/extremal.hpp"
#include "oracles.hpp"

using namespace kwise;

TEST_CASE("distribution type invariants") {
    CHECK_THROWS_AS(MomentDistribution(3, {0, 2}, {Rational(1, 2), Rational(1, 3)}),
                    std::invalid_argument); // does not sum to 1
    CHECK_THROWS_AS(MomentDistribution(3, {2, 0}, {Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument); // not increasing
    CHECK_THROWS_AS(MomentDistribution(3, {0, 4}, {Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument); // outside range
    const MomentDistribution d(3, {0, 2}, {Rational(1, 4), Rational(3, 4)});
    CHECK(d.mass_at(2) == Rational(3, 4));
    CHECK(d.mass_at(1) == Rational(0));
    CHECK(d.moment(1) == Rational(3, 2));
}

TEST_CASE("root pair config invariants") {
    CHECK_THROWS_AS(RootPairConfig(3, {0}), std::invalid_argument);      // odd k
    CHECK_THROWS_AS(RootPairConfig(4, {0, 1}), std::invalid_argument);   // overlap
    CHECK_THROWS_AS(RootPairConfig(4, {2, 0}), std::invalid_argument);   // order
    CHECK_THROWS_AS(RootPairConfig(2, {-1}), std::invalid_argument);     // negative
    CHECK(RootPairConfig(4, {0, 2}).zeros() == std::vector<long>{0, 1, 2, 3});
}

TEST_CASE("primal route on the hand-solved instances") {
    const auto c32 = compute_M_primal(BinomialSpec(3, Rational(1, 2)), 2);
    CHECK(c32.value == Rational(1, 4));
    CHECK(c32.distribution.support == std::vector<long>{1, 3});
    CHECK(c32.distribution.masses == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
    CHECK(c32.degenerate); // two support points, k+1 = 3
    CHECK(verify_certificate(c32).all());

    const auto c42 = compute_M_primal(BinomialSpec(4, Rational(1, 2)), 2);
    CHECK(c42.value == Rational(1, 6));
    CHECK(c42.distribution.support == std::vector<long>{1, 2, 4});
    CHECK(c42.distribution.masses ==
          std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(1, 6)});
    CHECK_FALSE(c42.degenerate);
    CHECK(verify_certificate(c42).all());
}

TEST_CASE("k = n pins the distribution to the binomial") {
    for (long n = 1; n <= 6; ++n) {
        for (const Rational& p : {Rational(1, 2), Rational(1, 3)}) {
            const auto cert = compute_M_primal(BinomialSpec(n, p), static_cast<int>(n));
            CHECK(cert.value == pow(p, n));
            const MomentDistribution expected = MomentDistribution::binomial(BinomialSpec(n, p));
            CHECK(cert.distribution.support == expected.support);
            CHECK(cert.distribution.masses == expected.masses);
            CHECK(verify_certificate(cert).all());
        }
    }
}

TEST_CASE("dual search on the hand-enumerated instance") {
    // n=4, k=2, p=1/2: starts 0,1,2 give ratios 1/4, 1/6, 1/2
    const BinomialSpec spec(4, Rational(1, 2));
    const Rational expected[] = {Rational(1, 4), Rational(1, 6), Rational(1, 2)};
    for (long a = 0; a <= 2; ++a) {
        const Polynomial f = Polynomial::from_integer_roots(std::vector<long>{a, a + 1});
        const Rational ratio = oracles::expectation_direct(spec, f) /
                               (Rational(spec.n - a) * Rational(spec.n - a - 1));
        CHECK(ratio == expected[a]);
    }
    const auto cert = compute_M_dual_search(spec, 2);
    CHECK(cert.value == Rational(1, 6));
    CHECK(cert.dual_zeros == std::vector<long>{1, 2});
    CHECK_FALSE(cert.degenerate);
}

TEST_CASE("dual search ties are reported as degenerate") {
    const auto cert = compute_M_dual_search(BinomialSpec(3, Rational(1, 2)), 2);
    CHECK(cert.value == Rational(1, 4));
    CHECK(cert.degenerate); // starts 0 and 1 both attain 1/4
    CHECK(cert.dual_zeros == std::vector<long>{0, 1}); // lexicographically first
    CHECK(verify_certificate(cert).all());
}

TEST_CASE("dual search agrees with the primal route at figure scale") {
    const BinomialSpec spec(20, Rational(1, 2));
    const auto primal = compute_M_primal(spec, 6);
    const auto dual = compute_M_dual_search(spec, 6);
    CHECK(primal.value == dual.value);
    CHECK(has_adjacent_pair_structure(dual.dual_zeros, 20));
    CHECK(verify_certificate(dual).all());
}

TEST_CASE("dual search validates its inputs and budget") {
    const BinomialSpec spec(10, Rational(1, 2));
    CHECK_THROWS_AS(compute_M_dual_search(spec, 3), std::invalid_argument);
    CHECK_THROWS_AS(compute_M_dual_search(spec, 10), std::invalid_argument);
    DualSearchOptions tiny;
    tiny.max_candidates = 2;
    CHECK_THROWS_AS(compute_M_dual_search(spec, 4, tiny), budget_error);
}

TEST_CASE("dual search is independent of the worker count") {
    const BinomialSpec spec(14, Rational(1, 3));
    DualSearchOptions one, many;
    one.threads = 1;
    many.threads = 7;
    const auto a = compute_M_dual_search(spec, 6, one);
    const auto b = compute_M_dual_search(spec, 6, many);
    CHECK(a.value == b.value);
    CHECK(a.dual_zeros == b.dual_zeros);
    CHECK(a.degenerate == b.degenerate);
}

TEST_CASE("minimum of the AND probability") {
    CHECK(compute_m(BinomialSpec(3, Rational(1, 2)), 2) == Rational(0));
    CHECK(compute_m(BinomialSpec(4, Rational(1, 2)), 2) == Rational(0));
    for (const Rational& p : {Rational(1, 2), Rational(1, 3)}) {
        CHECK(compute_m(BinomialSpec(4, p), 4) == pow(p, 4));
    }
    // witness for m(3,2,1/2) = 0: the distribution on {0,2} matches both moments
    const MomentDistribution witness(3, {0, 2}, {Rational(1, 4), Rational(3, 4)});
    CHECK(oracles::moment_direct(witness, 1) == Rational(3, 2));
    CHECK(oracles::moment_direct(witness, 2) == Rational(3));
}

TEST_CASE("odd reduction") {
    CHECK(odd_reduction(BinomialSpec(4, Rational(1, 2)), 3).value == Rational(1, 8));
    CHECK(odd_reduction(BinomialSpec(5, Rational(1, 3)), 1).value == Rational(1, 3));
    CHECK(odd_reduction(BinomialSpec(3, Rational(1, 2)), 3).value == Rational(1, 8));
    CHECK_THROWS_AS(odd_reduction(BinomialSpec(4, Rational(1, 2)), 2), std::invalid_argument);
    const auto cert = compute_M_primal(BinomialSpec(4, Rational(1, 2)), 3);
    CHECK(cert.odd_reduced);
    CHECK(verify_certificate(cert).all());
}

TEST_CASE("odd identity verified through two independent LP solves") {
    for (long n = 2; n <= 12; ++n) {
        for (int k = 1; k <= std::min<long>(7, n); k += 2) {
            const BinomialSpec spec(n, Rational(1, 3));
            const Rational direct = solve_lp(moment_lp(spec, k, Direction::Maximize)).value;
            Rational reduced = spec.p;
            if (k > 1) {
                reduced *= solve_lp(moment_lp(BinomialSpec(n - 1, spec.p), k - 1,
                                              Direction::Maximize))
                               .value;
            }
            CHECK(direct == reduced);
        }
    }
}

TEST_CASE("vandermonde reconstruction") {
    const BinomialSpec spec(4, Rational(1, 2));
    const auto good = vandermonde_solve(spec, 2, {1, 2, 4});
    REQUIRE(good.has_value());
    CHECK(good->masses == std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(1, 6)});
    CHECK_FALSE(good->has_zero_mass);

    CHECK_FALSE(vandermonde_solve(spec, 2, {0, 1, 4}).has_value()); // mass at 0 is -1/4

    const BinomialSpec full(3, Rational(2, 5));
    const auto bin = vandermonde_solve(full, 3, {0, 1, 2, 3});
    REQUIRE(bin.has_value());
    const MomentDistribution expected = MomentDistribution::binomial(full);
    CHECK(bin->masses == expected.masses);

    CHECK_THROWS_AS(vandermonde_solve(spec, 2, {1, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_solve(spec, 2, {1, 4}), std::invalid_argument);
}

TEST_CASE("certificate verification catches tampering") {
    auto cert = compute_M_primal(BinomialSpec(4, Rational(1, 2)), 2);
    REQUIRE(verify_certificate(cert).all());
    std::swap(cert.distribution.masses[0], cert.distribution.masses[1]); // 1/3 <-> 1/2
    const CertificateChecks checks = verify_certificate(cert);
    CHECK_FALSE(checks.moments_match);
    CHECK_FALSE(checks.all());
}

TEST_CASE("certificate verification at figure-2 parameters") {
    const auto cert = compute_M_primal(BinomialSpec(20, Rational(3, 10)), 8);
    CHECK(verify_certificate(cert).all());
    const auto dual = compute_M_dual_search(BinomialSpec(20, Rational(3, 10)), 8);
    CHECK(dual.value == cert.value);
    CHECK(has_adjacent_pair_structure(dual.dual_zeros, 20));
}

TEST_CASE("sweep invariants: dominance and monotonicity in k") {
    for (long n = 3; n <= 11; ++n) {
        for (const Rational& p : {Rational(1, 2), Rational(3, 10)}) {
            Rational previous;
            bool have_previous = false;
            for (int k = 2; k <= std::min<long>(8, n - 1); k += 2) {
                const auto cert = compute_M_primal(BinomialSpec(n, p), k);
                CHECK(cert.value >= pow(p, n));
                if (have_previous) CHECK(cert.value <= previous);
                previous = cert.value;
                have_previous = true;
            }
        }
    }
}

TEST_CASE("non-degenerate optima are unique under objective tie-breaking") {
    const BinomialSpec spec(4, Rational(1, 2));
    const auto cert = compute_M_primal(spec, 2);
    REQUIRE_FALSE(cert.degenerate);

    // pin the optimal value, then optimize two different secondary objectives;
    // a unique optimum must come back unchanged
    for (const bool upward : {true, false}) {
        StandardFormLP lp = moment_lp(spec, 2, Direction::Maximize);
        std::vector<Rational> pin(lp.num_vars(), Rational(0));
        pin[static_cast<size_t>(spec.n)] = Rational(1);
        lp.rows.push_back(pin);
        lp.rhs.push_back(cert.value);
        lp.senses.push_back(RowSense::Eq);
        for (size_t i = 0; i < lp.num_vars(); ++i) {
            lp.objective[i] = Rational(upward ? static_cast<long>(i)
                                              : static_cast<long>(lp.num_vars() - i));
        }
        const LPSolution sol = solve_lp(lp);
        REQUIRE(sol.status == SolveStatus::Optimal);
        for (long i = 0; i <= spec.n; ++i) {
            CHECK(sol.primal[static_cast<size_t>(i)] == cert.distribution.mass_at(i));
        }
    }
}

TEST_CASE("pair polynomials are nonnegative at every integer of the range") {
    const BinomialSpec spec(12, Rational(1, 2));
    const auto cert = compute_M_dual_search(spec, 4);
    for (long x = 0; x <= spec.n; ++x) {
        CHECK(cert.dual_poly.at(x).sign() >= 0);
    }
    CHECK(cert.dual_poly(Rational(spec.n)) == Rational(1));
}
