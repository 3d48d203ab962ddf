#ifndef KWISE_SUITES_HPP
#define KWISE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kwise/rational.hpp"

namespace kwise {

struct CheckResult {
    std::string check;
    std::string params;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    size_t failures() const;
    /// First detail recorded under the given check name, empty if none.
    std::string detail_of(const std::string& check) const;
};

/// Parameter grid shared by the sweep-style suites.
struct SweepOptions {
    long max_n = 14;
    std::vector<int> ks = {2, 4, 6, 8};
    std::vector<Rational> ps = {Rational(1, 2), Rational(1, 3), Rational(3, 10),
                                Rational(2, 3)};
    int configs_per_cell = 200;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

/// Primal LP value vs dual root-pair search, certificate verification, the
/// pair structure of the dual optimum, monotonicity in k, M >= p^n, and the
/// odd-k reduction identity.
SuiteReport duality_suite(const SweepOptions& options);

/// M <= tilde_M, tilde_M >= p^n, tilde_M nonincreasing in k; records the
/// extreme ratios over the sweep, plus log-domain estimate spot checks.
SuiteReport sandwich_suite(const SweepOptions& options);

/// Lifted extremal distributions: exactly k-wise independent, AND probability
/// equal to M, and not (k+1)-wise unless M(n,k,p) = M(n,k+1,p).
SuiteReport kwise_suite(const SweepOptions& options);

/// Orthogonality, leading coefficient, norm identity, the monic sup lower
/// bound on random integer-root polynomials, and the bound-chain comparison.
SuiteReport chebyshev_suite(long max_m, int max_d, long monic_max_m = 30,
                            int monics_per_cell = 500, std::uint64_t seed = 1);

/// The pointwise ratio bound, witness search (windowed vs exhaustive), the
/// explicit segment bound, and the measured expectation-ratio statistics.
SuiteReport perturbation_suite(const SweepOptions& options);

/// Mode-shift pmf estimates for every admissible shift.
SuiteReport probshift_suite(const std::vector<long>& ns, const std::vector<Rational>& ps);

/// Falling-factorial expectation against direct summation on random cases.
SuiteReport expectation_suite(int cases, std::uint64_t seed = 1);

} // namespace kwise

#endif
