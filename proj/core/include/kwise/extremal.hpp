#ifndef KWISE_EXTREMAL_HPP
#define KWISE_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kwise/binomial.hpp"
#include "kwise/lp.hpp"
#include "kwise/polynomial.hpp"

namespace kwise {

/// Finitely supported distribution on {0,...,n}: strictly increasing support
/// points with positive masses summing to one.
struct MomentDistribution {
    long n = 0;
    std::vector<long> support;
    std::vector<Rational> masses;

    MomentDistribution(long n, std::vector<long> support, std::vector<Rational> masses);

    Rational mass_at(long x) const;
    /// Raw moment sum over the support.
    Rational moment(unsigned long j) const;
    static MomentDistribution binomial(const BinomialSpec& spec);
};

/// Starts a_1 < ... < a_{k/2} of disjoint adjacent root pairs {a_i, a_i+1}.
struct RootPairConfig {
    int k = 0;
    std::vector<long> starts;

    RootPairConfig(int k, std::vector<long> starts);

    /// All 2*(k/2) roots, sorted.
    std::vector<long> zeros() const;
};

struct CertificateChecks {
    bool moments_match = false;
    bool dual_feasible = false;
    bool zero_gap = false;
    bool support_in_zeros = false;
    bool all() const { return moments_match && dual_feasible && zero_gap && support_in_zeros; }
};

/// Primal distribution and dual polynomial with zero duality gap: together
/// they prove the exact value of M(n,k,p).
struct ExtremalCertificate {
    BinomialSpec spec;
    int k;
    Rational value;
    MomentDistribution distribution;
    Polynomial dual_poly;           // normalized so dual_poly(n) == 1
    std::vector<long> dual_zeros;   // integer zeros in {0,...,n-1}
    bool degenerate = false;        // optimum supported on fewer than k+1 points
                                    // or attained by several root configurations
    bool odd_reduced = false;       // value obtained through the odd-k identity
};

struct DualSearchOptions {
    std::uint64_t max_candidates = 10'000'000;
    unsigned threads = 0; // 0: KWISE_THREADS env or hardware concurrency
};

/// M(n,k,p) through the moment LP. Odd k routes through odd_reduction;
/// k == 0 is the constraint-free base case with M = 1.
ExtremalCertificate compute_M_primal(const BinomialSpec& spec, int k);

/// M(n,k,p) through exhaustive search over adjacent-root-pair polynomials,
/// independent of the LP route. Requires even k with 2 <= k <= n-1. The
/// search enumerates configurations in lexicographic order of their starts
/// and may be partitioned across threads without changing the result.
ExtremalCertificate compute_M_dual_search(const BinomialSpec& spec, int k,
                                          const DualSearchOptions& options = {});

/// m(n,k,p), the minimal all-ones probability.
Rational compute_m(const BinomialSpec& spec, int k);

/// Odd k: M(n,k,p) = p * M(n-1,k-1,p). Also solves the moment LP at (n,k)
/// directly for the certificate artifacts and insists the two values agree.
ExtremalCertificate odd_reduction(const BinomialSpec& spec, int k);

struct VandermondeSolution {
    std::vector<long> support;     // sorted
    std::vector<Rational> masses;  // raw solution; may contain zeros
    bool has_zero_mass = false;

    MomentDistribution to_distribution(long n) const;
};

/// Unique solution of the k+1 equations (normalization plus k moments) on
/// k+1 distinct support points. Returns nullopt when some mass is negative;
/// zero masses are allowed and flagged.
std::optional<VandermondeSolution> vandermonde_solve(const BinomialSpec& spec, int k,
                                                     std::vector<long> support);

/// Exact re-derivation of every certificate claim.
CertificateChecks verify_certificate(const ExtremalCertificate& cert);

/// True when `zeros` consists of disjoint adjacent integer pairs
/// {a, a+1} inside {0,...,n-1}.
bool has_adjacent_pair_structure(const std::vector<long>& zeros, long n);

} // namespace kwise

#endif
