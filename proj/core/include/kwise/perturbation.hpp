#ifndef KWISE_PERTURBATION_HPP
#define KWISE_PERTURBATION_HPP

#include <optional>

#include "kwise/binomial.hpp"
#include "kwise/extremal.hpp"
#include "kwise/polynomial.hpp"
#include "kwise/real.hpp"

namespace kwise {

/// f has simple roots at {a_i, a_i+1}; g fuses each pair into the double
/// root a_i. Both are nonnegative at every integer and share degree k.
struct PerturbationPair {
    long n = 0;
    RootPairConfig config;
    Polynomial f; // prod (x - a_i)(x - a_i - 1)
    Polynomial g; // prod (x - a_i)^2

    int k() const { return config.k; }
    bool is_zero_of_f(long x) const;
};

/// Expands f and g for the given configuration. Starts must satisfy
/// a_i <= n-2 so every root stays in {0,...,n-1}.
PerturbationPair build_pair(long n, const RootPairConfig& config);

/// E[g(X)] / E[f(X)] under Bin(n,p), exact.
Rational ratio_expectations(const BinomialSpec& spec, const RootPairConfig& config);

/// g(x)/f(x) at an integer x with f(x) != 0. The value is certified to
/// satisfy (g/f)^2 <= 4k in exact arithmetic before it is returned.
Rational pointwise_ratio(const PerturbationPair& pair, long x);

/// Scale/window parameters for the witness search. The log of tau is the
/// authoritative field; tau itself is kept for reporting. Derived K is the
/// smallest integer with floor(log(tau)/6)^((K-1)/2) >= k/Z.
struct WitnessSearchParams {
    int k = 0;
    BigFloat log_tau;
    BigFloat tau;
    long Z = 1;
    long K = 1;

    /// Default parameters: log tau = max(12, log((1/100) V(N/k))) and
    /// Z = ceil(k / tau), keeping every hypothesis of the window claims
    /// satisfied at desk scale.
    static WitnessSearchParams for_problem(const BinomialSpec& spec, int k);
    static WitnessSearchParams from_log_tau(const BigFloat& log_tau, int k);
};

struct Witness {
    long w = 0;
    Rational ratio; // Pr[x] g(x) / (Pr[w] f(w))
};

/// Searches w over I_n restricted to 3Z <= |w - x| <= 9 Z tau^K with
/// f(w) != 0, minimizing Pr[x]g(x) / (Pr[w]f(w)). Empty window: nullopt.
std::optional<Witness> find_witness(const BinomialSpec& spec, const PerturbationPair& pair,
                                    long x, const WitnessSearchParams& params);

/// Oracle mode: the same minimization over all of I_n (w = x allowed).
Witness find_witness_exhaustive(const BinomialSpec& spec, const PerturbationPair& pair, long x);

/// Integer zero counts of f in the four window segments around x.
struct ZeroCensus {
    long r_right = 0; // [x+m, x+tau*m)
    long l_right = 0; // (x, x+m/tau)
    long r_left = 0;  // (x-tau*m, x-m]
    long l_left = 0;  // (x-m/tau, x)
};
ZeroCensus segment_zero_census(const PerturbationPair& pair, long x, long m, const Rational& tau);

/// Checks the explicit segment bound: when the zero census allows it, some
/// integer w in [x+2m, x+3m] (or the mirrored segment) has
/// g(x)/f(w) <= 8 exp(12k/tau + 6R - L log tau).
struct SegmentWitnessCheck {
    bool applicable = false; // hypotheses met and the segment is nonempty
    long R = 0, L = 0;
    std::optional<Rational> min_ratio;
    BigFloat bound;
    bool pass = false;
};
SegmentWitnessCheck segment_witness_check(const PerturbationPair& pair, long x, long m,
                                          const Rational& tau, bool right_side);

/// Pointwise pmf comparison around the mode mu = floor(pn):
/// Pr[mu] <= exp(3 l^2 / 2N) Pr[mu+l] and Pr[mu] <= exp(8 l^2 / N) Pr[mu-l],
/// each checked only when its hypothesis on l holds.
struct ProbShiftReport {
    long ell = 0;
    long mu = 0;
    bool up_applicable = false, up_holds = false;
    bool down_applicable = false, down_holds = false;
    Rational up_ratio, down_ratio; // Pr[mu]/Pr[mu+l], Pr[mu]/Pr[mu-l]
    BigFloat up_bound, down_bound;
};
ProbShiftReport prob_shift_check(const BinomialSpec& spec, long ell);

} // namespace kwise

#endif
