#ifndef KWISE_RELAXED_HPP
#define KWISE_RELAXED_HPP

#include <optional>
#include <string>

#include "kwise/binomial.hpp"
#include "kwise/real.hpp"

namespace kwise {

/// The relaxed maximum, where the count variable may take any real value in
/// [0, n]: exactly p^n / P(Bin(n, 1-p) <= k/2). Even k only.
Rational tilde_M(const BinomialSpec& spec, int k);

/// Two-sided log-domain estimate of tilde_M against
/// sqrt(k) * (pk / (2e(1-p)n))^{k/2}, with an additive slack in natural-log
/// units standing in for the estimate's unspecified constants.
struct TildeEstimateReport {
    bool in_regime = false;    // k <= n(1-p)
    BigFloat log_gap;          // log tilde_M minus the log of the comparison term
    BigFloat upper_allowance;  // k^2 / (2n)
    bool lower_ok = false;     // -slack <= log_gap
    bool upper_ok = false;     // log_gap <= upper_allowance + slack
};
TildeEstimateReport check_tilde_estimates(const BinomialSpec& spec, int k,
                                          const BigFloat& slack = BigFloat(5));

enum class SandwichRegime { Log, Poly, Linear, None, NotApplicable };
std::string regime_name(SandwichRegime r);

/// Exact M and tilde_M side by side, with the measured sandwich factor.
struct SandwichReport {
    long n = 0;
    int k = 0;
    Rational p;
    Rational M;
    Rational M_tilde;
    Rational ratio;                         // M_tilde / M, always >= 1
    std::optional<BigFloat> v_value;        // V(N/k) when N/k > e
    std::optional<BigFloat> normalized;     // ratio / (k * exp(k / V(N/k)))
    SandwichRegime regime = SandwichRegime::NotApplicable;
    bool degenerate = false;
};
SandwichReport sandwich_report(const BinomialSpec& spec, int k);

} // namespace kwise

#endif
