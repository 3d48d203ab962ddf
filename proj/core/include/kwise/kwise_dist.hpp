#ifndef KWISE_KWISE_DIST_HPP
#define KWISE_KWISE_DIST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kwise/extremal.hpp"

namespace kwise {

/// Exchangeable joint law on n bits, represented through the distribution of
/// the count of ones: every bitstring of weight w has probability
/// P(S = w) / C(n, w). The 2^n vector is never materialized.
struct SymmetricJoint {
    long n = 0;
    MomentDistribution count_dist;
};

SymmetricJoint lift_to_joint(MomentDistribution dist);

/// Probability that a fixed t-subset of bits is all ones; by exchangeability
/// the subset's identity is irrelevant. Exact.
Rational subset_all_ones_prob(const SymmetricJoint& joint, long t);

struct KwiseCheck {
    long t = 0;
    Rational expected; // p^t
    Rational actual;
    bool pass = false;
};
struct KwiseReport {
    std::vector<KwiseCheck> subset_checks; // t = 1..k
    bool moments_match = false;            // E S^i == Bin moments, i = 1..k
    bool all_pass() const;
};
/// Exact k-wise independence verification against marginal p.
KwiseReport verify_kwise(const SymmetricJoint& joint, int k, const Rational& p);

/// Deterministic sampling: the count is drawn by inverse cdf against exact
/// rational thresholds scaled to 2^64 (bias at most 2^-64 per draw), then a
/// uniform subset of that weight is chosen by seeded Fisher-Yates. Identical
/// output for identical seeds on every platform.
std::vector<std::string> sample(const SymmetricJoint& joint, std::uint64_t seed, size_t count);

} // namespace kwise

#endif
