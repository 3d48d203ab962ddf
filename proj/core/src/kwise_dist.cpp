#include "kwise/kwise_dist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kwise/binomial.hpp"
#include "kwise/rng.hpp"

namespace kwise {

SymmetricJoint lift_to_joint(MomentDistribution dist) {
    const long n = dist.n;
    return SymmetricJoint{n, std::move(dist)};
}

Rational subset_all_ones_prob(const SymmetricJoint& joint, long t) {
    if (t < 0 || t > joint.n) throw std::invalid_argument("subset size outside {0,...,n}");
    if (t == 0) return Rational(1);
    Rational acc(0);
    const auto& dist = joint.count_dist;
    for (size_t i = 0; i < dist.support.size(); ++i) {
        const long w = dist.support[i];
        if (w < t) continue;
        // P(S = w) * C(n-t, w-t) / C(n, w): of the C(n,w) equally likely
        // weight-w strings, C(n-t, w-t) have ones on the fixed t-subset.
        acc += dist.masses[i] *
               binomial_coefficient(static_cast<unsigned long>(joint.n - t),
                                    static_cast<unsigned long>(w - t)) /
               binomial_coefficient(static_cast<unsigned long>(joint.n),
                                    static_cast<unsigned long>(w));
    }
    return acc;
}

bool KwiseReport::all_pass() const {
    if (!moments_match) return false;
    return std::all_of(subset_checks.begin(), subset_checks.end(),
                       [](const KwiseCheck& c) { return c.pass; });
}

KwiseReport verify_kwise(const SymmetricJoint& joint, int k, const Rational& p) {
    KwiseReport rep;
    for (long t = 1; t <= k; ++t) {
        KwiseCheck check;
        check.t = t;
        check.expected = pow(p, t);
        check.actual = subset_all_ones_prob(joint, t);
        check.pass = check.actual == check.expected;
        rep.subset_checks.push_back(std::move(check));
    }
    const BinomialSpec spec(joint.n, p);
    rep.moments_match = true;
    for (int i = 1; i <= k && rep.moments_match; ++i) {
        rep.moments_match = joint.count_dist.moment(static_cast<unsigned long>(i)) ==
                            raw_moment(spec, static_cast<unsigned long>(i));
    }
    return rep;
}

std::vector<long> sample_combination(SplitMix64& rng, long u, long r) {
    std::vector<long> picked;
    picked.reserve(static_cast<size_t>(r));
    for (long j = u - r; j < u; ++j) {
        const long t = static_cast<long>(rng.bounded(static_cast<std::uint64_t>(j) + 1));
        if (std::find(picked.begin(), picked.end(), t) != picked.end()) {
            picked.push_back(j);
        } else {
            picked.push_back(t);
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<std::string> sample(const SymmetricJoint& joint, std::uint64_t seed, size_t count) {
    const auto& dist = joint.count_dist;
    const size_t points = dist.support.size();

    // thresholds floor(cum_i * 2^64); a 64-bit draw u selects the first
    // support point whose threshold exceeds u
    mpz_class two64(1);
    two64 <<= 64;
    std::vector<std::uint64_t> thresholds(points);
    Rational cum(0);
    for (size_t i = 0; i < points; ++i) {
        cum += dist.masses[i];
        if (i + 1 == points) {
            thresholds[i] = ~std::uint64_t{0}; // cum == 1; the last bucket absorbs everything
        } else {
            // scaled < 2^64, so the unsigned-long conversion is exact on LP64
            const mpz_class scaled = floor(cum * Rational(two64));
            thresholds[i] = static_cast<std::uint64_t>(scaled.get_ui());
        }
    }

    SplitMix64 rng(seed);
    std::vector<std::string> out;
    out.reserve(count);
    std::vector<long> positions(static_cast<size_t>(joint.n));
    for (size_t s = 0; s < count; ++s) {
        const std::uint64_t u = rng.next();
        size_t pick = points - 1;
        for (size_t i = 0; i < points; ++i) {
            if (u < thresholds[i]) { pick = i; break; }
        }
        const long w = dist.support[pick];

        std::iota(positions.begin(), positions.end(), 0L);
        std::string bits(static_cast<size_t>(joint.n), '0');
        for (long i = 0; i < w; ++i) {
            const std::uint64_t j = rng.bounded(static_cast<std::uint64_t>(joint.n - i));
            std::swap(positions[static_cast<size_t>(i)],
                      positions[static_cast<size_t>(i) + j]);
            bits[static_cast<size_t>(positions[static_cast<size_t>(i)])] = '1';
        }
        out.push_back(std::move(bits));
    }
    return out;
}

} // namespace kwise
