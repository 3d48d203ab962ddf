#ifndef KWISE_BINOMIAL_HPP
#define KWISE_BINOMIAL_HPP

#include "kwise/polynomial.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// Reference measure Bin(n, p) with p an exact rational in (0,1).
struct BinomialSpec {
    long n;
    Rational p;

    BinomialSpec(long n_, Rational p_);

    /// The scale parameter N = n p (1-p) - 1 (roughly the variance).
    /// Recomputed on each call; may be <= 0 for small n.
    Rational scale() const { return Rational(n) * p * (Rational(1) - p) - Rational(1); }

    Rational q() const { return Rational(1) - p; }
};

/// C(n, j); zero when j > n.
Rational binomial_coefficient(unsigned long n, unsigned long j);
mpz_class binomial_mpz(unsigned long n, unsigned long j);

/// Exact P(X = x) for X ~ Bin(n, p). Requires 0 <= x <= n.
Rational binomial_pmf(const BinomialSpec& spec, long x);

/// Exact P(X <= x); 0 below the support, 1 above it.
Rational binomial_cdf(const BinomialSpec& spec, long x);

/// E[X(X-1)...(X-j+1)] = n(n-1)...(n-j+1) p^j; zero for j > n.
Rational factorial_moment(const BinomialSpec& spec, unsigned long j);

/// Exact E[P(X)] via the falling-factorial basis: O(deg^2) scalar work,
/// independent of n.
Rational expectation(const BinomialSpec& spec, const Polynomial& poly);

/// Raw moment E[X^j].
Rational raw_moment(const BinomialSpec& spec, unsigned long j);

} // namespace kwise

#endif
