#include "kwise/binomial.hpp"

#include <stdexcept>

namespace kwise {

BinomialSpec::BinomialSpec(long n_, Rational p_) : n(n_), p(std::move(p_)) {
    if (n < 1) throw std::invalid_argument("binomial spec requires n >= 1");
    if (p <= Rational(0) || p >= Rational(1)) {
        throw std::invalid_argument("binomial spec requires 0 < p < 1, got " + p.str());
    }
}

mpz_class binomial_mpz(unsigned long n, unsigned long j) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, j);
    return out;
}

Rational binomial_coefficient(unsigned long n, unsigned long j) {
    return Rational(binomial_mpz(n, j));
}

Rational binomial_pmf(const BinomialSpec& spec, long x) {
    if (x < 0 || x > spec.n) {
        throw std::out_of_range("binomial_pmf: x outside {0,...,n}");
    }
    return Rational(binomial_mpz(static_cast<unsigned long>(spec.n),
                                 static_cast<unsigned long>(x))) *
           pow(spec.p, x) * pow(spec.q(), spec.n - x);
}

Rational binomial_cdf(const BinomialSpec& spec, long x) {
    if (x < 0) return Rational(0);
    if (x >= spec.n) return Rational(1);
    Rational acc(0);
    for (long i = 0; i <= x; ++i) acc += binomial_pmf(spec, i);
    return acc;
}

Rational factorial_moment(const BinomialSpec& spec, unsigned long j) {
    if (static_cast<long>(j) > spec.n) return Rational(0);
    mpz_class falling(1);
    for (unsigned long i = 0; i < j; ++i) {
        falling *= spec.n - static_cast<long>(i);
    }
    return Rational(falling) * pow(spec.p, static_cast<long>(j));
}

Rational expectation(const BinomialSpec& spec, const Polynomial& poly) {
    Rational acc(0);
    const std::vector<Rational> b = falling_factorial_coeffs(poly);
    for (size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        acc += b[j] * factorial_moment(spec, j);
    }
    return acc;
}

Rational raw_moment(const BinomialSpec& spec, unsigned long j) {
    return expectation(spec, Polynomial::monomial(static_cast<unsigned>(j)));
}

} // namespace kwise
