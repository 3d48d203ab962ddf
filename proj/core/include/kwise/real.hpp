#ifndef KWISE_REAL_HPP
#define KWISE_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "kwise/rational.hpp"

namespace kwise {

/// High-precision binary float for the transcendental side of the checks
/// (logs, exponentials, the V rate). Everything probabilistic stays Rational;
/// a BigFloat only ever appears on the approximate side of a comparison.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

/// Working precision for newly created BigFloats, in bits. Default 256.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

BigFloat to_real(const Rational& q);
BigFloat to_real(const mpz_class& z);

/// Decimal string with the given number of significant digits.
std::string real_str(const BigFloat& x, unsigned sig_digits = 30);

/// exp(sqrt(log(a) * log(log(a)))), the sub-polynomial rate appearing in the
/// sandwich factor. Requires a > e so that log(log(a)) > 0.
BigFloat v_rate(const BigFloat& a);

/// Relative guard band applied when an exact rational is compared against a
/// transcendental bound: the inequality is granted a (1 +/- guard) margin so
/// rounding of the bound can never flip the verdict.
inline BigFloat guard_band() { return BigFloat("1e-12"); }

} // namespace kwise

#endif
