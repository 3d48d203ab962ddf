#include "kwise/real.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace kwise {

namespace {

std::atomic<unsigned> g_precision_bits{256};

unsigned digits10_for_bits(unsigned bits) {
    // ceil(bits * log10(2)) plus one spare digit
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

struct PrecisionInit {
    PrecisionInit() { BigFloat::default_precision(digits10_for_bits(256)); }
};
const PrecisionInit g_precision_init{};

} // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 24) throw std::invalid_argument("precision below 24 bits");
    g_precision_bits.store(bits);
    BigFloat::default_precision(digits10_for_bits(bits));
}

unsigned precision_bits() {
    return g_precision_bits.load();
}

BigFloat to_real(const Rational& q) {
    return BigFloat(q.raw().get_mpq_t());
}

BigFloat to_real(const mpz_class& z) {
    return BigFloat(z.get_mpz_t());
}

std::string real_str(const BigFloat& x, unsigned sig_digits) {
    return x.str(static_cast<std::streamsize>(sig_digits));
}

BigFloat v_rate(const BigFloat& a) {
    BigFloat la = log(a);
    if (la <= 1) throw std::domain_error("v_rate requires a > e");
    return exp(sqrt(la * log(la)));
}

} // namespace kwise
