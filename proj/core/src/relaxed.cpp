#include "kwise/relaxed.hpp"

#include <stdexcept>

#include "kwise/errors.hpp"
#include "kwise/extremal.hpp"

namespace kwise {

Rational tilde_M(const BinomialSpec& spec, int k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("tilde_M has a closed form only for even k >= 2");
    }
    const BinomialSpec flipped(spec.n, spec.q());
    const Rational denom = binomial_cdf(flipped, k / 2);
    return pow(spec.p, spec.n) / denom;
}

TildeEstimateReport check_tilde_estimates(const BinomialSpec& spec, int k,
                                          const BigFloat& slack) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("tilde_M estimate check requires even k >= 2");
    }
    TildeEstimateReport rep;
    rep.in_regime = Rational(k) <= Rational(spec.n) * spec.q();
    if (!rep.in_regime) return rep;

    const BigFloat kf(k), nf(spec.n);
    const BigFloat pf = to_real(spec.p);
    const BigFloat log_tilde = log(to_real(tilde_M(spec, k)));
    const BigFloat comparison =
        kf / 2 * log(pf * kf / (2 * boost::multiprecision::exp(BigFloat(1)) * (1 - pf) * nf)) +
        log(kf) / 2;
    rep.log_gap = log_tilde - comparison;
    rep.upper_allowance = kf * kf / (2 * nf);
    rep.lower_ok = rep.log_gap >= -slack;
    rep.upper_ok = rep.log_gap <= rep.upper_allowance + slack;
    return rep;
}

std::string regime_name(SandwichRegime r) {
    switch (r) {
        case SandwichRegime::Log: return "log";
        case SandwichRegime::Poly: return "poly";
        case SandwichRegime::Linear: return "linear";
        case SandwichRegime::None: return "none";
        case SandwichRegime::NotApplicable: return "na";
    }
    return "na";
}

SandwichReport sandwich_report(const BinomialSpec& spec, int k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("sandwich report requires even k >= 2");
    }
    SandwichReport rep;
    rep.n = spec.n;
    rep.k = k;
    rep.p = spec.p;
    rep.M_tilde = tilde_M(spec, k);

    const ExtremalCertificate cert = compute_M_primal(spec, k);
    rep.M = cert.value;
    rep.degenerate = cert.degenerate;
    if (rep.M.sign() <= 0) throw consistency_error("M must be positive (Bin(n,p) is feasible)");
    rep.ratio = rep.M_tilde / rep.M;

    const Rational N = spec.scale();
    if (N.sign() > 0) {
        const BigFloat nk = to_real(N / Rational(k));
        if (log(nk) > 1) {
            rep.v_value = v_rate(nk);
            rep.normalized = to_real(rep.ratio) / (BigFloat(k) * exp(BigFloat(k) / *rep.v_value));
        }
        // Reference exponents for the regime tag: m = 2 for the log case,
        // beta = 1/2 for the polynomial case.
        const BigFloat logN = log(to_real(N));
        if (logN > 0 && BigFloat(k) <= logN * logN) {
            rep.regime = SandwichRegime::Log;
        } else if (Rational(k) * Rational(k) <= N) {
            rep.regime = SandwichRegime::Poly;
        } else if (Rational(k) <= N) {
            rep.regime = SandwichRegime::Linear;
        } else {
            rep.regime = SandwichRegime::None;
        }
    } else {
        rep.regime = SandwichRegime::NotApplicable;
    }
    return rep;
}

} // namespace kwise
