#include "kwise/perturbation.hpp"

#include <stdexcept>

#include "kwise/errors.hpp"

namespace kwise {

bool PerturbationPair::is_zero_of_f(long x) const {
    for (long a : config.starts) {
        if (x == a || x == a + 1) return true;
    }
    return false;
}

PerturbationPair build_pair(long n, const RootPairConfig& config) {
    if (config.starts.back() > n - 2) {
        throw std::invalid_argument("pair start above n-2: root would land outside {0,...,n-1}");
    }
    Polynomial f = Polynomial::constant(Rational(1));
    Polynomial g = Polynomial::constant(Rational(1));
    for (long a : config.starts) {
        const Polynomial xa({Rational(-a), Rational(1)});
        const Polynomial xa1({Rational(-a - 1), Rational(1)});
        f = f * xa * xa1;
        g = g * xa * xa;
    }
    return PerturbationPair{n, config, std::move(f), std::move(g)};
}

Rational ratio_expectations(const BinomialSpec& spec, const RootPairConfig& config) {
    const PerturbationPair pair = build_pair(spec.n, config);
    const Rational ef = expectation(spec, pair.f);
    if (ef.sign() <= 0) {
        throw consistency_error("E[f] must be positive: f >= 0 on the support and f(n) > 0");
    }
    return expectation(spec, pair.g) / ef;
}

Rational pointwise_ratio(const PerturbationPair& pair, long x) {
    const Rational fx = pair.f.at(x);
    if (fx.is_zero()) {
        throw std::domain_error("x is a zero of f; use the witness search there");
    }
    const Rational ratio = pair.g.at(x) / fx;
    if (ratio * ratio > Rational(4L * pair.k())) {
        throw consistency_error("pointwise ratio bound (g/f)^2 <= 4k violated at x=" +
                                std::to_string(x));
    }
    return ratio;
}

WitnessSearchParams WitnessSearchParams::for_problem(const BinomialSpec& spec, int k) {
    BigFloat log_tau(12);
    const Rational N = spec.scale();
    if (N.sign() > 0) {
        const BigFloat nk = to_real(N / Rational(k));
        if (log(nk) > 1) {
            const BigFloat candidate = log(v_rate(nk)) - log(BigFloat(100));
            if (candidate > log_tau) log_tau = candidate;
        }
    }
    return from_log_tau(log_tau, k);
}

WitnessSearchParams WitnessSearchParams::from_log_tau(const BigFloat& log_tau, int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("witness params require even k >= 2");
    if (log_tau < 12) {
        throw std::invalid_argument("witness search requires tau >= e^12");
    }
    WitnessSearchParams params;
    params.k = k;
    params.log_tau = log_tau;
    params.tau = exp(log_tau);

    const BigFloat z_real = ceil(BigFloat(k) * exp(-log_tau));
    params.Z = std::max<long>(1, static_cast<long>(z_real));

    const long base = static_cast<long>(floor(log_tau / 6));
    if (base < 2) throw std::logic_error("floor(log tau / 6) >= 2 must hold for tau >= e^12");

    // smallest K with base^(K-1) >= (k/Z)^2, compared exactly as
    // base^(K-1) * Z^2 >= k^2
    const mpz_class k_sq = mpz_class(k) * mpz_class(k);
    const mpz_class z_sq = mpz_class(params.Z) * mpz_class(params.Z);
    mpz_class power(1);
    long K = 1;
    while (power * z_sq < k_sq) {
        power *= base;
        ++K;
    }
    params.K = K;
    return params;
}

namespace {

Witness minimize_over(const BinomialSpec& spec, const PerturbationPair& pair, long x,
                      const std::vector<long>& candidates) {
    const Rational numer = binomial_pmf(spec, x) * pair.g.at(x);
    Witness best;
    bool have = false;
    for (long w : candidates) {
        const Rational fw = pair.f.at(w);
        if (fw.is_zero()) continue;
        const Rational ratio = numer / (binomial_pmf(spec, w) * fw);
        if (!have || ratio < best.ratio) {
            best = Witness{w, ratio};
            have = true;
        }
    }
    if (!have) throw std::logic_error("no candidate with f(w) != 0");
    return best;
}

} // namespace

std::optional<Witness> find_witness(const BinomialSpec& spec, const PerturbationPair& pair,
                                    long x, const WitnessSearchParams& params) {
    if (x < 0 || x > spec.n) throw std::invalid_argument("x outside {0,...,n}");
    if (params.k != pair.k()) throw std::invalid_argument("params built for a different k");

    const BigFloat outer = exp(log(BigFloat(9) * BigFloat(params.Z)) + BigFloat(params.K) * params.log_tau);
    const long inner = 3 * params.Z;

    std::vector<long> candidates;
    for (long w = 0; w <= spec.n; ++w) {
        const long dist = w >= x ? w - x : x - w;
        if (dist < inner) continue;
        if (BigFloat(dist) > outer) continue;
        if (pair.f.at(w).is_zero()) continue;
        candidates.push_back(w);
    }
    if (candidates.empty()) return std::nullopt;
    return minimize_over(spec, pair, x, candidates);
}

Witness find_witness_exhaustive(const BinomialSpec& spec, const PerturbationPair& pair, long x) {
    if (x < 0 || x > spec.n) throw std::invalid_argument("x outside {0,...,n}");
    std::vector<long> candidates;
    candidates.reserve(static_cast<size_t>(spec.n) + 1);
    for (long w = 0; w <= spec.n; ++w) candidates.push_back(w);
    return minimize_over(spec, pair, x, candidates);
}

ZeroCensus segment_zero_census(const PerturbationPair& pair, long x, long m, const Rational& tau) {
    if (m < 1) throw std::invalid_argument("census requires m >= 1");
    if (tau <= Rational(4)) throw std::invalid_argument("census requires tau > 4");
    ZeroCensus census;
    const Rational xm(x), mf(m);
    for (long z : pair.config.zeros()) {
        const Rational zf(z);
        if (zf >= xm + mf && zf < xm + tau * mf) ++census.r_right;
        if (zf > xm && zf < xm + mf / tau) ++census.l_right;
        if (zf > xm - tau * mf && zf <= xm - mf) ++census.r_left;
        if (zf > xm - mf / tau && zf < xm) ++census.l_left;
    }
    return census;
}

SegmentWitnessCheck segment_witness_check(const PerturbationPair& pair, long x, long m,
                                          const Rational& tau, bool right_side) {
    SegmentWitnessCheck check;
    const ZeroCensus census = segment_zero_census(pair, x, m, tau);
    check.R = right_side ? census.r_right : census.r_left;
    check.L = right_side ? census.l_right : census.l_left;
    if (m < 2 * check.R) return check; // hypothesis m >= 2R not met

    const long lo = right_side ? x + 2 * m : std::max<long>(0, x - 3 * m);
    const long hi = right_side ? x + 3 * m : x - 2 * m;
    if (hi < lo) return check;

    const Rational gx = pair.g.at(x);
    std::optional<Rational> best;
    for (long w = lo; w <= hi; ++w) {
        const Rational fw = pair.f.at(w);
        if (fw.sign() <= 0) continue; // zeros; f is never negative at integers
        const Rational ratio = gx / fw;
        if (!best || ratio < *best) best = ratio;
    }
    if (!best) return check; // every point in the segment is a zero of f

    check.applicable = true;
    check.min_ratio = best;
    const BigFloat tau_f = to_real(tau);
    check.bound = 8 * exp(BigFloat(12 * pair.k()) / tau_f + BigFloat(6 * check.R) -
                          BigFloat(check.L) * log(tau_f));
    check.pass = to_real(*best) <= check.bound * (1 + guard_band());
    return check;
}

ProbShiftReport prob_shift_check(const BinomialSpec& spec, long ell) {
    if (ell < 1 || ell > spec.n) throw std::invalid_argument("shift requires 1 <= l <= n");
    const Rational N = spec.scale();
    if (N.sign() <= 0) throw std::invalid_argument("shift estimates require N = np(1-p)-1 > 0");

    ProbShiftReport rep;
    rep.ell = ell;
    const long mu = static_cast<long>(floor(spec.p * Rational(spec.n)).get_si());
    rep.mu = mu;
    const Rational pmf_mu = binomial_pmf(spec, mu);
    const BigFloat Nf = to_real(N);
    const BigFloat l2(ell * ell);

    if (2 * ell <= spec.n - mu) {
        rep.up_applicable = true;
        rep.up_ratio = pmf_mu / binomial_pmf(spec, mu + ell);
        rep.up_bound = exp(3 * l2 / (2 * Nf));
        rep.up_holds = to_real(rep.up_ratio) <= rep.up_bound * (1 + guard_band());
    }
    if (2 * ell <= mu) {
        rep.down_applicable = true;
        rep.down_ratio = pmf_mu / binomial_pmf(spec, mu - ell);
        rep.down_bound = exp(8 * l2 / Nf);
        rep.down_holds = to_real(rep.down_ratio) <= rep.down_bound * (1 + guard_band());
    }
    return rep;
}

} // namespace kwise
