#include "kwise/suites.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "kwise/binomial.hpp"
#include "kwise/chebyshev.hpp"
#include "kwise/extremal.hpp"
#include "kwise/kwise_dist.hpp"
#include "kwise/perturbation.hpp"
#include "kwise/real.hpp"
#include "kwise/relaxed.hpp"
#include "kwise/rng.hpp"

namespace kwise {

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

size_t SuiteReport::failures() const {
    return static_cast<size_t>(std::count_if(checks.begin(), checks.end(),
                                             [](const CheckResult& c) { return !c.pass; }));
}

std::string SuiteReport::detail_of(const std::string& check) const {
    for (const auto& c : checks) {
        if (c.check == check) return c.detail;
    }
    return {};
}

namespace {

std::string cell(long n, int k, const Rational& p) {
    return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",p=" + p.str();
}

std::string cell(long n, const Rational& p) {
    return "n=" + std::to_string(n) + ",p=" + p.str();
}

void add(SuiteReport& rep, std::string check, std::string params, bool pass,
         std::string detail = {}) {
    rep.checks.push_back(CheckResult{std::move(check), std::move(params), pass,
                                     std::move(detail)});
}

// Direct-summation expectation: the independent route against which the
// falling-factorial path is compared.
Rational expectation_by_summation(const BinomialSpec& spec, const Polynomial& poly) {
    Rational acc(0);
    for (long x = 0; x <= spec.n; ++x) {
        acc += binomial_pmf(spec, x) * poly.at(x);
    }
    return acc;
}

RootPairConfig random_config(SplitMix64& rng, long n, int k) {
    const long r = k / 2;
    const std::vector<long> comb = sample_combination(rng, n - r, r);
    std::vector<long> starts(comb.size());
    for (size_t i = 0; i < comb.size(); ++i) starts[i] = comb[i] + static_cast<long>(i);
    return RootPairConfig(k, std::move(starts));
}

} // namespace

SuiteReport duality_suite(const SweepOptions& options) {
    SuiteReport rep;
    rep.suite = "duality";
    DualSearchOptions search;
    search.threads = options.threads;

    for (const Rational& p : options.ps) {
        for (long n = 2; n <= options.max_n; ++n) {
            const BinomialSpec spec(n, p);
            std::map<int, Rational> values;
            for (int k : options.ks) {
                if (k % 2 != 0 || k > n - 1) continue;
                const auto primal = compute_M_primal(spec, k);
                const auto dual = compute_M_dual_search(spec, k, search);
                add(rep, "primal_equals_dual", cell(n, k, p), primal.value == dual.value,
                    primal.value.str() + " vs " + dual.value.str());
                add(rep, "primal_certificate", cell(n, k, p), verify_certificate(primal).all());
                add(rep, "dual_certificate", cell(n, k, p), verify_certificate(dual).all());
                add(rep, "dual_zero_pairs", cell(n, k, p),
                    has_adjacent_pair_structure(dual.dual_zeros, n));
                add(rep, "M_at_least_p_pow_n", cell(n, k, p),
                    primal.value >= pow(p, n));
                values.emplace(k, primal.value);
            }
            for (const auto& [k, value] : values) {
                auto higher = values.find(k + 2);
                if (higher == values.end()) continue;
                add(rep, "monotone_in_k", cell(n, k, p), higher->second <= value,
                    higher->second.str() + " <= " + value.str());
            }
            // odd identity; odd_reduction itself recomputes both sides and
            // throws on disagreement
            for (int k = 1; k <= std::min<long>(7, n); k += 2) {
                if (n > 12) break;
                const auto cert = odd_reduction(spec, k);
                add(rep, "odd_reduction", cell(n, k, p), verify_certificate(cert).all(),
                    cert.value.str());
            }
        }
    }
    return rep;
}

SuiteReport sandwich_suite(const SweepOptions& options) {
    SuiteReport rep;
    rep.suite = "sandwich";

    std::optional<Rational> max_ratio;          // max of tilde_M / M
    std::optional<Rational> max_ratio_per_k;    // max of tilde_M / (k M)
    for (const Rational& p : options.ps) {
        for (long n = 2; n <= options.max_n; ++n) {
            const BinomialSpec spec(n, p);
            std::optional<Rational> previous_tilde;
            for (int k : options.ks) {
                if (k % 2 != 0 || k > n - 1) continue;
                const SandwichReport sw = sandwich_report(spec, k);
                add(rep, "M_le_tilde_M", cell(n, k, p), sw.M <= sw.M_tilde,
                    sw.M.str() + " <= " + sw.M_tilde.str());
                add(rep, "tilde_M_ge_p_pow_n", cell(n, k, p), sw.M_tilde >= pow(p, n));
                if (previous_tilde) {
                    add(rep, "tilde_M_nonincreasing_in_k", cell(n, k, p),
                        sw.M_tilde <= *previous_tilde);
                }
                previous_tilde = sw.M_tilde;
                if (!max_ratio || sw.ratio > *max_ratio) max_ratio = sw.ratio;
                const Rational per_k = sw.ratio / Rational(k);
                if (!max_ratio_per_k || per_k > *max_ratio_per_k) max_ratio_per_k = per_k;
            }
        }
    }
    if (max_ratio) {
        add(rep, "max_ratio", "sweep", true, max_ratio->str());
        add(rep, "max_ratio_per_k", "sweep", true, max_ratio_per_k->str());
    }

    // log-domain estimate spot checks, inside the k <= n(1-p) regime
    const struct { long n; int k; Rational p; } estimate_cells[] = {
        {100, 4, Rational(1, 2)},
        {200, 2, Rational(1, 3)},
        {40, 8, Rational(1, 2)},
        {200, 8, Rational(3, 10)},
    };
    for (const auto& c : estimate_cells) {
        const BinomialSpec spec(c.n, c.p);
        const TildeEstimateReport est = check_tilde_estimates(spec, c.k);
        add(rep, "tilde_M_log_estimate", cell(c.n, c.k, c.p),
            est.in_regime && est.lower_ok && est.upper_ok,
            "log_gap=" + real_str(est.log_gap, 6));
    }
    return rep;
}

SuiteReport kwise_suite(const SweepOptions& options) {
    SuiteReport rep;
    rep.suite = "kwise";
    for (const Rational& p : options.ps) {
        for (long n = 2; n <= options.max_n; ++n) {
            const BinomialSpec spec(n, p);
            for (int k : options.ks) {
                if (k % 2 != 0 || k > n - 1) continue;
                const auto cert = compute_M_primal(spec, k);
                const SymmetricJoint joint = lift_to_joint(cert.distribution);
                add(rep, "kwise_at_k", cell(n, k, p),
                    verify_kwise(joint, k, p).all_pass());
                add(rep, "and_probability", cell(n, k, p),
                    subset_all_ones_prob(joint, n) == cert.value &&
                        joint.count_dist.mass_at(n) == cert.value);
                if (k + 1 <= n) {
                    const bool passes_above = verify_kwise(joint, k + 1, p).all_pass();
                    if (!passes_above) {
                        add(rep, "not_kwise_at_k_plus_1", cell(n, k, p), true);
                    } else {
                        // only legitimate when the k and k+1 problems share
                        // their optimum
                        const auto above = compute_M_primal(spec, k + 1);
                        add(rep, "not_kwise_at_k_plus_1", cell(n, k, p),
                            above.value == cert.value,
                            "distribution is (k+1)-wise; M(n,k)=" + cert.value.str() +
                                ", M(n,k+1)=" + above.value.str());
                    }
                }
            }
        }
    }
    return rep;
}

SuiteReport chebyshev_suite(long max_m, int max_d, long monic_max_m,
                            int monics_per_cell, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "chebyshev";

    for (long M = 1; M <= max_m; ++M) {
        const int dmax = static_cast<int>(std::min<long>(max_d, M - 1));
        const ChebyshevFamily fam = chebyshev_family(M, dmax);
        bool leading_ok = true;
        bool norm_ok = true;
        for (int d = 0; d <= dmax; ++d) {
            const Polynomial& t = fam.polys[static_cast<size_t>(d)];
            leading_ok = leading_ok && t.degree() == d &&
                         t.coeff(static_cast<size_t>(d)) ==
                             binomial_coefficient(2 * static_cast<unsigned long>(d),
                                                  static_cast<unsigned long>(d));
            try {
                norm_ok = norm_ok && norm_squared(M, d).sign() > 0;
            } catch (const std::exception&) {
                norm_ok = false; // closed form disagreed with the direct sum
            }
        }
        add(rep, "leading_coefficient", "M=" + std::to_string(M), leading_ok);
        add(rep, "norm_identity", "M=" + std::to_string(M), norm_ok);
        add(rep, "orthogonality", "M=" + std::to_string(M),
            verify_orthogonality(M, dmax).all_pass);

        // the exact norm-based lower bound on sum |G(i)|^2 dominates its
        // simplified closed form (M/4)^(2d+1) e^(-2 d^3 / M^2)
        bool chain_ok = true;
        for (int d = 1; 2 * d <= M; ++d) {
            const Rational exact =
                norm_squared(M, d) /
                (binomial_coefficient(2 * static_cast<unsigned long>(d),
                                      static_cast<unsigned long>(d)) *
                 binomial_coefficient(2 * static_cast<unsigned long>(d),
                                      static_cast<unsigned long>(d)));
            const BigFloat Mf(M), df(d);
            const BigFloat simplified =
                exp((2 * df + 1) * log(Mf / 4) - 2 * df * df * df / (Mf * Mf));
            chain_ok = chain_ok && to_real(exact) >= simplified * (1 - guard_band());
        }
        add(rep, "bound_chain", "M=" + std::to_string(M), chain_ok);
    }

    SplitMix64 rng(seed);
    for (long M = 1; M <= std::min(monic_max_m, max_m); ++M) {
        bool bound_ok = true;
        long violations = 0;
        for (int d = 0; 2 * d <= M; ++d) {
            for (int trial = 0; trial < monics_per_cell; ++trial) {
                std::vector<Rational> roots(static_cast<size_t>(d));
                for (auto& root : roots) root = Rational(rng.range(-M, 2 * M));
                const Polynomial g = Polynomial::from_roots(roots);
                if (!monic_sup_bound_holds(M, g)) {
                    bound_ok = false;
                    ++violations;
                }
            }
        }
        add(rep, "monic_sup_bound", "M=" + std::to_string(M), bound_ok,
            violations ? std::to_string(violations) + " violations" : "");
    }
    return rep;
}

SuiteReport perturbation_suite(const SweepOptions& options) {
    SuiteReport rep;
    rep.suite = "perturbation";
    SplitMix64 rng(options.seed);

    std::optional<BigFloat> max_normalized; // (E g / E f) / (k exp(k / V(N/k)))
    std::string max_normalized_at;

    for (const Rational& p : options.ps) {
        for (long n = 4; n <= options.max_n; n += (n < 20 ? 2 : 10)) {
            for (int k : options.ks) {
                if (k % 2 != 0 || k > n - 1) continue;
                const BinomialSpec spec(n, p);
                const Rational N = spec.scale();

                bool pointwise_ok = true;
                bool expectation_ok = true;
                bool witness_ok = true;
                bool segment_ok = true;
                long segment_checks = 0;

                for (int c = 0; c < options.configs_per_cell; ++c) {
                    const RootPairConfig config = random_config(rng, n, k);
                    const PerturbationPair pair = build_pair(n, config);

                    // ratio bound at every non-zero point;
                    // pointwise_ratio throws on violation
                    for (long x = 0; x <= n; ++x) {
                        if (pair.is_zero_of_f(x)) continue;
                        try {
                            (void)pointwise_ratio(pair, x);
                        } catch (const std::exception&) {
                            pointwise_ok = false;
                        }
                    }

                    const Rational ratio = ratio_expectations(spec, config);
                    if (ratio.sign() <= 0) expectation_ok = false;
                    if (N.sign() > 0) {
                        const BigFloat nk = to_real(N / Rational(k));
                        if (log(nk) > 1) {
                            const BigFloat normalized =
                                to_real(ratio) /
                                (BigFloat(k) * exp(BigFloat(k) / v_rate(nk)));
                            if (!max_normalized || normalized > *max_normalized) {
                                max_normalized = normalized;
                                max_normalized_at = cell(n, k, p);
                            }
                        }
                    }

                    // witness search at the zeros of f (first few configs to
                    // keep runtime flat)
                    if (c < 5) {
                        const WitnessSearchParams params =
                            WitnessSearchParams::for_problem(spec, k);
                        for (long x : config.zeros()) {
                            const Witness oracle = find_witness_exhaustive(spec, pair, x);
                            const auto windowed = find_witness(spec, pair, x, params);
                            if (windowed) {
                                const long dist = oracle.w >= x ? oracle.w - x : x - oracle.w;
                                if (dist >= 3 * params.Z && windowed->ratio != oracle.ratio) {
                                    witness_ok = false; // window covers argmin yet differs
                                }
                                if (windowed->ratio < oracle.ratio) witness_ok = false;
                            }
                        }
                        for (long x : config.zeros()) {
                            for (long m : {2L, 4L, 8L}) {
                                for (long t : {5L, 9L}) {
                                    for (bool right : {true, false}) {
                                        const auto check = segment_witness_check(
                                            pair, x, m, Rational(t), right);
                                        if (check.applicable) {
                                            ++segment_checks;
                                            segment_ok = segment_ok && check.pass;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }

                add(rep, "pointwise_ratio_bound", cell(n, k, p), pointwise_ok);
                add(rep, "expectation_ratio_positive", cell(n, k, p), expectation_ok);
                add(rep, "witness_window_agrees", cell(n, k, p), witness_ok);
                add(rep, "segment_bound", cell(n, k, p), segment_ok,
                    std::to_string(segment_checks) + " applicable");
            }
        }
    }
    if (max_normalized) {
        add(rep, "max_normalized_ratio", max_normalized_at, true,
            real_str(*max_normalized, 30));
    }
    return rep;
}

SuiteReport probshift_suite(const std::vector<long>& ns, const std::vector<Rational>& ps) {
    SuiteReport rep;
    rep.suite = "probshift";
    for (long n : ns) {
        for (const Rational& p : ps) {
            const BinomialSpec spec(n, p);
            if (spec.scale().sign() <= 0) {
                add(rep, "shift_bounds", cell(n, p), true, "skipped: N <= 0");
                continue;
            }
            bool ok = true;
            long applicable = 0;
            for (long ell = 1; 2 * ell <= n; ++ell) {
                const ProbShiftReport shift = prob_shift_check(spec, ell);
                if (!shift.up_applicable && !shift.down_applicable) continue;
                if (shift.up_applicable) {
                    ++applicable;
                    ok = ok && shift.up_holds;
                }
                if (shift.down_applicable) {
                    ++applicable;
                    ok = ok && shift.down_holds;
                }
            }
            add(rep, "shift_bounds", cell(n, p), ok,
                std::to_string(applicable) + " applicable");
        }
    }
    return rep;
}

SuiteReport expectation_suite(int cases, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "expectation";
    SplitMix64 rng(seed);
    bool ok = true;
    std::string first_failure;
    for (int c = 0; c < cases; ++c) {
        const long n = rng.range(1, 25);
        const long den = rng.range(2, 12);
        const long num = rng.range(1, den - 1);
        const BinomialSpec spec(n, Rational(num, den));
        const long degree = rng.range(0, 12);
        std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
        for (auto& coeff : coeffs) coeff = Rational(rng.range(-9, 9));
        const Polynomial poly(std::move(coeffs));
        if (expectation(spec, poly) != expectation_by_summation(spec, poly)) {
            ok = false;
            if (first_failure.empty()) first_failure = cell(n, spec.p);
        }
    }
    add(rep, "falling_factorial_vs_direct_sum", std::to_string(cases) + " cases", ok,
        first_failure);
    return rep;
}

} // namespace kwise
