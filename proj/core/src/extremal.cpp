#include "kwise/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "kwise/errors.hpp"
#include "kwise/parallel.hpp"

namespace kwise {

MomentDistribution::MomentDistribution(long n_, std::vector<long> support_,
                                       std::vector<Rational> masses_)
    : n(n_), support(std::move(support_)), masses(std::move(masses_)) {
    if (support.size() != masses.size() || support.empty()) {
        throw std::invalid_argument("distribution support/mass length mismatch");
    }
    Rational total(0);
    for (size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0 || support[i] > n) {
            throw std::invalid_argument("support point outside {0,...,n}");
        }
        if (i > 0 && support[i] <= support[i - 1]) {
            throw std::invalid_argument("support points not strictly increasing");
        }
        if (masses[i].sign() <= 0) {
            throw std::invalid_argument("nonpositive mass in distribution");
        }
        total += masses[i];
    }
    if (total != Rational(1)) {
        throw std::invalid_argument("distribution masses sum to " + total.str() + ", not 1");
    }
}

Rational MomentDistribution::mass_at(long x) const {
    auto it = std::lower_bound(support.begin(), support.end(), x);
    if (it == support.end() || *it != x) return Rational(0);
    return masses[static_cast<size_t>(it - support.begin())];
}

Rational MomentDistribution::moment(unsigned long j) const {
    Rational acc(0);
    for (size_t i = 0; i < support.size(); ++i) {
        acc += masses[i] * pow(Rational(support[i]), static_cast<long>(j));
    }
    return acc;
}

MomentDistribution MomentDistribution::binomial(const BinomialSpec& spec) {
    std::vector<long> support(static_cast<size_t>(spec.n) + 1);
    std::vector<Rational> masses(support.size());
    for (long x = 0; x <= spec.n; ++x) {
        support[static_cast<size_t>(x)] = x;
        masses[static_cast<size_t>(x)] = binomial_pmf(spec, x);
    }
    return MomentDistribution(spec.n, std::move(support), std::move(masses));
}

RootPairConfig::RootPairConfig(int k_, std::vector<long> starts_)
    : k(k_), starts(std::move(starts_)) {
    if (k <= 0 || k % 2 != 0) throw std::invalid_argument("root pair config requires even k > 0");
    if (starts.size() != static_cast<size_t>(k) / 2) {
        throw std::invalid_argument("root pair config requires k/2 starts");
    }
    for (size_t i = 0; i < starts.size(); ++i) {
        if (starts[i] < 0) throw std::invalid_argument("negative pair start");
        if (i > 0 && starts[i] < starts[i - 1] + 2) {
            throw std::invalid_argument("pair starts must be increasing with gaps >= 2");
        }
    }
}

std::vector<long> RootPairConfig::zeros() const {
    std::vector<long> zs;
    zs.reserve(starts.size() * 2);
    for (long a : starts) {
        zs.push_back(a);
        zs.push_back(a + 1);
    }
    return zs;
}

namespace {

// Shared by the even primal route and the odd reduction: solve the moment LP
// at (n, k) and turn the exact solution into a certificate.
ExtremalCertificate primal_certificate(const BinomialSpec& spec, int k) {
    StandardFormLP lp = moment_lp(spec, k, Direction::Maximize);
    LPSolution sol = solve_lp(lp);
    if (sol.status != SolveStatus::Optimal) {
        throw consistency_error("moment LP not optimal although Bin(n,p) is feasible");
    }

    std::vector<long> support;
    std::vector<Rational> masses;
    for (long i = 0; i <= spec.n; ++i) {
        const Rational& q = sol.primal[static_cast<size_t>(i)];
        if (q.sign() < 0) throw consistency_error("negative mass in LP solution");
        if (q.sign() > 0) {
            support.push_back(i);
            masses.push_back(q);
        }
    }

    Polynomial dual(std::vector<Rational>(sol.duals.begin(), sol.duals.end()));
    const Rational at_n = dual(Rational(spec.n));
    if (at_n.is_zero()) throw consistency_error("dual polynomial vanishes at n");
    dual = dual / at_n;

    std::vector<long> zeros;
    for (long i = 0; i < spec.n; ++i) {
        if (dual.at(i).is_zero()) zeros.push_back(i);
    }

    ExtremalCertificate cert{
        spec,
        k,
        sol.value,
        MomentDistribution(spec.n, std::move(support), std::move(masses)),
        std::move(dual),
        std::move(zeros),
        /*degenerate=*/false,
        /*odd_reduced=*/false,
    };
    cert.degenerate = cert.distribution.support.size() < static_cast<size_t>(k) + 1;
    return cert;
}

ExtremalCertificate base_case_certificate(const BinomialSpec& spec) {
    // k = 0: only the normalization constraint, so all mass can sit at n.
    return ExtremalCertificate{
        spec,
        0,
        Rational(1),
        MomentDistribution(spec.n, {spec.n}, {Rational(1)}),
        Polynomial::constant(Rational(1)),
        {},
        false,
        false,
    };
}

struct SearchBest {
    bool valid = false;
    Rational ratio;
    std::vector<long> starts;
    bool tie = false;
};

SearchBest merge_best(SearchBest a, SearchBest b) {
    if (!a.valid) return b;
    if (!b.valid) return a;
    if (b.ratio < a.ratio) return b;
    if (a.ratio < b.ratio) return a;
    a.tie = true; // equal minima in two chunks; a is lexicographically earlier
    return a;
}

// Lexicographic unranking of an r-combination of {0,...,u-1}.
std::vector<long> unrank_combination(mpz_class idx, long u, long r) {
    std::vector<long> comb(static_cast<size_t>(r));
    long v = 0;
    for (long pos = 0; pos < r; ++pos) {
        for (;; ++v) {
            mpz_class count = binomial_mpz(static_cast<unsigned long>(u - 1 - v),
                                           static_cast<unsigned long>(r - pos - 1));
            if (idx < count) break;
            idx -= count;
        }
        comb[static_cast<size_t>(pos)] = v++;
    }
    return comb;
}

// Advance an r-combination of {0,...,u-1} in lexicographic order.
bool next_combination(std::vector<long>& comb, long u) {
    const long r = static_cast<long>(comb.size());
    for (long i = r - 1; i >= 0; --i) {
        if (comb[static_cast<size_t>(i)] < u - (r - i)) {
            ++comb[static_cast<size_t>(i)];
            for (long j = i + 1; j < r; ++j) {
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace

ExtremalCertificate compute_M_primal(const BinomialSpec& spec, int k) {
    if (k < 0 || k > spec.n) throw std::invalid_argument("compute_M_primal requires 0 <= k <= n");
    if (k == 0) return base_case_certificate(spec);
    if (k % 2 == 1) return odd_reduction(spec, k);
    return primal_certificate(spec, k);
}

ExtremalCertificate odd_reduction(const BinomialSpec& spec, int k) {
    if (k % 2 != 1) throw std::invalid_argument("odd_reduction requires odd k");
    if (k < 1 || k > spec.n) throw std::invalid_argument("odd_reduction requires 1 <= k <= n");

    Rational inner(1);
    if (k > 1) inner = compute_M_primal(BinomialSpec(spec.n - 1, spec.p), k - 1).value;
    const Rational reduced = spec.p * inner;

    ExtremalCertificate cert = primal_certificate(spec, k);
    if (cert.value != reduced) {
        throw consistency_error("odd-k identity violated: LP gives " + cert.value.str() +
                                ", p*M(n-1,k-1,p) gives " + reduced.str());
    }
    cert.odd_reduced = true;
    return cert;
}

Rational compute_m(const BinomialSpec& spec, int k) {
    if (k < 1 || k > spec.n) throw std::invalid_argument("compute_m requires 1 <= k <= n");
    LPSolution sol = solve_lp(moment_lp(spec, k, Direction::Minimize));
    if (sol.status != SolveStatus::Optimal) {
        throw consistency_error("moment LP not optimal although Bin(n,p) is feasible");
    }
    return sol.value;
}

ExtremalCertificate compute_M_dual_search(const BinomialSpec& spec, int k,
                                          const DualSearchOptions& options) {
    if (k % 2 != 0 || k < 2) throw std::invalid_argument("dual search requires even k >= 2");
    if (k > spec.n - 1) {
        throw std::invalid_argument("dual search requires k <= n-1 so the root pairs fit below n");
    }

    const long r = k / 2;
    const long u = spec.n - r; // combinations of {0,...,u-1} <-> pair starts
    const mpz_class total = binomial_mpz(static_cast<unsigned long>(u),
                                         static_cast<unsigned long>(r));
    if (total > options.max_candidates) {
        throw budget_error("dual search would enumerate " + total.get_str() +
                           " configurations, over the budget of " +
                           std::to_string(options.max_candidates));
    }
    const std::uint64_t count = total.get_ui();

    auto evaluate_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        SearchBest best;
        std::vector<long> comb = unrank_combination(mpz_class(static_cast<unsigned long>(lo)), u, r);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::vector<long> starts(static_cast<size_t>(r));
            std::vector<long> roots(static_cast<size_t>(k));
            Rational f_at_n(1);
            for (long i = 0; i < r; ++i) {
                const long a = comb[static_cast<size_t>(i)] + i;
                starts[static_cast<size_t>(i)] = a;
                roots[static_cast<size_t>(2 * i)] = a;
                roots[static_cast<size_t>(2 * i + 1)] = a + 1;
                f_at_n *= Rational(spec.n - a) * Rational(spec.n - a - 1);
            }
            const Polynomial f = Polynomial::from_integer_roots(roots);
            const Rational ef = expectation(spec, f);
            if (ef.sign() <= 0) {
                throw consistency_error("pair polynomial with nonpositive expectation");
            }
            const Rational ratio = ef / f_at_n;
            if (!best.valid || ratio < best.ratio) {
                best.valid = true;
                best.ratio = ratio;
                best.starts = starts;
                best.tie = false;
            } else if (ratio == best.ratio) {
                best.tie = true;
            }
            if (idx + 1 < hi && !next_combination(comb, u)) {
                throw std::logic_error("combination stream exhausted early");
            }
        }
        return best;
    };

    SearchBest best = parallel_chunks<SearchBest>(count, options.threads,
                                                  evaluate_chunk, merge_best);
    if (!best.valid) throw std::logic_error("dual search saw no configurations");

    const RootPairConfig config(k, best.starts);
    std::vector<long> zeros = config.zeros();
    std::vector<long> support_points = zeros;
    support_points.push_back(spec.n);

    auto vd = vandermonde_solve(spec, k, support_points);
    if (!vd) {
        throw consistency_error("minimizing configuration has an infeasible reconstruction");
    }

    Polynomial f = Polynomial::from_integer_roots(zeros);
    f = f / f(Rational(spec.n));

    ExtremalCertificate cert{
        spec,
        k,
        best.ratio,
        vd->to_distribution(spec.n),
        std::move(f),
        std::move(zeros),
        best.tie || vd->has_zero_mass,
        false,
    };
    return cert;
}

MomentDistribution VandermondeSolution::to_distribution(long n) const {
    std::vector<long> s;
    std::vector<Rational> m;
    for (size_t i = 0; i < support.size(); ++i) {
        if (masses[i].is_zero()) continue;
        s.push_back(support[i]);
        m.push_back(masses[i]);
    }
    return MomentDistribution(n, std::move(s), std::move(m));
}

std::optional<VandermondeSolution> vandermonde_solve(const BinomialSpec& spec, int k,
                                                     std::vector<long> support) {
    if (support.size() != static_cast<size_t>(k) + 1) {
        throw std::invalid_argument("vandermonde_solve requires exactly k+1 support points");
    }
    std::sort(support.begin(), support.end());
    for (size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0 || support[i] > spec.n) {
            throw std::invalid_argument("support point outside {0,...,n}");
        }
        if (i > 0 && support[i] == support[i - 1]) {
            throw std::invalid_argument("repeated support point");
        }
    }

    const size_t m = support.size();
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m + 1, Rational(0)));
    for (size_t c = 0; c < m; ++c) mat[0][c] = Rational(1);
    mat[0][m] = Rational(1);
    for (size_t row = 1; row < m; ++row) {
        for (size_t c = 0; c < m; ++c) {
            mat[row][c] = pow(Rational(support[c]), static_cast<long>(row));
        }
        mat[row][m] = raw_moment(spec, row);
    }

    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && mat[piv][col].is_zero()) ++piv;
        if (piv == m) throw std::logic_error("singular Vandermonde system");
        std::swap(mat[col], mat[piv]);
        const Rational d = mat[col][col];
        for (size_t j = col; j <= m; ++j) mat[col][j] /= d;
        for (size_t i = 0; i < m; ++i) {
            if (i == col || mat[i][col].is_zero()) continue;
            const Rational f = mat[i][col];
            for (size_t j = col; j <= m; ++j) mat[i][j] -= f * mat[col][j];
        }
    }

    VandermondeSolution out;
    out.support = std::move(support);
    out.masses.resize(m);
    for (size_t i = 0; i < m; ++i) {
        out.masses[i] = mat[i][m];
        if (out.masses[i].sign() < 0) return std::nullopt;
        if (out.masses[i].is_zero()) out.has_zero_mass = true;
    }
    return out;
}

bool has_adjacent_pair_structure(const std::vector<long>& zeros, long n) {
    if (zeros.empty() || zeros.size() % 2 != 0) return false;
    for (size_t i = 0; i < zeros.size(); i += 2) {
        if (zeros[i] < 0 || zeros[i + 1] != zeros[i] + 1 || zeros[i + 1] > n - 1) return false;
        if (i > 0 && zeros[i] <= zeros[i - 1]) return false;
    }
    return true;
}

CertificateChecks verify_certificate(const ExtremalCertificate& cert) {
    CertificateChecks checks;
    const BinomialSpec& spec = cert.spec;
    const MomentDistribution& dist = cert.distribution;

    Rational total(0);
    for (const Rational& mass : dist.masses) total += mass;
    checks.moments_match = total == Rational(1);
    for (int j = 1; j <= cert.k && checks.moments_match; ++j) {
        checks.moments_match = dist.moment(static_cast<unsigned long>(j)) ==
                               raw_moment(spec, static_cast<unsigned long>(j));
    }

    checks.dual_feasible = cert.dual_poly.degree() <= cert.k &&
                           cert.dual_poly(Rational(spec.n)) == Rational(1);
    for (long i = 0; i < spec.n && checks.dual_feasible; ++i) {
        checks.dual_feasible = cert.dual_poly.at(i).sign() >= 0;
    }

    checks.zero_gap = expectation(spec, cert.dual_poly) == cert.value &&
                      dist.mass_at(spec.n) == cert.value;

    checks.support_in_zeros = true;
    for (long s : dist.support) {
        if (s == spec.n) continue;
        const bool is_zero_point = cert.dual_poly.at(s).is_zero() &&
                                   std::binary_search(cert.dual_zeros.begin(),
                                                      cert.dual_zeros.end(), s);
        if (!is_zero_point) {
            checks.support_in_zeros = false;
            break;
        }
    }
    return checks;
}

} // namespace kwise
