#include "kwise/chebyshev.hpp"

#include <stdexcept>

#include "kwise/binomial.hpp"
#include "kwise/errors.hpp"

namespace kwise {

Polynomial chebyshev_poly(long M, int d) {
    if (M < 1) throw std::invalid_argument("chebyshev_poly requires M >= 1");
    if (d < 0 || d >= M) throw std::invalid_argument("chebyshev_poly requires 0 <= d <= M-1");
    const unsigned du = static_cast<unsigned>(d);
    const Polynomial product = choose_poly(du) * choose_poly(du, Rational(M));
    Polynomial diffed = finite_difference(product, du);
    mpz_class dfact;
    mpz_fac_ui(dfact.get_mpz_t(), du);
    return Rational(dfact) * diffed;
}

ChebyshevFamily chebyshev_family(long M, int dmax) {
    if (dmax < 0 || dmax >= M) throw std::invalid_argument("family requires 0 <= dmax <= M-1");
    ChebyshevFamily fam;
    fam.M = M;
    fam.polys.reserve(static_cast<size_t>(dmax) + 1);
    for (int d = 0; d <= dmax; ++d) fam.polys.push_back(chebyshev_poly(M, d));
    return fam;
}

OrthogonalityReport verify_orthogonality(long M, int dmax) {
    OrthogonalityReport rep;
    rep.M = M;
    const ChebyshevFamily fam = chebyshev_family(M, dmax);
    // tabulate values once, then sum over all pairs
    std::vector<std::vector<Rational>> values(fam.polys.size());
    for (size_t d = 0; d < fam.polys.size(); ++d) {
        values[d].reserve(static_cast<size_t>(M));
        for (long i = 0; i < M; ++i) values[d].push_back(fam.polys[d].at(i));
    }
    for (size_t d = 0; d < fam.polys.size(); ++d) {
        for (size_t e = d + 1; e < fam.polys.size(); ++e) {
            Rational sum(0);
            for (long i = 0; i < M; ++i) {
                sum += values[d][static_cast<size_t>(i)] * values[e][static_cast<size_t>(i)];
            }
            OrthogonalityPair pair{static_cast<int>(d), static_cast<int>(e), sum, sum.is_zero()};
            rep.all_pass = rep.all_pass && pair.pass;
            rep.pairs.push_back(std::move(pair));
        }
    }
    return rep;
}

Rational norm_squared(long M, int d) {
    if (d < 0 || d >= M) throw std::invalid_argument("norm_squared requires 0 <= d <= M-1");
    Rational closed(M);
    for (long i = 1; i <= d; ++i) {
        closed *= Rational(M) * Rational(M) - Rational(i) * Rational(i);
    }
    closed /= Rational(2L * d + 1);

    const Polynomial t = chebyshev_poly(M, d);
    Rational direct(0);
    for (long i = 0; i < M; ++i) {
        const Rational v = t.at(i);
        direct += v * v;
    }
    if (direct != closed) {
        throw consistency_error("chebyshev norm identity failed at M=" + std::to_string(M) +
                                ", d=" + std::to_string(d));
    }
    return closed;
}

BigFloat min_sup_bound(long M, int d) {
    if (d < 0 || 2 * d > M) throw std::invalid_argument("min_sup_bound requires 0 <= d <= M/2");
    const BigFloat Mf(M), df(d);
    return exp(df * log(Mf) - (df + BigFloat(1) / 2) * log(BigFloat(4)) - df * df * df / (Mf * Mf));
}

Rational sup_on_grid(long M, const Polynomial& G) {
    if (M < 1) throw std::invalid_argument("sup_on_grid requires M >= 1");
    Rational best(0);
    for (long i = 0; i < M; ++i) {
        const Rational v = abs(G.at(i));
        if (v > best) best = v;
    }
    return best;
}

bool monic_sup_bound_holds(long M, const Polynomial& monic_G) {
    if (monic_G.is_zero() || monic_G.leading() != Rational(1)) {
        throw std::invalid_argument("bound check requires a monic polynomial");
    }
    const int d = monic_G.degree();
    const BigFloat bound = min_sup_bound(M, d);
    const BigFloat sup = to_real(sup_on_grid(M, monic_G));
    return sup >= bound * (1 - guard_band());
}

} // namespace kwise
