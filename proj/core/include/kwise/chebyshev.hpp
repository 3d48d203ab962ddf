#ifndef KWISE_CHEBYSHEV_HPP
#define KWISE_CHEBYSHEV_HPP

#include <string>
#include <vector>

#include "kwise/polynomial.hpp"
#include "kwise/real.hpp"

namespace kwise {

/// Discrete Chebyshev polynomial t_d for the uniform counting measure on
/// {0,...,M-1}, built symbolically as d! * Delta^d [ C(x,d) C(x-M,d) ].
/// Its leading coefficient is C(2d, d). Requires 0 <= d <= M-1.
Polynomial chebyshev_poly(long M, int d);

/// t_0, ..., t_dmax for one M.
struct ChebyshevFamily {
    long M = 0;
    std::vector<Polynomial> polys;
};
ChebyshevFamily chebyshev_family(long M, int dmax);

struct OrthogonalityPair {
    int d = 0, d_other = 0;
    Rational sum;
    bool pass = false;
};
struct OrthogonalityReport {
    long M = 0;
    std::vector<OrthogonalityPair> pairs;
    bool all_pass = true;
};
/// Exact check that sum_{i<M} t_d(i) t_{d'}(i) == 0 for every d != d' <= dmax.
OrthogonalityReport verify_orthogonality(long M, int dmax);

/// The closed-form norm M(M^2-1)(M^2-4)...(M^2-d^2)/(2d+1). Cross-checked
/// against the directly summed sum of t_d(i)^2 on every call.
Rational norm_squared(long M, int d);

/// Lower bound M^d / 4^(d+1/2) * exp(-d^3/M^2) on the sup of a monic degree-d
/// polynomial over {0,...,M-1}. Requires 0 <= d <= M/2.
BigFloat min_sup_bound(long M, int d);

/// Exact max_{0<=i<M} |G(i)| for the supplied monic polynomial.
Rational sup_on_grid(long M, const Polynomial& G);

/// True when sup_on_grid(M, G) >= min_sup_bound(M, deg G) up to the guard
/// band that shields the rational/real comparison.
bool monic_sup_bound_holds(long M, const Polynomial& monic_G);

} // namespace kwise

#endif
