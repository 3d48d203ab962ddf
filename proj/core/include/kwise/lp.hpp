#ifndef KWISE_LP_HPP
#define KWISE_LP_HPP

#include <cstddef>
#include <vector>

#include "kwise/binomial.hpp"
#include "kwise/rational.hpp"

namespace kwise {

enum class RowSense { Eq, Le, Ge };
enum class Direction { Maximize, Minimize };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

/// A dense LP over nonnegative variables: optimize objective . x subject to
/// rows[i] . x (sense[i]) rhs[i] and x >= 0.
struct StandardFormLP {
    Direction direction = Direction::Maximize;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<RowSense> senses;

    size_t num_vars() const { return objective.size(); }
    size_t num_rows() const { return rows.size(); }
    void validate() const;
};

struct LPSolution {
    SolveStatus status = SolveStatus::Infeasible;
    Rational value;
    std::vector<Rational> primal;
    /// Basic column indices; indices < num_vars() are structural, the rest
    /// are slack/surplus columns in order of the inequality rows.
    std::vector<size_t> basis;
    /// One multiplier per row. At optimality duals . rhs == value, exactly.
    std::vector<Rational> duals;
};

/// Exact two-phase primal simplex with Bland's pivot rule. Degenerate bases
/// terminate by the anti-cycling rule; infeasible and unbounded problems are
/// reported as statuses.
LPSolution solve_lp(const StandardFormLP& lp);

/// The discrete moment problem in standard form: variables q_0..q_n are the
/// masses of a distribution on {0,...,n}, constrained to sum to one and to
/// match the first k raw moments of Bin(n,p); the objective selects q_n.
/// Maximizing yields M(n,k,p), minimizing yields m(n,k,p).
StandardFormLP moment_lp(const BinomialSpec& spec, int k, Direction direction);

} // namespace kwise

#endif
