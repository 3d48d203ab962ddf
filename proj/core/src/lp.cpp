#include "kwise/lp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "kwise/errors.hpp"

namespace kwise {

void StandardFormLP::validate() const {
    if (rows.size() != rhs.size() || rows.size() != senses.size()) {
        throw std::invalid_argument("LP row count mismatch between rows, rhs and senses");
    }
    for (const auto& row : rows) {
        if (row.size() != objective.size()) {
            throw std::invalid_argument("LP row width does not match objective length");
        }
    }
}

namespace {

constexpr size_t kNoCol = static_cast<size_t>(-1);

// Dense tableau for the two-phase simplex. Column layout:
//   [0, nv)              structural variables
//   [nv, nv+ns)          slack/surplus columns, one per inequality row
//   [nv+ns, nv+ns+na)    artificial columns (phase 1 only)
struct Tableau {
    size_t nv = 0, ns = 0, na = 0;
    std::vector<std::vector<Rational>> a; // live rows x total columns
    std::vector<Rational> b;              // live rhs
    std::vector<size_t> basis;            // basic column per live row
    std::vector<size_t> row_index;        // live row -> original row
    std::vector<Rational> zrow;           // z_j - c_j for the current cost
    Rational zval;                        // current objective value

    size_t cols() const { return nv + ns + na; }
    bool artificial(size_t col) const { return col >= nv + ns; }

    void pivot(size_t r, size_t s) {
        const Rational piv = a[r][s];
        for (auto& e : a[r]) e /= piv;
        b[r] /= piv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][s].is_zero()) continue;
            const Rational f = a[i][s];
            for (size_t j = 0; j < cols(); ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        if (!zrow[s].is_zero()) {
            const Rational f = zrow[s];
            for (size_t j = 0; j < cols(); ++j) zrow[j] -= f * a[r][j];
            zval -= f * b[r]; // zrow holds z_j - c_j, so the value moves by -f * b_r
        }
        basis[r] = s;
    }

    void load_cost(const std::vector<Rational>& cost) {
        zrow.assign(cols(), Rational(0));
        zval = Rational(0);
        for (size_t j = 0; j < cols(); ++j) zrow[j] = -cost[j];
        for (size_t i = 0; i < a.size(); ++i) {
            const Rational cb = cost[basis[i]];
            if (cb.is_zero()) continue;
            for (size_t j = 0; j < cols(); ++j) zrow[j] += cb * a[i][j];
            zval += cb * b[i];
        }
    }

    // Bland's rule: entering column is the smallest index with negative
    // reduced cost; leaving row is the ratio-test minimizer with the smallest
    // basic column index. Returns false on unbounded.
    bool run(bool allow_artificial_entering) {
        for (;;) {
            size_t s = kNoCol;
            for (size_t j = 0; j < cols(); ++j) {
                if (!allow_artificial_entering && artificial(j)) continue;
                if (zrow[j].sign() < 0) { s = j; break; }
            }
            if (s == kNoCol) return true;
            size_t r = kNoCol;
            Rational best;
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i][s].sign() <= 0) continue;
                Rational ratio = b[i] / a[i][s];
                if (r == kNoCol || ratio < best ||
                    (ratio == best && basis[i] < basis[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == kNoCol) return false;
            pivot(r, s);
        }
    }
};

// Solve transpose(B) y = c_B by exact Gaussian elimination. B is the matrix
// of basic columns of `a0` (the unpivoted working matrix) over live rows.
std::vector<Rational> basis_duals(const std::vector<std::vector<Rational>>& a0,
                                  const std::vector<size_t>& live,
                                  const std::vector<size_t>& basis,
                                  const std::vector<Rational>& cost) {
    const size_t m = live.size();
    // Row r of the system: sum_i y_i * a0[live[i]][basis[r]] = cost[basis[r]].
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m + 1, Rational(0)));
    for (size_t r = 0; r < m; ++r) {
        for (size_t i = 0; i < m; ++i) mat[r][i] = a0[live[i]][basis[r]];
        mat[r][m] = cost[basis[r]];
    }
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && mat[piv][col].is_zero()) ++piv;
        if (piv == m) throw std::logic_error("singular basis while recovering duals");
        std::swap(mat[col], mat[piv]);
        const Rational d = mat[col][col];
        for (size_t j = col; j <= m; ++j) mat[col][j] /= d;
        for (size_t i = 0; i < m; ++i) {
            if (i == col || mat[i][col].is_zero()) continue;
            const Rational f = mat[i][col];
            for (size_t j = col; j <= m; ++j) mat[i][j] -= f * mat[col][j];
        }
    }
    std::vector<Rational> y(m);
    for (size_t i = 0; i < m; ++i) y[i] = mat[i][m];
    return y;
}

} // namespace

LPSolution solve_lp(const StandardFormLP& lp) {
    lp.validate();
    const size_t nv = lp.num_vars();
    const size_t m = lp.num_rows();

    // Working copy with nonnegative rhs; flipped rows change sense and the
    // sign of their dual multiplier.
    std::vector<std::vector<Rational>> work_rows = lp.rows;
    std::vector<Rational> work_rhs = lp.rhs;
    std::vector<RowSense> senses = lp.senses;
    std::vector<int> row_sign(m, 1);
    for (size_t i = 0; i < m; ++i) {
        if (work_rhs[i].sign() < 0) {
            for (auto& e : work_rows[i]) e = -e;
            work_rhs[i] = -work_rhs[i];
            row_sign[i] = -1;
            if (senses[i] == RowSense::Le) senses[i] = RowSense::Ge;
            else if (senses[i] == RowSense::Ge) senses[i] = RowSense::Le;
        }
    }

    Tableau t;
    t.nv = nv;
    std::vector<size_t> slack_col(m, kNoCol), art_col(m, kNoCol);
    for (size_t i = 0; i < m; ++i) {
        if (senses[i] != RowSense::Eq) slack_col[i] = nv + t.ns++;
    }
    for (size_t i = 0; i < m; ++i) {
        if (senses[i] != RowSense::Le) art_col[i] = nv + t.ns + t.na++;
    }

    // Full working matrix (also kept unpivoted for dual recovery).
    std::vector<std::vector<Rational>> a0(m, std::vector<Rational>(t.cols(), Rational(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < nv; ++j) a0[i][j] = work_rows[i][j];
        if (slack_col[i] != kNoCol) {
            a0[i][slack_col[i]] = senses[i] == RowSense::Le ? Rational(1) : Rational(-1);
        }
        if (art_col[i] != kNoCol) a0[i][art_col[i]] = Rational(1);
    }

    t.a = a0;
    t.b = work_rhs;
    t.basis.resize(m);
    t.row_index.resize(m);
    for (size_t i = 0; i < m; ++i) {
        t.basis[i] = art_col[i] != kNoCol ? art_col[i] : slack_col[i];
        t.row_index[i] = i;
    }

    LPSolution sol;

    // Phase 1: maximize minus the sum of artificials.
    if (t.na > 0) {
        std::vector<Rational> phase1_cost(t.cols(), Rational(0));
        for (size_t j = nv + t.ns; j < t.cols(); ++j) phase1_cost[j] = Rational(-1);
        t.load_cost(phase1_cost);
        t.run(true); // bounded below by -sum(b) >= -inf, cannot be unbounded
        if (t.zval.sign() < 0) {
            sol.status = SolveStatus::Infeasible;
            return sol;
        }
        // Pivot remaining artificials out of the basis; a row where no
        // non-artificial column survives is redundant and is dropped.
        for (size_t i = 0; i < t.a.size();) {
            if (!t.artificial(t.basis[i])) { ++i; continue; }
            size_t s = kNoCol;
            for (size_t j = 0; j < nv + t.ns; ++j) {
                if (!t.a[i][j].is_zero()) { s = j; break; }
            }
            if (s != kNoCol) {
                t.pivot(i, s);
                ++i;
            } else {
                t.a.erase(t.a.begin() + static_cast<long>(i));
                t.b.erase(t.b.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
                t.row_index.erase(t.row_index.begin() + static_cast<long>(i));
            }
        }
    }

    // Phase 2 on the real objective, converted to maximization.
    std::vector<Rational> cost(t.cols(), Rational(0));
    const bool minimize = lp.direction == Direction::Minimize;
    for (size_t j = 0; j < nv; ++j) {
        cost[j] = minimize ? -lp.objective[j] : lp.objective[j];
    }
    t.load_cost(cost);
    if (!t.run(false)) {
        sol.status = SolveStatus::Unbounded;
        return sol;
    }

    sol.status = SolveStatus::Optimal;
    sol.primal.assign(nv, Rational(0));
    for (size_t i = 0; i < t.a.size(); ++i) {
        if (t.basis[i] < nv) sol.primal[t.basis[i]] = t.b[i];
    }
    sol.value = Rational(0);
    for (size_t j = 0; j < nv; ++j) sol.value += lp.objective[j] * sol.primal[j];
    sol.basis = t.basis;
    std::sort(sol.basis.begin(), sol.basis.end());

    std::vector<Rational> y = basis_duals(a0, t.row_index, t.basis, cost);
    sol.duals.assign(m, Rational(0));
    for (size_t i = 0; i < t.row_index.size(); ++i) {
        Rational v = y[i];
        if (row_sign[t.row_index[i]] < 0) v = -v;
        if (minimize) v = -v;
        sol.duals[t.row_index[i]] = v;
    }
    return sol;
}

StandardFormLP moment_lp(const BinomialSpec& spec, int k, Direction direction) {
    if (k < 1 || k > spec.n) {
        throw std::invalid_argument("moment LP requires 1 <= k <= n");
    }
    const size_t nv = static_cast<size_t>(spec.n) + 1;
    StandardFormLP lp;
    lp.direction = direction;
    lp.objective.assign(nv, Rational(0));
    lp.objective[nv - 1] = Rational(1);

    lp.rows.reserve(static_cast<size_t>(k) + 1);
    lp.rhs.reserve(static_cast<size_t>(k) + 1);
    lp.rows.emplace_back(nv, Rational(1));
    lp.rhs.push_back(Rational(1));
    lp.senses.assign(static_cast<size_t>(k) + 1, RowSense::Eq);
    for (int j = 1; j <= k; ++j) {
        std::vector<Rational> row(nv, Rational(0));
        for (size_t i = 0; i < nv; ++i) {
            mpz_class power;
            mpz_ui_pow_ui(power.get_mpz_t(), i, static_cast<unsigned long>(j));
            row[i] = Rational(power);
        }
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(raw_moment(spec, static_cast<unsigned long>(j)));
    }
    return lp;
}

} // namespace kwise
