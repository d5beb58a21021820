#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rsnd/errors.hpp"
#include "rsnd/rational.hpp"

namespace rsnd {

// Covering LPs over box variables:
//   minimize c.x  subject to  sum_{j in row.vars} x_j >= row.rhs,  0 <= x <= 1.
// solve_vertex returns an optimal *vertex* (basic feasible solution); the
// iterative rounding on top of this relies on extreme-point structure, so a
// merely optimal interior point would be useless.

struct CoverRow {
    std::vector<int> vars;  // distinct variable indices
    Rational rhs;
};

struct LinearProgram {
    int var_count = 0;
    std::vector<Rational> objective;
    std::vector<CoverRow> rows;
};

struct VertexSolution {
    std::vector<Rational> x;
    Rational objective = 0;
    std::vector<int> tight_rows;  // indices into LinearProgram::rows
};

namespace detail {

inline void validate_lp(const LinearProgram& lp) {
    if (lp.var_count < 0) throw std::invalid_argument("negative variable count");
    if (static_cast<int>(lp.objective.size()) != lp.var_count)
        throw std::invalid_argument("objective size does not match variable count");
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& row = lp.rows[i];
        std::vector<int> sorted = row.vars;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (sorted[j] < 0 || sorted[j] >= lp.var_count)
                throw std::invalid_argument("row " + std::to_string(i) + " references variable out of range");
            if (j > 0 && sorted[j] == sorted[j - 1])
                throw std::invalid_argument("row " + std::to_string(i) + " repeats a variable");
        }
        if (row.rhs > static_cast<int>(row.vars.size()))
            throw infeasible_error("row " + std::to_string(i) + " requires " + format_rational(row.rhs) +
                                   " from only " + std::to_string(row.vars.size()) + " variables");
    }
}

}  // namespace detail

// Bounded-variable primal simplex with Bland's rule, exact rationals.
// Surplus variables s_i >= 0 turn each covering row into an equality; the
// all-upper point x = 1 is feasible whenever the LP is (checked upfront),
// which kills the need for a phase-1.
inline VertexSolution solve_vertex(const LinearProgram& lp) {
    detail::validate_lp(lp);
    int n = lp.var_count;

    std::vector<int> kept;  // indices of rows with rhs > 0
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
        if (lp.rows[i].rhs > 0) kept.push_back(static_cast<int>(i));
    int r = static_cast<int>(kept.size());
    int total = n + r;

    auto R = [](int v) { return Rational(v); };
    std::vector<std::vector<Rational>> T(static_cast<std::size_t>(r),
                                         std::vector<Rational>(static_cast<std::size_t>(total), R(0)));
    std::vector<Rational> p(static_cast<std::size_t>(r), R(0));
    std::vector<Rational> beta(static_cast<std::size_t>(r), R(0));
    std::vector<int> basis(static_cast<std::size_t>(r));
    std::vector<char> at_upper(static_cast<std::size_t>(total), 0);
    std::vector<char> is_basic(static_cast<std::size_t>(total), 0);
    std::vector<Rational> cost(static_cast<std::size_t>(total), R(0));
    for (int j = 0; j < n; ++j) {
        cost[static_cast<std::size_t>(j)] = lp.objective[static_cast<std::size_t>(j)];
        at_upper[static_cast<std::size_t>(j)] = 1;
    }
    // initial tableau: basis = surpluses, T = -M, p = -rhs
    for (int i = 0; i < r; ++i) {
        const auto& row = lp.rows[static_cast<std::size_t>(kept[static_cast<std::size_t>(i)])];
        for (int j : row.vars) T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = R(-1);
        T[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = R(1);
        p[static_cast<std::size_t>(i)] = -row.rhs;
        beta[static_cast<std::size_t>(i)] = Rational(static_cast<int>(row.vars.size())) - row.rhs;
        basis[static_cast<std::size_t>(i)] = n + i;
        is_basic[static_cast<std::size_t>(n + i)] = 1;
    }

    while (true) {
        // reduced costs; Bland: take the smallest improving column
        int entering = -1;
        Rational zbar;
        for (int j = 0; j < total && entering < 0; ++j) {
            if (is_basic[static_cast<std::size_t>(j)]) continue;
            Rational z = cost[static_cast<std::size_t>(j)];
            for (int i = 0; i < r; ++i) {
                const Rational& cb = cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])];
                if (cb != 0) z -= cb * T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            if ((!at_upper[static_cast<std::size_t>(j)] && z < 0) || (at_upper[static_cast<std::size_t>(j)] && z > 0)) {
                entering = j;
                zbar = z;
            }
        }
        if (entering < 0) break;
        int dir = at_upper[static_cast<std::size_t>(entering)] ? -1 : 1;

        // ratio test; ties resolved by the smallest candidate variable index
        std::optional<Rational> best_t;
        int winner = -1;  // variable index that hits its bound first
        int winner_row = -1;
        if (entering < n) {
            best_t = R(1);
            winner = entering;
        }
        for (int i = 0; i < r; ++i) {
            Rational coeff = -T[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)] * dir;
            if (coeff == 0) continue;
            std::optional<Rational> limit;
            if (coeff > 0) {
                if (basis[static_cast<std::size_t>(i)] < n)
                    limit = (R(1) - beta[static_cast<std::size_t>(i)]) / coeff;
            } else {
                limit = beta[static_cast<std::size_t>(i)] / (-coeff);
            }
            if (!limit) continue;
            if (!best_t || *limit < *best_t ||
                (*limit == *best_t && basis[static_cast<std::size_t>(i)] < winner)) {
                if (!best_t || *limit < *best_t) {
                    best_t = *limit;
                    winner = basis[static_cast<std::size_t>(i)];
                    winner_row = i;
                } else {
                    winner = basis[static_cast<std::size_t>(i)];
                    winner_row = i;
                }
            }
        }
        if (!best_t) throw internal_error("covering LP claims an unbounded direction");
        const Rational t = *best_t;

        if (winner == entering) {
            // bound flip, basis unchanged
            for (int i = 0; i < r; ++i) {
                Rational coeff = -T[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)] * dir;
                if (coeff != 0) beta[static_cast<std::size_t>(i)] += coeff * t;
            }
            at_upper[static_cast<std::size_t>(entering)] ^= 1;
            continue;
        }

        int lr = winner_row;
        Rational entering_value = Rational(at_upper[static_cast<std::size_t>(entering)] ? 1 : 0) + Rational(dir) * t;
        for (int i = 0; i < r; ++i) {
            if (i == lr) continue;
            Rational coeff = -T[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)] * dir;
            if (coeff != 0) beta[static_cast<std::size_t>(i)] += coeff * t;
        }
        int leaving = basis[static_cast<std::size_t>(lr)];
        Rational leave_coeff = -T[static_cast<std::size_t>(lr)][static_cast<std::size_t>(entering)] * dir;
        Rational leave_value = beta[static_cast<std::size_t>(lr)] + leave_coeff * t;
        at_upper[static_cast<std::size_t>(leaving)] = (leaving < n && leave_value == 1) ? 1 : 0;
        is_basic[static_cast<std::size_t>(leaving)] = 0;

        Rational piv = T[static_cast<std::size_t>(lr)][static_cast<std::size_t>(entering)];
        if (piv == 0) throw internal_error("zero pivot");
        for (int j = 0; j < total; ++j) T[static_cast<std::size_t>(lr)][static_cast<std::size_t>(j)] /= piv;
        p[static_cast<std::size_t>(lr)] /= piv;
        for (int i = 0; i < r; ++i) {
            if (i == lr) continue;
            Rational factor = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
            if (factor == 0) continue;
            for (int j = 0; j < total; ++j)
                T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    factor * T[static_cast<std::size_t>(lr)][static_cast<std::size_t>(j)];
            p[static_cast<std::size_t>(i)] -= factor * p[static_cast<std::size_t>(lr)];
        }
        basis[static_cast<std::size_t>(lr)] = entering;
        is_basic[static_cast<std::size_t>(entering)] = 1;
        at_upper[static_cast<std::size_t>(entering)] = 0;
        beta[static_cast<std::size_t>(lr)] = entering_value;
    }

    VertexSolution sol;
    sol.x.assign(static_cast<std::size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j)
        if (!is_basic[static_cast<std::size_t>(j)] && at_upper[static_cast<std::size_t>(j)])
            sol.x[static_cast<std::size_t>(j)] = 1;
    for (int i = 0; i < r; ++i)
        if (basis[static_cast<std::size_t>(i)] < n)
            sol.x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = beta[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
        const Rational& v = sol.x[static_cast<std::size_t>(j)];
        if (v < 0 || v > 1) throw internal_error("simplex left the box");
        sol.objective += lp.objective[static_cast<std::size_t>(j)] * v;
    }
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        Rational lhs = 0;
        for (int j : lp.rows[i].vars) lhs += sol.x[static_cast<std::size_t>(j)];
        if (lhs < lp.rows[i].rhs) throw internal_error("simplex violated a covering row");
        if (lhs == lp.rows[i].rhs) sol.tight_rows.push_back(static_cast<int>(i));
    }
    return sol;
}

// Certificate that x is an extreme point: the active constraints (tight rows
// plus tight box bounds) must span all of R^n.
inline bool is_vertex(const LinearProgram& lp, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != lp.var_count) throw std::invalid_argument("point size mismatch");
    int n = lp.var_count;
    std::vector<std::vector<Rational>> active;
    for (int j = 0; j < n; ++j) {
        if (x[static_cast<std::size_t>(j)] < 0 || x[static_cast<std::size_t>(j)] > 1) return false;
        if (x[static_cast<std::size_t>(j)] == 0 || x[static_cast<std::size_t>(j)] == 1) {
            std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
            row[static_cast<std::size_t>(j)] = 1;
            active.push_back(std::move(row));
        }
    }
    for (const auto& row : lp.rows) {
        Rational lhs = 0;
        for (int j : row.vars) lhs += x[static_cast<std::size_t>(j)];
        if (lhs < row.rhs) return false;
        if (lhs == row.rhs) {
            std::vector<Rational> arow(static_cast<std::size_t>(n), Rational(0));
            for (int j : row.vars) arow[static_cast<std::size_t>(j)] = 1;
            active.push_back(std::move(arow));
        }
    }
    // exact Gaussian elimination rank
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(active.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(active.size()); ++i)
            if (active[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(active[static_cast<std::size_t>(rank)], active[static_cast<std::size_t>(pivot)]);
        const Rational head = active[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int i = rank + 1; i < static_cast<int>(active.size()); ++i) {
            Rational f = active[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / head;
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                active[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * active[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank == n;
}

struct CuttingPlaneResult {
    VertexSolution solution;
    LinearProgram lp;  // all rows the oracle produced
    int iterations = 0;
};

// Cutting-plane loop standing in for the ellipsoid method: re-solve, ask the
// separation oracle, add the violated row, repeat. The loop only exits when
// the oracle accepts the current vertex, so the final point is certified by
// construction. Oracle rows that are not actually violated indicate a broken
// oracle and fail hard.
inline CuttingPlaneResult cutting_plane_solve(
    int var_count, std::vector<Rational> objective,
    const std::function<std::optional<CoverRow>(const std::vector<Rational>&)>& separate,
    int max_iterations = 10000) {
    CuttingPlaneResult res;
    res.lp.var_count = var_count;
    res.lp.objective = std::move(objective);
    while (true) {
        res.solution = solve_vertex(res.lp);
        auto row = separate(res.solution.x);
        if (!row) return res;
        std::vector<int> sorted = row->vars;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (sorted[j] < 0 || sorted[j] >= var_count)
                throw internal_error("separation oracle referenced an unknown variable");
            if (j > 0 && sorted[j] == sorted[j - 1]) throw internal_error("separation oracle repeated a variable");
        }
        Rational lhs = 0;
        for (int j : row->vars) lhs += res.solution.x[static_cast<std::size_t>(j)];
        if (lhs >= row->rhs) throw internal_error("separation oracle returned a satisfied row");
        if (row->rhs > static_cast<int>(row->vars.size()))
            throw infeasible_error("separation produced an unsatisfiable row");
        res.lp.rows.push_back(std::move(*row));
        if (++res.iterations > max_iterations)
            throw resource_error("cutting plane iteration cap of " + std::to_string(max_iterations) + " exceeded");
    }
}

}  // namespace rsnd
