#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cowpath/errors.hpp"
#include "cowpath/rational.hpp"

namespace cowpath {

enum class Relation { less_equal, greater_equal, equal };
enum class Sense { minimize, maximize };

struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::less_equal;
    Rational rhs;
};

struct Objective {
    std::vector<Rational> coefficients;
    Sense sense = Sense::minimize;
    Rational constant; ///< added to the optimal value as-is
};

/// Exact-rational linear program over implicitly nonnegative variables.
/// Every program built here carries explicit lower-bound rows (x_i >= 1), so
/// the implicit x >= 0 never binds; it just keeps the tableau encoding
/// direct, with no free-variable splitting.
struct LinearProgram {
    std::size_t num_vars = 0;
    Objective objective;
    std::vector<Constraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus status) {
    switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    }
    return "?";
}

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::optional<Rational> value;                  ///< objective(assignment) + constant
    std::optional<std::vector<Rational>> assignment;
};

namespace detail {

/// Dense two-phase simplex over exact rationals with Bland's anti-cycling
/// rule. The instances solved here have at most a few dozen rows, so no
/// sparsity or revised-form machinery is warranted; exactness and
/// determinism are the point.
class SimplexTableau {
public:
    explicit SimplexTableau(const LinearProgram& lp) : num_structural_(lp.num_vars) {
        // Normalize every row to nonnegative rhs, then attach slack /
        // surplus / artificial columns in a fixed order.
        struct Row {
            std::vector<Rational> coefficients;
            Relation relation;
            Rational rhs;
        };
        std::vector<Row> rows;
        rows.reserve(lp.constraints.size());
        for (const auto& c : lp.constraints) {
            Row row{c.coefficients, c.relation, c.rhs};
            if (row.rhs < Rational(0)) {
                for (auto& a : row.coefficients) a = -a;
                row.rhs = -row.rhs;
                if (row.relation == Relation::less_equal) row.relation = Relation::greater_equal;
                else if (row.relation == Relation::greater_equal) row.relation = Relation::less_equal;
            }
            rows.push_back(std::move(row));
        }

        std::size_t num_slack = 0;
        std::size_t num_artificial = 0;
        for (const auto& row : rows) {
            if (row.relation != Relation::equal) ++num_slack;
            if (row.relation != Relation::less_equal) ++num_artificial;
        }
        num_cols_ = num_structural_ + num_slack + num_artificial;
        first_artificial_ = num_structural_ + num_slack;

        matrix_.assign(rows.size(), std::vector<Rational>(num_cols_ + 1, Rational(0)));
        basis_.assign(rows.size(), 0);

        std::size_t slack_col = num_structural_;
        std::size_t artificial_col = first_artificial_;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t j = 0; j < num_structural_; ++j) {
                matrix_[r][j] = rows[r].coefficients[j];
            }
            matrix_[r][num_cols_] = rows[r].rhs;
            switch (rows[r].relation) {
            case Relation::less_equal:
                matrix_[r][slack_col] = Rational(1);
                basis_[r] = slack_col++;
                break;
            case Relation::greater_equal:
                matrix_[r][slack_col] = Rational(-1);
                ++slack_col;
                matrix_[r][artificial_col] = Rational(1);
                basis_[r] = artificial_col++;
                break;
            case Relation::equal:
                matrix_[r][artificial_col] = Rational(1);
                basis_[r] = artificial_col++;
                break;
            }
        }
    }

    /// Runs both phases; returns the status. On optimal, structural values
    /// can be read via assignment().
    LpStatus run(const std::vector<Rational>& min_costs) {
        // Phase 1: minimize the sum of artificials.
        if (first_artificial_ < num_cols_) {
            std::vector<Rational> phase1(num_cols_ + 1, Rational(0));
            for (std::size_t j = first_artificial_; j < num_cols_; ++j) phase1[j] = Rational(1);
            objective_ = std::move(phase1);
            price_out();
            if (iterate(/*allow_artificial=*/true) == LpStatus::unbounded) {
                throw Error("phase-1 objective cannot be unbounded"); // bounded below by 0
            }
            if (-objective_[num_cols_] > Rational(0)) return LpStatus::infeasible;
            expel_artificials();
        }

        // Phase 2: the caller's objective (as minimization).
        objective_.assign(num_cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < num_structural_; ++j) objective_[j] = min_costs[j];
        price_out();
        return iterate(/*allow_artificial=*/false);
    }

    std::vector<Rational> assignment() const {
        std::vector<Rational> x(num_structural_, Rational(0));
        for (std::size_t r = 0; r < matrix_.size(); ++r) {
            if (basis_[r] < num_structural_) x[basis_[r]] = matrix_[r][num_cols_];
        }
        return x;
    }

private:
    void price_out() {
        for (std::size_t r = 0; r < matrix_.size(); ++r) {
            const Rational cost = objective_[basis_[r]];
            if (!cost.is_zero()) {
                for (std::size_t j = 0; j <= num_cols_; ++j) {
                    objective_[j] -= cost * matrix_[r][j];
                }
            }
        }
    }

    LpStatus iterate(bool allow_artificial) {
        for (;;) {
            // Bland: entering column is the smallest index with a negative
            // reduced cost.
            std::size_t entering = num_cols_;
            const std::size_t limit = allow_artificial ? num_cols_ : first_artificial_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (objective_[j] < Rational(0)) {
                    entering = j;
                    break;
                }
            }
            if (entering == num_cols_) return LpStatus::optimal;

            // Ratio test; ties by the smallest basic variable index.
            std::size_t leaving = matrix_.size();
            Rational best_ratio(0);
            for (std::size_t r = 0; r < matrix_.size(); ++r) {
                if (matrix_[r][entering] <= Rational(0)) continue;
                const Rational ratio = matrix_[r][num_cols_] / matrix_[r][entering];
                if (leaving == matrix_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == matrix_.size()) return LpStatus::unbounded;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inverse = Rational(1) / matrix_[row][col];
        for (auto& entry : matrix_[row]) {
            if (!entry.is_zero()) entry *= inverse;
        }
        auto eliminate = [&](std::vector<Rational>& target) {
            if (target[col].is_zero()) return;
            const Rational factor = target[col];
            for (std::size_t j = 0; j <= num_cols_; ++j) {
                if (!matrix_[row][j].is_zero()) target[j] -= factor * matrix_[row][j];
            }
        };
        for (std::size_t r = 0; r < matrix_.size(); ++r) {
            if (r != row) eliminate(matrix_[r]);
        }
        eliminate(objective_);
        basis_[row] = col;
    }

    /// After phase 1, pivots every basic artificial out of the basis; a row
    /// with no usable non-artificial entry is redundant and dropped.
    void expel_artificials() {
        for (std::size_t r = 0; r < matrix_.size();) {
            if (basis_[r] < first_artificial_) {
                ++r;
                continue;
            }
            std::size_t col = first_artificial_;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (!matrix_[r][j].is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col == first_artificial_) {
                matrix_.erase(matrix_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            } else {
                pivot(r, col);
                ++r;
            }
        }
    }

    std::size_t num_structural_;
    std::size_t num_cols_ = 0;
    std::size_t first_artificial_ = 0;
    std::vector<std::vector<Rational>> matrix_; ///< rows, rhs in the last column
    std::vector<Rational> objective_;           ///< reduced costs, -(value) in the last column
    std::vector<std::size_t> basis_;
};

inline void check_well_formed(const LinearProgram& lp) {
    if (lp.num_vars == 0) throw InvalidParameterError("linear program needs at least one variable");
    if (lp.objective.coefficients.size() != lp.num_vars) {
        throw InvalidParameterError("objective has " +
                                    std::to_string(lp.objective.coefficients.size()) +
                                    " coefficients for " + std::to_string(lp.num_vars) + " variables");
    }
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        if (lp.constraints[i].coefficients.size() != lp.num_vars) {
            throw InvalidParameterError("constraint " + std::to_string(i) + " has " +
                                        std::to_string(lp.constraints[i].coefficients.size()) +
                                        " coefficients for " + std::to_string(lp.num_vars) +
                                        " variables");
        }
    }
}

} // namespace detail

/// Solves the program exactly. Deterministic: identical inputs take the same
/// pivot path (Bland's rule over a fixed column order) and yield identical
/// assignments.
inline LpSolution solve_lp(const LinearProgram& lp) {
    detail::check_well_formed(lp);

    std::vector<Rational> min_costs = lp.objective.coefficients;
    if (lp.objective.sense == Sense::maximize) {
        for (auto& c : min_costs) c = -c;
    }

    detail::SimplexTableau tableau(lp);
    const LpStatus status = tableau.run(min_costs);
    if (status != LpStatus::optimal) return {status, std::nullopt, std::nullopt};

    std::vector<Rational> x = tableau.assignment();
    Rational value = lp.objective.constant;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        value += lp.objective.coefficients[j] * x[j];
    }
    return {LpStatus::optimal, value, std::move(x)};
}

/// Plain-text rendering for debugging; not a stability-guaranteed format.
inline std::string to_text(const LinearProgram& lp) {
    auto row_text = [](const std::vector<Rational>& coefficients) {
        std::string out;
        for (std::size_t j = 0; j < coefficients.size(); ++j) {
            if (j > 0) out += ' ';
            out += coefficients[j].str();
        }
        return out;
    };
    std::string out = "vars: " + std::to_string(lp.num_vars) + "\n";
    out += lp.objective.sense == Sense::minimize ? "minimize: " : "maximize: ";
    out += row_text(lp.objective.coefficients);
    if (!lp.objective.constant.is_zero()) out += " + " + lp.objective.constant.str();
    out += "\nsubject to:\n";
    for (const auto& c : lp.constraints) {
        out += "  " + row_text(c.coefficients);
        out += c.relation == Relation::less_equal    ? " <= "
               : c.relation == Relation::greater_equal ? " >= "
                                                       : " = ";
        out += c.rhs.str() + "\n";
    }
    return out;
}

} // namespace cowpath
