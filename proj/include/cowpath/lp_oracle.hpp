#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cowpath/discovery.hpp"
#include "cowpath/errors.hpp"
#include "cowpath/lp.hpp"
#include "cowpath/rational.hpp"

namespace cowpath {

/// The segment-maximization program P_n: maximize x_n over 9-competitive
/// prefixes, i.e. subject to 1 <= x_0 <= 4, x_1 >= 1 and
/// x_i <= 3 x_{i-1} - sum_{j<=i-2} x_j for 1 <= i <= n. Its optimum is the
/// reach limit xbar_n = (n+2) 2^{n+1}, attained by the R_4 prefix with every
/// constraint tight.
inline LinearProgram build_max_segment_lp(std::int64_t n) {
    if (n < 0) throw InvalidParameterError("max-segment program needs n >= 0");
    const auto vars = static_cast<std::size_t>(n) + 1;

    LinearProgram lp;
    lp.num_vars = vars;
    lp.objective.sense = Sense::maximize;
    lp.objective.coefficients.assign(vars, Rational(0));
    lp.objective.coefficients[vars - 1] = Rational(1);

    auto zero_row = [vars] { return std::vector<Rational>(vars, Rational(0)); };
    auto add = [&lp](std::vector<Rational> row, Relation rel, Rational rhs) {
        lp.constraints.push_back({std::move(row), rel, std::move(rhs)});
    };

    auto x0_low = zero_row();
    x0_low[0] = Rational(1);
    add(x0_low, Relation::greater_equal, Rational(1));
    auto x0_high = zero_row();
    x0_high[0] = Rational(1);
    add(x0_high, Relation::less_equal, Rational(4));
    if (n >= 1) {
        auto x1_low = zero_row();
        x1_low[1] = Rational(1);
        add(x1_low, Relation::greater_equal, Rational(1));
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        // x_i - 3 x_{i-1} + sum_{j<=i-2} x_j <= 0
        auto row = zero_row();
        row[static_cast<std::size_t>(i)] = Rational(1);
        row[static_cast<std::size_t>(i - 1)] = Rational(-3);
        for (std::int64_t j = 0; j <= i - 2; ++j) row[static_cast<std::size_t>(j)] = Rational(1);
        add(std::move(row), Relation::less_equal, Rational(0));
    }
    return lp;
}

/// The discovery-cost program for "length l is first reached during
/// iteration n": minimize 2 sum_{i<=n-2} x_i + x_{n-1} + l subject to
/// x_n + x_{n-1} >= l, 1 <= x_0 <= 4, x_{i-2} <= x_i for 2 <= i <= n and
/// 1 <= x_i <= 3 x_{i-1} - sum_{j<=i-2} x_j for 1 <= i <= n. Only the
/// nontrivial regime l > 4 is modeled.
inline LinearProgram build_min_discovery_lp(const Rational& l, std::int64_t n) {
    if (l <= Rational(4)) {
        throw InvalidParameterError("discovery program is for l > 4; d*(l) = l below that");
    }
    if (n < 1) throw InvalidParameterError("discovery program needs n >= 1");
    const auto vars = static_cast<std::size_t>(n) + 1;

    LinearProgram lp;
    lp.num_vars = vars;
    lp.objective.sense = Sense::minimize;
    lp.objective.constant = l;
    lp.objective.coefficients.assign(vars, Rational(0));
    for (std::int64_t i = 0; i <= n - 2; ++i) {
        lp.objective.coefficients[static_cast<std::size_t>(i)] = Rational(2);
    }
    lp.objective.coefficients[static_cast<std::size_t>(n - 1)] = Rational(1);

    auto zero_row = [vars] { return std::vector<Rational>(vars, Rational(0)); };
    auto add = [&lp](std::vector<Rational> row, Relation rel, Rational rhs) {
        lp.constraints.push_back({std::move(row), rel, std::move(rhs)});
    };

    auto reach = zero_row();
    reach[static_cast<std::size_t>(n)] = Rational(1);
    reach[static_cast<std::size_t>(n - 1)] = Rational(1);
    add(std::move(reach), Relation::greater_equal, l);

    auto x0_low = zero_row();
    x0_low[0] = Rational(1);
    add(x0_low, Relation::greater_equal, Rational(1));
    auto x0_high = zero_row();
    x0_high[0] = Rational(1);
    add(x0_high, Relation::less_equal, Rational(4));

    for (std::int64_t i = 2; i <= n; ++i) {
        // x_{i-2} - x_i <= 0
        auto row = zero_row();
        row[static_cast<std::size_t>(i - 2)] = Rational(1);
        row[static_cast<std::size_t>(i)] = Rational(-1);
        add(std::move(row), Relation::less_equal, Rational(0));
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        auto low = zero_row();
        low[static_cast<std::size_t>(i)] = Rational(1);
        add(std::move(low), Relation::greater_equal, Rational(1));
        // x_i - 3 x_{i-1} + sum_{j<=i-2} x_j <= 0
        auto row = zero_row();
        row[static_cast<std::size_t>(i)] = Rational(1);
        row[static_cast<std::size_t>(i - 1)] = Rational(-3);
        for (std::int64_t j = 0; j <= i - 2; ++j) row[static_cast<std::size_t>(j)] = Rational(1);
        add(std::move(row), Relation::less_equal, Rational(0));
    }
    return lp;
}

/// Optimum of P_n, an LP-based route to the reach limit xbar_n.
inline Rational oracle_max_segment(std::int64_t n) {
    const LpSolution solution = solve_lp(build_max_segment_lp(n));
    if (solution.status != LpStatus::optimal) {
        throw Error("max-segment program P_" + std::to_string(n) + " reported " +
                    std::string(to_string(solution.status)));
    }
    return *solution.value;
}

/// LP route to d*(l): minimizes over the reaching iteration n in
/// [min_turns(l), n_max], skipping infeasible programs. Fully independent of
/// the closed form, which is the point — the two routes are compared in
/// tests and in the verification suite.
inline Rational oracle_min_discovery_cost(const Rational& l, std::int64_t n_max) {
    const std::int64_t n_min = min_turns(l);
    if (l <= Rational(4)) {
        throw InvalidParameterError("discovery oracle is for l > 4; d*(l) = l below that");
    }
    if (n_max < n_min) {
        throw InvalidParameterError("n_max = " + std::to_string(n_max) +
                                    " is below the forced turn count " + std::to_string(n_min));
    }
    std::optional<Rational> best;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        const LpSolution solution = solve_lp(build_min_discovery_lp(l, n));
        if (solution.status != LpStatus::optimal) continue;
        if (!best || *solution.value < *best) best = *solution.value;
    }
    if (!best) {
        throw OracleHorizonError("no feasible discovery program for l = " + l.str() +
                                 " up to n = " + std::to_string(n_max));
    }
    return *best;
}

} // namespace cowpath
