#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cowpath/discovery.hpp"
#include "cowpath/errors.hpp"
#include "cowpath/rational.hpp"
#include "cowpath/strategy.hpp"

namespace cowpath {

/// How a supremum is reached.
enum class SupKind {
    attained,           ///< a concrete argument achieves the value
    right_limit,        ///< approached from the right of an open endpoint
    limit_at_infinity,  ///< limit of an increasing sequence of terms
};

inline const char* to_string(SupKind kind) {
    switch (kind) {
    case SupKind::attained: return "attained";
    case SupKind::right_limit: return "right_limit";
    case SupKind::limit_at_infinity: return "limit_at_infinity";
    }
    return "?";
}

/// Where a supremum is reached: a term index plus a textual description of
/// the delta/length side. index is -1 for limits at infinity.
struct RatioWitness {
    std::int64_t index = -1;
    std::string delta_description;
};

/// A supremum value with attainment metadata.
///
/// When certified is true a family-specific tail argument covers every term
/// beyond the horizon and value is exactly the supremum; otherwise value is
/// a valid lower bound obtained from the first horizon_used terms.
struct RatioResult {
    Rational value;
    SupKind kind = SupKind::attained;
    RatioWitness witness;
    bool certified = false;
    std::int64_t horizon_used = 0;
};

namespace detail {

struct SupTracker {
    std::optional<RatioResult> best;

    /// Keeps the first candidate on ties: callers feed candidates in
    /// (index, delta) order, which makes witnesses deterministic.
    void offer(Rational value, SupKind kind, std::int64_t index, std::string delta) {
        if (!best || value > best->value) {
            best = RatioResult{std::move(value), kind, {index, std::move(delta)}, false, 0};
        }
    }
};

inline void require_valid(const Strategy& s, std::int64_t horizon) {
    const auto report = validate_strategy(s, std::max<std::int64_t>(horizon, 2));
    if (!report.valid) {
        throw InvalidStrategyError("invalid strategy " + s.describe() + ": " +
                                   report.first_violation->second + " at index " +
                                   std::to_string(report.first_violation->first));
    }
}

} // namespace detail

// --------------------------------------------------------------------------
// Competitive ratio
// --------------------------------------------------------------------------

/// Finite-horizon part of the competitive ratio: the supremum of
///   {2 x_0 + 1}  u  {1 + 2 T_{n+1} / x_n : 0 <= n <= horizon}.
/// The first candidate is the hider at distance 1 on branch 1 (attained);
/// the n-th term is the hider just past x_n on branch n mod 2 (right limit).
/// Nondecreasing in the horizon and never above the certified value.
inline RatioResult competitive_ratio_horizon(const Strategy& s, std::int64_t horizon) {
    detail::SupTracker sup;
    sup.offer(Rational(2) * s.segment(0) + Rational(1), SupKind::attained, 0,
              "hider at distance 1 on branch 1");

    std::int64_t n_max = horizon;
    if (auto last = s.max_index()) n_max = std::min(n_max, *last - 2);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const Rational term = Rational(1) + Rational(2) * s.prefix_sum(n + 1) / s.segment(n);
        sup.offer(term, SupKind::right_limit, n,
                  "hider distance -> x" + std::to_string(n) + "^+ on branch " +
                      std::to_string(n % 2));
    }
    RatioResult result = *sup.best;
    result.horizon_used = n_max;
    return result;
}

/// cr(S), the worst-case locate cost over hiders divided by hider distance.
///
/// Geometric strategies are certified with the closed form 1 + 2a^2/(a-1)
/// (the per-n terms increase to that limit). Aggressive strategies are
/// certified with value 9: every per-n term equals 9 exactly because each
/// competitive constraint is tight. Explicit strategies get the
/// finite-horizon lower bound, uncertified.
inline RatioResult competitive_ratio(const Strategy& s, std::int64_t horizon = kDefaultHorizon) {
    detail::require_valid(s, horizon);
    switch (s.family()) {
    case Strategy::Family::geometric: {
        const Rational a = s.alpha();
        return {Rational(1) + Rational(2) * a * a / (a - Rational(1)),
                SupKind::limit_at_infinity,
                {-1, "n -> infinity"},
                true,
                horizon};
    }
    case Strategy::Family::aggressive:
        return {Rational(9), SupKind::limit_at_infinity, {-1, "n -> infinity"}, true, horizon};
    case Strategy::Family::explicit_prefix:
        return competitive_ratio_horizon(s, horizon);
    }
    throw Error("unreachable");
}

// --------------------------------------------------------------------------
// Discovery ratio against all strategies
// --------------------------------------------------------------------------

/// Finite-horizon part of dr(X, Sigma): the supremum over 1 <= i <= horizon
/// of (2 T_{i-1} + x_{i-2}) / (x_{i-1} + x_{i-2}), each term being the
/// right-limit of D(X, l) / l as l enters discovery piece i.
inline RatioResult discovery_ratio_all_horizon(const Strategy& s, std::int64_t horizon) {
    detail::SupTracker sup;
    std::int64_t i_max = horizon;
    if (auto last = s.max_index()) i_max = std::min(i_max, *last);
    if (i_max < 1) {
        throw InvalidParameterError("discovery ratio needs piece 1; horizon or prefix too short");
    }
    for (std::int64_t i = 1; i <= i_max; ++i) {
        const Rational term = (Rational(2) * s.prefix_sum(i - 1) + s.segment(i - 2)) /
                              (s.segment(i - 1) + s.segment(i - 2));
        sup.offer(term, SupKind::right_limit, i, "delta -> 0^+");
    }
    RatioResult result = *sup.best;
    result.horizon_used = i_max;
    return result;
}

/// dr(X, Sigma), the discovery ratio against the class of all strategies.
///
/// Geometric: per-i terms increase, certified with the closed-form limit
/// (2a^2 + a - 1)/(a^2 - 1). Aggressive: the parameter t cancels from every
/// term; terms are 2, then 9i/(3i+2) increasing to the certified value 3.
inline RatioResult discovery_ratio_all(const Strategy& s, std::int64_t horizon = kDefaultHorizon) {
    detail::require_valid(s, horizon);
    switch (s.family()) {
    case Strategy::Family::geometric: {
        const Rational a = s.alpha();
        return {(Rational(2) * a * a + a - Rational(1)) / (a * a - Rational(1)),
                SupKind::limit_at_infinity,
                {-1, "i -> infinity"},
                true,
                horizon};
    }
    case Strategy::Family::aggressive:
        return {Rational(3), SupKind::limit_at_infinity, {-1, "i -> infinity"}, true, horizon};
    case Strategy::Family::explicit_prefix:
        return discovery_ratio_all_horizon(s, horizon);
    }
    throw Error("unreachable");
}

// --------------------------------------------------------------------------
// Discovery ratio against the 9-competitive class
// --------------------------------------------------------------------------

/// Supremum over delta in (0, x_i - x_{i-2}] of the piece-i functional
///   F_i(X, delta) = (2 T_{i-1} + x_{i-2} + delta) / d*(x_{i-1} + x_{i-2} + delta).
///
/// d* is piecewise linear in l with upward jumps where the forced turn count
/// m* increases, so the delta range is split at those boundaries; on each
/// sub-piece F_i is a monotone Moebius function of delta, fully covered by
/// its endpoint values and one-sided limits. Open left ends contribute right
/// limits, closed right ends contribute attained values.
inline RatioResult discovery_ratio_sigma9_term(const Strategy& s, std::int64_t i) {
    if (i < 1) throw InvalidParameterError("sigma9 term index must be >= 1");
    const Rational numerator_base = Rational(2) * s.prefix_sum(i - 1) + s.segment(i - 2);
    const Rational l_start = s.segment(i - 1) + s.segment(i - 2);
    const Rational l_end = s.segment(i) + s.segment(i - 1);
    if (l_end <= l_start) {
        throw InvalidStrategyError("piece " + std::to_string(i) + " of " + s.describe() +
                                   " is empty (x" + std::to_string(i) + " <= x" +
                                   std::to_string(i - 2) + ")");
    }

    detail::SupTracker sup;
    Rational a = l_start;
    while (a < l_end) {
        const Rational threshold = detail::next_turn_threshold_above(a);
        const Rational b = std::min(threshold, l_end);
        const Rational factor = detail::dstar_factor(min_turns(b)); // m* is constant on (a, b]

        const Rational delta_a = a - l_start;
        sup.offer((numerator_base + delta_a) / (factor * a), SupKind::right_limit, i,
                  delta_a.is_zero() ? "delta -> 0^+" : "delta -> " + delta_a.str() + "^+");
        const Rational delta_b = b - l_start;
        sup.offer((numerator_base + delta_b) / (factor * b), SupKind::attained, i,
                  "delta = " + delta_b.str());
        a = b;
    }
    RatioResult result = *sup.best;
    result.horizon_used = i;
    return result;
}

/// dr(X, Sigma_9) restricted to piece indices i >= i_min, over a finite
/// horizon of pieces. Membership of X itself in Sigma_9 is not required (the
/// functional is well defined either way; the CLI warns on non-members).
///
/// Certified cases:
///  - aggressive t = 4: the per-i suprema are 8/5 for i = 1 and
///    g(i) = 9i(3i+5) / ((3i+2)(6i+4)) for i >= 2. The quadratic
///    9i^2 - 33i + 64 has negative discriminant, so g(i) < 8/5 for every i;
///    g increases up to i = 3 and decreases from there on. Hence the full
///    supremum is 8/5, and a restricted supremum is exact once the horizon
///    reaches max(i_min, 3).
///  - geometric alpha = 2, unrestricted: terms are 2, 7/3, 32/15, 34/15, and
///    for i >= 5 the forced turn count on piece i is at least 2 while the
///    piece ratio is below 3, bounding every later term by 99/48 < 7/3.
inline RatioResult discovery_ratio_sigma9_from(const Strategy& s, std::int64_t horizon,
                                               std::int64_t i_min) {
    detail::require_valid(s, horizon);
    if (i_min < 1) throw InvalidParameterError("sigma9 restriction must start at i >= 1");

    std::int64_t i_max = horizon;
    if (auto last = s.max_index()) i_max = std::min(i_max, *last);
    if (i_max < i_min) {
        throw InvalidParameterError("sigma9 horizon " + std::to_string(i_max) +
                                    " is below the restriction i >= " + std::to_string(i_min));
    }

    detail::SupTracker sup;
    for (std::int64_t i = i_min; i <= i_max; ++i) {
        const RatioResult term = discovery_ratio_sigma9_term(s, i);
        sup.offer(term.value, term.kind, term.witness.index, term.witness.delta_description);
    }
    RatioResult result = *sup.best;
    result.horizon_used = i_max;

    const bool aggressive4 =
        s.family() == Strategy::Family::aggressive && s.t_param() == Rational(4);
    const bool doubling = s.family() == Strategy::Family::geometric && s.alpha() == Rational(2);
    if (aggressive4 && i_max >= std::max<std::int64_t>(i_min, 3)) {
        result.certified = true;
        if (i_min == 1 && result.value != Rational(8, 5)) {
            throw Error("certified supremum mismatch for aggressive(4)");
        }
    } else if (doubling && i_min == 1 && i_max >= 4) {
        result.certified = true;
        if (result.value != Rational(7, 3)) {
            throw Error("certified supremum mismatch for geometric(2)");
        }
    }
    return result;
}

/// dr(X, Sigma_9), the discovery ratio against the 9-competitive class.
inline RatioResult discovery_ratio_sigma9(const Strategy& s,
                                          std::int64_t horizon = kDefaultHorizon) {
    return discovery_ratio_sigma9_from(s, horizon, 1);
}

// --------------------------------------------------------------------------
// Pairwise discovery ratio
// --------------------------------------------------------------------------

/// dr(X, Y) over l in (0, horizon_l]: the supremum of D(X, l) / D(Y, l).
///
/// On both profiles the cost is l plus a piece-constant offset, so over the
/// merged breakpoint set the ratio is a monotone Moebius function of l on
/// each common piece: a constant piece is attained throughout, a decreasing
/// piece contributes the right-limit at its left end, an increasing piece
/// its right endpoint. The result is horizon-bounded (certified = false);
/// witness.index is the ordinal of the merged piece.
inline RatioResult discovery_ratio_pair(const Strategy& x, const Strategy& y,
                                        const Rational& horizon_l,
                                        std::int64_t validation_horizon = kDefaultHorizon) {
    detail::require_valid(x, validation_horizon);
    detail::require_valid(y, validation_horizon);
    const DiscoveryProfile px = discovery_profile(x, horizon_l);
    const DiscoveryProfile py = discovery_profile(y, horizon_l);

    std::vector<Rational> cuts;
    for (const auto& piece : px.pieces) cuts.push_back(piece.l_start);
    for (const auto& piece : py.pieces) cuts.push_back(piece.l_start);
    cuts.push_back(horizon_l);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Offset of D(S, l) - l on the piece covering (a, b].
    auto offset_at = [](const DiscoveryProfile& profile, const Rational& a) {
        for (const auto& piece : profile.pieces) {
            if (piece.l_start <= a && a < piece.l_end) {
                return piece.cost_start - piece.l_start;
            }
        }
        throw Error("merged breakpoint escaped both profiles");
    };

    detail::SupTracker sup;
    std::int64_t ordinal = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k, ++ordinal) {
        const Rational& a = cuts[k];
        const Rational& b = cuts[k + 1];
        const Rational bx = offset_at(px, a);
        const Rational by = offset_at(py, a);
        if (bx == by) {
            sup.offer(Rational(1), SupKind::attained, ordinal, "l = " + b.str());
        } else if (bx > by) {
            sup.offer((bx + a) / (by + a), SupKind::right_limit, ordinal, "l -> " + a.str() + "^+");
        } else {
            sup.offer((bx + b) / (by + b), SupKind::attained, ordinal, "l = " + b.str());
        }
    }
    RatioResult result = *sup.best;
    result.horizon_used = ordinal;
    return result;
}

// --------------------------------------------------------------------------
// Tradeoff curve and the prefix-forcing bound
// --------------------------------------------------------------------------

/// One point of the competitive-vs-discovery tradeoff realized by G_alpha.
struct TradeoffPoint {
    Rational alpha;
    Rational cr;       ///< 1 + 2 alpha^2 / (alpha - 1)
    Rational dr_sigma; ///< (2 alpha^2 + alpha - 1) / (alpha^2 - 1)
};

inline TradeoffPoint geometric_tradeoff(const Rational& alpha) {
    if (alpha <= Rational(1)) {
        throw InvalidParameterError("tradeoff requires alpha > 1, got " + alpha.str());
    }
    return {alpha,
            Rational(1) + Rational(2) * alpha * alpha / (alpha - Rational(1)),
            (Rational(2) * alpha * alpha + alpha - Rational(1)) / (alpha * alpha - Rational(1))};
}

/// Evenly spaced rational grid, endpoints included. Equal endpoints collapse
/// to a single point.
inline std::vector<TradeoffPoint> tradeoff_curve(const Rational& alpha_min,
                                                 const Rational& alpha_max, std::int64_t steps) {
    if (alpha_min <= Rational(1) || alpha_min > alpha_max) {
        throw InvalidParameterError("tradeoff grid requires 1 < alpha_min <= alpha_max");
    }
    if (steps < 1) throw InvalidParameterError("tradeoff grid requires steps >= 1");
    if (alpha_min == alpha_max) return {geometric_tradeoff(alpha_min)};

    const Rational step = (alpha_max - alpha_min) / Rational(steps);
    std::vector<TradeoffPoint> points;
    points.reserve(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t j = 0; j <= steps; ++j) {
        points.push_back(geometric_tradeoff(alpha_min + step * Rational(j)));
    }
    return points;
}

/// Lower bound on dr(X, Sigma_9) for any 9-competitive X that matches the
/// aggressive strategy R_4 on indices 0..j-1 and has segment j equal to xj:
/// the piece-(j+1) functional evaluated at delta -> 0^+,
///   (2 T_{j-1}(R_4) + 2 xj + xbar_{j-1}) (3j+5) / ((xj + xbar_{j-1}) (6j+4)).
/// Strictly decreasing in xj; at xj = xbar_j it equals (9j+9)/(6j+4), which
/// stays above 8/5 exactly for j <= 4 — deviating from the R_4 prefix before
/// index 5 forfeits optimality.
inline Rational prefix_deviation_bound(std::int64_t j, const Rational& xj) {
    if (j < 1) throw InvalidParameterError("prefix deviation index must be >= 1");
    if (xj <= Rational(0)) throw InvalidParameterError("segment must be positive, got " + xj.str());
    const Strategy r4 = Strategy::aggressive(Rational(4));
    if (xj > r4.segment(j)) {
        throw InvalidParameterError("segment " + xj.str() + " exceeds the reach limit " +
                                    r4.segment(j).str() + " at index " + std::to_string(j));
    }
    const Rational t_prev = r4.prefix_sum(j - 1);
    const Rational x_prev = r4.segment(j - 1);
    return (Rational(2) * t_prev + Rational(2) * xj + x_prev) * Rational(3 * j + 5) /
           ((xj + x_prev) * Rational(6 * j + 4));
}

} // namespace cowpath
