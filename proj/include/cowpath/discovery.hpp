#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cowpath/errors.hpp"
#include "cowpath/rational.hpp"
#include "cowpath/strategy.hpp"

namespace cowpath {

namespace detail {
/// Iteration cap for scans over strategy segments. Valid strategies diverge,
/// so any in-range query terminates far earlier; the cap turns a
/// never-covering input (e.g. a tail with ratio <= 1) into an error instead
/// of a hang.
inline constexpr std::int64_t kScanLimit = 1 << 20;

[[noreturn]] inline void throw_not_covered(const std::string& what) {
    throw OutOfRangeError(what + " is never covered by this strategy");
}
} // namespace detail

/// Target placement: a branch (0 or 1) and a distance >= 1 from the origin.
struct Hider {
    Hider(int branch_in, Rational distance_in)
        : branch(branch_in), distance(std::move(distance_in)) {
        if (branch != 0 && branch != 1) {
            throw InvalidParameterError("hider branch must be 0 or 1");
        }
        if (distance < Rational(1)) {
            throw InvalidParameterError("hider distance must be at least 1, got " + distance.str());
        }
    }

    int branch;
    Rational distance;
};

/// Total distance walked until the searcher first passes over the hider:
/// 2 T_{k-1} + d where k is the first iteration with parity H.branch and
/// x_k >= d. Assumes a valid strategy.
inline Rational locate_cost(const Strategy& s, const Hider& h) {
    Rational walked(0);
    for (std::int64_t i = 0; i <= detail::kScanLimit; ++i) {
        if (!s.has_segment(i)) {
            detail::throw_not_covered("hider at distance " + h.distance.str());
        }
        const Rational x = s.segment(i);
        if (i % 2 == h.branch && x >= h.distance) {
            return walked + h.distance;
        }
        walked += x + x;
    }
    detail::throw_not_covered("hider at distance " + h.distance.str());
}

/// Index of the discovery piece containing l: the smallest i >= 0 with
/// x_i + x_{i-1} >= l. Piece i covers l in (x_{i-1} + x_{i-2}, x_i + x_{i-1}];
/// boundaries belong to the earlier piece.
inline std::int64_t turns_to_discover(const Strategy& s, const Rational& l) {
    if (l <= Rational(0)) {
        throw InvalidParameterError("discovered length must be positive, got " + l.str());
    }
    for (std::int64_t i = 0; i <= detail::kScanLimit; ++i) {
        if (!s.has_segment(i)) {
            detail::throw_not_covered("length " + l.str());
        }
        if (s.segment(i) + s.segment(i - 1) >= l) return i;
    }
    detail::throw_not_covered("length " + l.str());
}

/// Cost at which the total explored length (both branches combined) first
/// reaches l: within piece i the cost is 2 T_{i-1} + (l - x_{i-1}). At piece
/// boundaries this returns the pre-jump value (the delta-interval is closed
/// on the right).
inline Rational discovery_cost(const Strategy& s, const Rational& l) {
    const std::int64_t i = turns_to_discover(s, l);
    return Rational(2) * s.prefix_sum(i - 1) + l - s.segment(i - 1);
}

/// One maximal interval of l on which the discovery cost is affine with
/// slope exactly 1: cost(l) = cost_start + (l - l_start) on (l_start, l_end].
struct ProfilePiece {
    std::int64_t index = 0;     ///< piece number i (turns before discovery)
    Rational l_start;           ///< x_{i-1} + x_{i-2} (exclusive)
    Rational l_end;             ///< min(x_i + x_{i-1}, horizon) (inclusive)
    Rational cost_start;        ///< right-limit of the cost at l_start
    /// Upward jump after the piece, x_i + x_{i-1} (tip-to-tip traversal
    /// through the origin); absent when the piece was cut at the horizon.
    std::optional<Rational> jump_after;
};

/// The discovery profile of a strategy up to a length horizon.
struct DiscoveryProfile {
    std::vector<ProfilePiece> pieces;
    Rational horizon;
};

/// Tabulates every piece with l_end <= horizon_l plus the piece containing
/// horizon_l, truncated. Raises OutOfRangeError when a finite explicit
/// strategy cannot cover horizon_l.
inline DiscoveryProfile discovery_profile(const Strategy& s, const Rational& horizon_l) {
    if (horizon_l <= Rational(0)) {
        throw InvalidParameterError("profile horizon must be positive, got " + horizon_l.str());
    }
    DiscoveryProfile profile;
    profile.horizon = horizon_l;
    for (std::int64_t i = 0; i <= detail::kScanLimit; ++i) {
        const Rational l_start = s.segment(i - 1) + s.segment(i - 2);
        if (l_start >= horizon_l) return profile;
        if (!s.has_segment(i)) {
            detail::throw_not_covered("profile horizon " + horizon_l.str());
        }
        ProfilePiece piece;
        piece.index = i;
        piece.l_start = l_start;
        piece.cost_start = Rational(2) * s.prefix_sum(i - 1) + s.segment(i - 2);
        const Rational natural_end = s.segment(i) + s.segment(i - 1);
        if (natural_end <= horizon_l) {
            piece.l_end = natural_end;
            piece.jump_after = s.segment(i) + s.segment(i - 1);
        } else {
            piece.l_end = horizon_l; // truncated: no jump inside the horizon
        }
        profile.pieces.push_back(std::move(piece));
    }
    detail::throw_not_covered("profile horizon " + horizon_l.str());
}

/// Minimum number of turns any 9-competitive strategy needs before it has
/// discovered total length l: 0 for l <= 4, otherwise the smallest n >= 1
/// with (3n+5) 2^n >= l.
inline std::int64_t min_turns(const Rational& l) {
    if (l <= Rational(0)) {
        throw InvalidParameterError("discovered length must be positive, got " + l.str());
    }
    if (l <= Rational(4)) return 0;
    std::int64_t n = 1;
    while (Rational(3 * n + 5) * pow2(n) < l) ++n;
    return n;
}

namespace detail {

/// Slope factor of the optimal discovery cost where m turns are forced:
/// d*(l) = l * (6m+4)/(3m+5) for m >= 1, and d*(l) = l in the turn-free
/// regime.
inline Rational dstar_factor(std::int64_t m) {
    return m == 0 ? Rational(1) : Rational(6 * m + 4, 3 * m + 5);
}

/// Smallest boundary of the forced-turn count strictly above l: l = 4
/// separates the turn-free regime, then (3n+5) 2^n for n >= 1.
inline Rational next_turn_threshold_above(const Rational& l) {
    if (l < Rational(4)) return Rational(4);
    std::int64_t n = 1;
    while (Rational(3 * n + 5) * pow2(n) <= l) ++n;
    return Rational(3 * n + 5) * pow2(n);
}

/// Right-limit of d* at l: the value of d*(l + eps) as eps -> 0+. d* jumps
/// upward at every forced-turn boundary, so this differs from d*(l) exactly
/// at those boundaries.
inline Rational dstar_right_limit(const Rational& l) {
    if (l < Rational(4)) return l;
    std::int64_t m = 1;
    while (Rational(3 * m + 5) * pow2(m) <= l) ++m;
    return l * dstar_factor(m);
}

} // namespace detail

/// d*(l): the minimum cost at which any 9-competitive strategy can discover
/// total length l. Equals l for l <= 4 and l (6m*+4)/(3m*+5) beyond.
inline Rational min_discovery_cost_value(const Rational& l) {
    if (l <= Rational(0)) {
        throw InvalidParameterError("discovered length must be positive, got " + l.str());
    }
    return l * detail::dstar_factor(min_turns(l));
}

/// d*(l) together with how it is attained: the forced turn count m*(l) and
/// the aggressive-family parameter t whose strategy R_t realizes the bound.
struct OptimalDiscovery {
    Rational l;
    std::int64_t m_star = 0;
    Rational d_star;
    Rational witness_t;
};

/// Computes d*(l), m*(l) and the witness t = l 2^{2-m*}/(3m*+5) (t in (1,4]
/// for l > 4; for l <= 4 the bound d* = l is realized by R_4 within its
/// first segment, so the witness defaults to 4). The witness is re-checked:
/// D(R_t, l) must equal d*(l) exactly.
inline OptimalDiscovery min_discovery_cost(const Rational& l) {
    OptimalDiscovery result;
    result.l = l;
    result.m_star = min_turns(l);
    result.d_star = min_discovery_cost_value(l);
    if (l <= Rational(4)) {
        result.witness_t = Rational(4);
    } else {
        result.witness_t = l * pow2(2 - result.m_star) / Rational(3 * result.m_star + 5);
        if (result.witness_t <= Rational(1) || result.witness_t > Rational(4)) {
            throw Error("witness t = " + result.witness_t.str() + " escaped (1, 4] at l = " + l.str());
        }
    }
    if (discovery_cost(Strategy::aggressive(result.witness_t), l) != result.d_star) {
        throw Error("witness strategy does not attain d*(" + l.str() + ")");
    }
    return result;
}

} // namespace cowpath
