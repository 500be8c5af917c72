#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cowpath/errors.hpp"
#include "cowpath/rational.hpp"

namespace cowpath {

/// Horizon used by ratio and membership computations when none is given.
/// Every supremum handled here either stabilizes or is certified by a tail
/// argument well before this many iterations.
inline constexpr std::int64_t kDefaultHorizon = 64;

/// Geometric continuation of an explicit prefix: terms base * ratio^k.
struct GeometricTail {
    Rational base;
    Rational ratio;
};

/// A linear-search strategy: the rule producing the search segments
/// x_0, x_1, ... (iteration i explores branch i mod 2 to depth x_i and
/// returns to the origin). Values are immutable after construction and all
/// queries are pure, so a Strategy may be shared freely across threads.
///
/// Conventions: segment(n) = 0 and prefix_sum(n) = 0 for n < 0.
class Strategy {
public:
    enum class Family { geometric, aggressive, explicit_prefix };

    /// G_alpha = (1, alpha, alpha^2, ...); requires alpha > 1.
    static Strategy geometric(Rational alpha) {
        if (alpha <= Rational(1)) {
            throw InvalidParameterError("geometric strategy requires alpha > 1, got " + alpha.str());
        }
        Strategy s(Family::geometric);
        s.alpha_ = std::move(alpha);
        return s;
    }

    /// R_t with x_n = t(1 + n/2)2^n; requires 1 <= t <= 4. Every competitive
    /// constraint x_n <= 3x_{n-1} - T_{n-2} is tight by construction, so R_t
    /// stays 9-competitive while searching as deep as that allows.
    static Strategy aggressive(Rational t) {
        if (t < Rational(1) || t > Rational(4)) {
            throw InvalidParameterError("aggressive strategy requires t in [1, 4], got " + t.str());
        }
        Strategy s(Family::aggressive);
        s.t_ = std::move(t);
        return s;
    }

    /// Explicit segment list, optionally continued by a geometric tail.
    /// Entries must be positive; the x_{i+2} > x_i validity checks are
    /// deferred to validate_strategy. Without a tail the strategy is a
    /// finite object: queries past the prefix raise OutOfRangeError.
    static Strategy explicit_prefix(std::vector<Rational> prefix,
                                    std::optional<GeometricTail> tail = std::nullopt) {
        if (prefix.empty()) {
            throw InvalidParameterError("explicit strategy requires a nonempty prefix");
        }
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (prefix[i] <= Rational(0)) {
                throw InvalidParameterError("explicit strategy segment x" + std::to_string(i) +
                                            " must be positive, got " + prefix[i].str());
            }
        }
        if (tail && (tail->base <= Rational(0) || tail->ratio <= Rational(0))) {
            throw InvalidParameterError("geometric tail requires base > 0 and ratio > 0");
        }
        Strategy s(Family::explicit_prefix);
        s.prefix_ = std::move(prefix);
        s.tail_ = std::move(tail);
        s.prefix_sums_.reserve(s.prefix_.size());
        Rational acc(0);
        for (const auto& x : s.prefix_) {
            acc += x;
            s.prefix_sums_.push_back(acc);
        }
        return s;
    }

    Family family() const { return family_; }

    const Rational& alpha() const { return alpha_; }
    const Rational& t_param() const { return t_; }
    const std::vector<Rational>& prefix() const { return prefix_; }
    const std::optional<GeometricTail>& tail() const { return tail_; }

    /// True when segment(n) is defined; only finite explicit strategies can
    /// run out of segments.
    bool has_segment(std::int64_t n) const {
        if (n < 0 || family_ != Family::explicit_prefix || tail_) return true;
        return n < static_cast<std::int64_t>(prefix_.size());
    }

    /// Largest defined index, or nullopt for the infinite families.
    std::optional<std::int64_t> max_index() const {
        if (family_ != Family::explicit_prefix || tail_) return std::nullopt;
        return static_cast<std::int64_t>(prefix_.size()) - 1;
    }

    /// The search segment x_n (0 for n < 0).
    Rational segment(std::int64_t n) const {
        if (n < 0) return Rational(0);
        switch (family_) {
        case Family::geometric:
            return alpha_.pow(n);
        case Family::aggressive:
            // t (1 + n/2) 2^n, kept exact via (n+2)/2.
            return t_ * Rational(n + 2, 2) * pow2(n);
        case Family::explicit_prefix:
            if (n < static_cast<std::int64_t>(prefix_.size())) {
                return prefix_[static_cast<std::size_t>(n)];
            }
            if (!tail_) {
                throw OutOfRangeError("explicit strategy has no segment x" + std::to_string(n) +
                                      " (prefix length " + std::to_string(prefix_.size()) + ")");
            }
            return tail_->base * tail_->ratio.pow(n - static_cast<std::int64_t>(prefix_.size()));
        }
        throw Error("unreachable");
    }

    /// T_n = x_0 + ... + x_n (0 for n < 0).
    Rational prefix_sum(std::int64_t n) const {
        if (n < 0) return Rational(0);
        switch (family_) {
        case Family::geometric:
            // (alpha^{n+1} - 1) / (alpha - 1)
            return (alpha_.pow(n + 1) - Rational(1)) / (alpha_ - Rational(1));
        case Family::aggressive:
            // t (n+1) 2^n
            return t_ * Rational(n + 1) * pow2(n);
        case Family::explicit_prefix: {
            const auto size = static_cast<std::int64_t>(prefix_.size());
            if (n < size) return prefix_sums_[static_cast<std::size_t>(n)];
            if (!tail_) {
                throw OutOfRangeError("explicit strategy has no segment x" + std::to_string(n) +
                                      " (prefix length " + std::to_string(prefix_.size()) + ")");
            }
            const std::int64_t k = n - size; // tail terms 0..k
            Rational tail_sum = tail_->ratio == Rational(1)
                                    ? tail_->base * Rational(k + 1)
                                    : tail_->base * (tail_->ratio.pow(k + 1) - Rational(1)) /
                                          (tail_->ratio - Rational(1));
            return prefix_sums_.back() + tail_sum;
        }
        }
        throw Error("unreachable");
    }

    /// Short human-readable description, e.g. "geometric(alpha = 2)".
    std::string describe() const {
        switch (family_) {
        case Family::geometric:
            return "geometric(alpha = " + alpha_.str() + ")";
        case Family::aggressive:
            return "aggressive(t = " + t_.str() + ")";
        case Family::explicit_prefix: {
            std::string out = "explicit(";
            for (std::size_t i = 0; i < prefix_.size(); ++i) {
                if (i > 0) out += ", ";
                out += prefix_[i].str();
            }
            out += ')';
            if (tail_) {
                out += " + tail(base = " + tail_->base.str() + ", ratio = " + tail_->ratio.str() + ")";
            }
            return out;
        }
        }
        return {};
    }

private:
    explicit Strategy(Family family) : family_(family) {}

    Family family_;
    Rational alpha_{0};
    Rational t_{0};
    std::vector<Rational> prefix_;
    std::vector<Rational> prefix_sums_;
    std::optional<GeometricTail> tail_;
};

/// Result of the basic validity check (x_i > 0 and x_{i+2} > x_i).
struct ValidityReport {
    bool valid = false;
    /// Index of the offending segment and a short reason, when invalid.
    std::optional<std::pair<std::int64_t, std::string>> first_violation;
    /// Largest index actually inspected (capped by a finite prefix).
    std::int64_t horizon_checked = 0;
    /// True when the verdict holds for all n, not just the checked range:
    /// geometric and aggressive segments grow strictly and diverge.
    bool certified = false;
};

/// Checks x_i > 0 for i <= horizon and x_{i+2} > x_i for i + 2 <= horizon.
/// Finite explicit strategies are checked over their whole prefix (the
/// horizon is capped, never an error).
inline ValidityReport validate_strategy(const Strategy& s, std::int64_t horizon = kDefaultHorizon) {
    if (horizon < 2) throw InvalidParameterError("validate_strategy requires horizon >= 2");

    ValidityReport report;
    std::int64_t effective = horizon;
    if (auto last = s.max_index()) effective = std::min(effective, *last);
    report.horizon_checked = effective;

    for (std::int64_t i = 0; i <= effective; ++i) {
        if (s.segment(i) <= Rational(0)) {
            report.first_violation = {i, "x" + std::to_string(i) + " <= 0"};
            return report;
        }
    }
    for (std::int64_t i = 0; i + 2 <= effective; ++i) {
        if (s.segment(i + 2) <= s.segment(i)) {
            report.first_violation = {i + 2, "x" + std::to_string(i + 2) +
                                                 " <= x" + std::to_string(i)};
            return report;
        }
    }
    report.valid = true;
    report.certified = s.family() != Strategy::Family::explicit_prefix;
    return report;
}

/// Result of the 9-competitiveness membership check.
struct Sigma9Report {
    /// No constraint violated within the checked horizon.
    bool member = false;
    /// Indices n >= 1 where x_n = 3x_{n-1} - T_{n-2} holds with equality.
    std::vector<std::int64_t> tight_indices;
    /// First violated constraint: index and (negative) slack.
    std::optional<std::pair<std::int64_t, Rational>> first_violation;
    std::int64_t horizon_checked = 0;
    /// True when the verdict holds for the infinite constraint set: any
    /// found violation is conclusive; membership is certified only for the
    /// aggressive family (constraints tight for all n by construction) and
    /// for geometric alpha = 2 (slack is the constant 1 for every n).
    bool certified = false;
};

/// Membership test against the competitively optimal class: checks
/// 1 <= x_0 <= 4, x_1 >= 1 and x_n <= 3x_{n-1} - T_{n-2} for 1 <= n <= horizon.
/// All comparisons are non-strict, and exact.
inline Sigma9Report validate_sigma9(const Strategy& s, std::int64_t horizon = kDefaultHorizon) {
    if (horizon < 1) throw InvalidParameterError("validate_sigma9 requires horizon >= 1");

    Sigma9Report report;
    std::int64_t effective = horizon;
    if (auto last = s.max_index()) effective = std::min(effective, *last);
    report.horizon_checked = effective;

    auto fail = [&](std::int64_t index, Rational slack) {
        report.first_violation = {index, std::move(slack)};
        report.member = false;
        report.certified = true; // a violation settles non-membership outright
    };

    const Rational x0 = s.segment(0);
    if (x0 < Rational(1)) {
        fail(0, x0 - Rational(1));
        return report;
    }
    if (x0 > Rational(4)) {
        fail(0, Rational(4) - x0);
        return report;
    }
    if (effective >= 1 && s.segment(1) < Rational(1)) {
        fail(1, s.segment(1) - Rational(1));
        return report;
    }
    for (std::int64_t n = 1; n <= effective; ++n) {
        const Rational slack = Rational(3) * s.segment(n - 1) - s.prefix_sum(n - 2) - s.segment(n);
        if (slack < Rational(0)) {
            fail(n, slack);
            return report;
        }
        if (slack.is_zero()) report.tight_indices.push_back(n);
    }

    report.member = true;
    report.certified = s.family() == Strategy::Family::aggressive ||
                       (s.family() == Strategy::Family::geometric && s.alpha() == Rational(2));
    return report;
}

} // namespace cowpath
