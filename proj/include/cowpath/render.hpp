#pragma once

#include <string>
#include <vector>

#include "cowpath/discovery.hpp"
#include "cowpath/ratio.hpp"
#include "cowpath/rational.hpp"
#include "cowpath/verify.hpp"

namespace cowpath {

/// CSV for the tradeoff curve: exact p/q columns first, decimal siblings
/// after, so downstream plotting never loses exactness. Row order follows
/// the grid; the output is byte-deterministic.
inline std::string tradeoff_csv(const std::vector<TradeoffPoint>& points) {
    std::string out = "alpha,cr,dr_sigma,alpha_decimal,cr_decimal,dr_sigma_decimal\n";
    for (const auto& p : points) {
        out += p.alpha.str() + ',' + p.cr.str() + ',' + p.dr_sigma.str() + ',' +
               p.alpha.decimal() + ',' + p.cr.decimal() + ',' + p.dr_sigma.decimal() + '\n';
    }
    return out;
}

/// CSV for a discovery profile. The jump column is empty for a piece cut at
/// the horizon: no jump occurs inside the tabulated range.
inline std::string profile_csv(const DiscoveryProfile& profile) {
    std::string out = "l_start,l_end,cost_start,jump_after\n";
    for (const auto& piece : profile.pieces) {
        out += piece.l_start.str() + ',' + piece.l_end.str() + ',' + piece.cost_start.str() + ',';
        if (piece.jump_after) out += piece.jump_after->str();
        out += '\n';
    }
    return out;
}

/// Ratio rendering used by structured reports: exact value, decimal, and
/// attainment metadata.
inline std::string describe_ratio(const RatioResult& r) {
    std::string out = r.value.str();
    if (!r.value.is_integer()) out += " (" + r.value.decimal() + ")";
    out += " [";
    out += to_string(r.kind);
    if (r.witness.index >= 0) out += " at i = " + std::to_string(r.witness.index);
    if (!r.witness.delta_description.empty()) out += ", " + r.witness.delta_description;
    out += r.certified ? "; certified]" : "; horizon-bounded]";
    return out;
}

inline std::string verification_line(const CheckResult& check) {
    std::string out = check.pass ? "[PASS] " : "[FAIL] ";
    out += check.name + ": expected " + check.expected.str();
    if (check.pass) {
        out += ", confirmed";
    } else {
        out += ", actual " + check.actual.str();
    }
    out += "  -- " + check.claim;
    return out;
}

inline std::string verification_csv(const VerificationReport& report) {
    std::string out = "name,expected,actual,pass,claim\n";
    for (const auto& check : report.checks) {
        std::string claim = check.claim;
        for (auto& c : claim) {
            if (c == ',') c = ';';
        }
        out += '"' + check.name + "\"," + check.expected.str() + ',' + check.actual.str() + ',' +
               (check.pass ? "1" : "0") + ",\"" + claim + "\"\n";
    }
    return out;
}

} // namespace cowpath
