// Command-line front end: evaluate strategies, run the verification suite,
// emit tradeoff curves and discovery profiles. Data goes to stdout,
// diagnostics to stderr. Exit codes: 0 success / all checks pass, 2 usage or
// parse error, 3 invalid strategy or out-of-range query, 4 verification
// failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cowpath/cowpath.hpp"

namespace {

using cowpath::Rational;
using cowpath::Strategy;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidStrategy = 3;
constexpr int kExitVerificationFailure = 4;

struct RunConfig {
    std::int64_t horizon_iters = cowpath::kDefaultHorizon;
    std::optional<Rational> horizon_length;
    std::string format = "structured";
};

struct StrategySpec {
    std::string file;
    std::string family;
    std::string alpha;
    std::string t;
    std::string prefix;
    std::string tail_base;
    std::string tail_ratio;

    void attach(CLI::App& cmd) {
        cmd.add_option("file", file, "strategy file (key = value lines)");
        cmd.add_option("--family", family, "inline strategy: geometric | aggressive | explicit");
        cmd.add_option("--alpha", alpha, "geometric ratio, as p/q");
        cmd.add_option("--t", t, "aggressive parameter in [1, 4], as p/q");
        cmd.add_option("--prefix", prefix, "explicit segments, comma-separated p/q");
        cmd.add_option("--tail-base", tail_base, "geometric tail base, as p/q");
        cmd.add_option("--tail-ratio", tail_ratio, "geometric tail ratio, as p/q");
    }

    /// Builds the strategy from the file or from the inline flags (the flags
    /// mirror the file keys one-to-one).
    Strategy resolve() const {
        if (!file.empty()) return cowpath::read_strategy_file(file);
        if (family.empty()) {
            throw cowpath::ParseError("no strategy given: pass a file or --family");
        }
        std::string text = "family = " + family + "\n";
        if (!alpha.empty()) text += "alpha = " + alpha + "\n";
        if (!t.empty()) text += "t = " + t + "\n";
        if (!prefix.empty()) text += "prefix = " + prefix + "\n";
        if (!tail_base.empty()) text += "tail.base = " + tail_base + "\n";
        if (!tail_ratio.empty()) text += "tail.ratio = " + tail_ratio + "\n";
        return cowpath::parse_strategy(text);
    }
};

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    const auto value = Rational::parse(text);
    if (!value) throw cowpath::ParseError(what + ": `" + text + "` is not a rational");
    return *value;
}

std::string format_indices(const std::vector<std::int64_t>& indices) {
    if (indices.empty()) return "none";
    // Contiguous runs render as a..b.
    std::string out;
    std::size_t i = 0;
    while (i < indices.size()) {
        std::size_t j = i;
        while (j + 1 < indices.size() && indices[j + 1] == indices[j] + 1) ++j;
        if (!out.empty()) out += ", ";
        out += std::to_string(indices[i]);
        if (j > i) out += ".." + std::to_string(indices[j]);
        i = j + 1;
    }
    return out;
}

std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void emit_eval_row(const RunConfig& config, const std::string& key, const std::string& value) {
    if (config.format == "csv") {
        std::cout << key << ',' << csv_quote(value) << '\n';
    } else {
        std::cout << key << ": " << value << '\n';
    }
}

int run_eval(const RunConfig& config, const StrategySpec& spec) {
    Strategy strategy = spec.resolve();

    const auto validity = cowpath::validate_strategy(strategy, std::max<std::int64_t>(config.horizon_iters, 2));
    if (!validity.valid) {
        std::cerr << "invalid strategy " << strategy.describe() << ": "
                  << validity.first_violation->second << " at index "
                  << validity.first_violation->first << '\n';
        return kExitInvalidStrategy;
    }

    const auto sigma9 = cowpath::validate_sigma9(strategy, std::max<std::int64_t>(config.horizon_iters, 1));
    if (!sigma9.member) {
        std::cerr << "warning: " << strategy.describe()
                  << " is not in Sigma_9 (constraint violated at n = "
                  << sigma9.first_violation->first
                  << ", slack " << sigma9.first_violation->second.str()
                  << "); dr_sigma9 is still evaluated against the class\n";
    }

    if (config.format == "csv") std::cout << "key,value\n";
    emit_eval_row(config, "strategy", strategy.describe());

    std::string segments;
    for (std::int64_t n = 0; n <= 8 && strategy.has_segment(n); ++n) {
        if (n > 0) segments += ", ";
        segments += strategy.segment(n).str();
    }
    emit_eval_row(config, "segments", segments);
    emit_eval_row(config, "valid",
                  std::string("yes") + (validity.certified ? " [certified]" : " [within horizon]"));
    {
        std::string membership = sigma9.member ? "member" : "not a member";
        membership += sigma9.certified ? " [certified]" : " [within horizon]";
        if (sigma9.member) membership += ", tight at n = " + format_indices(sigma9.tight_indices);
        emit_eval_row(config, "sigma9", membership);
    }

    auto emit_ratio = [&](const std::string& key, auto&& compute) {
        try {
            emit_eval_row(config, key, cowpath::describe_ratio(compute()));
        } catch (const cowpath::Error& e) {
            emit_eval_row(config, key, std::string("unavailable (") + e.what() + ")");
        }
    };
    emit_ratio("cr", [&] { return cowpath::competitive_ratio(strategy, config.horizon_iters); });
    emit_ratio("dr_sigma", [&] { return cowpath::discovery_ratio_all(strategy, config.horizon_iters); });
    emit_ratio("dr_sigma9", [&] { return cowpath::discovery_ratio_sigma9(strategy, config.horizon_iters); });
    return kExitOk;
}

int run_verify(const RunConfig& config) {
    const auto report = cowpath::build_verification_report(config.horizon_iters);
    if (config.format == "csv") {
        std::cout << cowpath::verification_csv(report);
    } else {
        for (const auto& check : report.checks) {
            std::cout << cowpath::verification_line(check) << '\n';
        }
        std::size_t passed = 0;
        for (const auto& check : report.checks) passed += check.pass ? 1 : 0;
        std::cout << "result: " << passed << '/' << report.checks.size() << " checks pass\n";
    }
    return report.all_pass ? kExitOk : kExitVerificationFailure;
}

int run_tradeoff(const std::string& alpha_min, const std::string& alpha_max, std::int64_t steps) {
    const auto points = cowpath::tradeoff_curve(parse_rational_arg(alpha_min, "alpha_min"),
                                                parse_rational_arg(alpha_max, "alpha_max"), steps);
    std::cout << cowpath::tradeoff_csv(points);
    return kExitOk;
}

int run_profile(const RunConfig& config, const StrategySpec& spec) {
    if (!config.horizon_length) {
        throw cowpath::ParseError("profile needs --horizon-length p/q");
    }
    Strategy strategy = spec.resolve();
    const auto validity = cowpath::validate_strategy(strategy, std::max<std::int64_t>(config.horizon_iters, 2));
    if (!validity.valid) {
        std::cerr << "invalid strategy " << strategy.describe() << ": "
                  << validity.first_violation->second << " at index "
                  << validity.first_violation->first << '\n';
        return kExitInvalidStrategy;
    }
    std::cout << cowpath::profile_csv(cowpath::discovery_profile(strategy, *config.horizon_length));
    return kExitOk;
}

int run_oracle_dstar(const std::string& l_text, std::optional<std::int64_t> n_max) {
    const Rational l = parse_rational_arg(l_text, "l");
    const auto closed = cowpath::min_discovery_cost(l);
    std::cout << "l: " << l.str() << '\n';
    std::cout << "m_star: " << closed.m_star << '\n';
    std::cout << "closed_form: " << closed.d_star.str() << " (" << closed.d_star.decimal() << ")\n";
    std::cout << "witness_t: " << closed.witness_t.str() << '\n';
    if (l <= Rational(4)) {
        std::cout << "lp_value: skipped (trivial regime, d*(l) = l)\n";
        return kExitOk;
    }
    const Rational lp = cowpath::oracle_min_discovery_cost(l, n_max.value_or(closed.m_star + 3));
    std::cout << "lp_value: " << lp.str() << " (" << lp.decimal() << ")\n";
    std::cout << "agree: " << (lp == closed.d_star ? "yes" : "NO") << '\n';
    return lp == closed.d_star ? kExitOk : kExitVerificationFailure;
}

int run_oracle_max_segment(std::int64_t n) {
    const Rational lp = cowpath::oracle_max_segment(n);
    const Rational closed = Rational(n + 2) * cowpath::pow2(n + 1);
    std::cout << "n: " << n << '\n';
    std::cout << "lp_value: " << lp.str() << '\n';
    std::cout << "closed_form: " << closed.str() << '\n';
    std::cout << "agree: " << (lp == closed ? "yes" : "NO") << '\n';
    return lp == closed ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact competitive- and discovery-ratio analysis of linear-search strategies"};
    app.require_subcommand(1);

    RunConfig config;
    std::string horizon_length_text;
    app.add_option("--horizon-iters", config.horizon_iters,
                   "iteration horizon for suprema and membership checks")
        ->capture_default_str();
    app.add_option("--horizon-length", horizon_length_text, "length horizon as p/q");
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"structured", "csv"}))
        ->capture_default_str();

    auto* eval_cmd = app.add_subcommand(
        "eval", "segments, validity, Sigma_9 membership and all ratios of one strategy");
    StrategySpec eval_spec;
    eval_spec.attach(*eval_cmd);

    auto* verify_cmd =
        app.add_subcommand("verify", "recompute the known-constant suite and report pass/fail");

    auto* tradeoff_cmd =
        app.add_subcommand("tradeoff", "competitive-vs-discovery tradeoff of G_alpha, as CSV");
    std::string alpha_min_text;
    std::string alpha_max_text;
    std::int64_t steps = 1;
    tradeoff_cmd->add_option("alpha_min", alpha_min_text, "grid start, p/q > 1")->required();
    tradeoff_cmd->add_option("alpha_max", alpha_max_text, "grid end, p/q")->required();
    tradeoff_cmd->add_option("steps", steps, "number of grid intervals")->required();

    auto* profile_cmd = app.add_subcommand(
        "profile", "discovery profile up to --horizon-length, as CSV");
    StrategySpec profile_spec;
    profile_spec.attach(*profile_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "exact-LP routes to d*(l) and the reach limit");
    oracle_cmd->require_subcommand(1);
    auto* dstar_cmd = oracle_cmd->add_subcommand("d-star", "minimum discovery cost of length l");
    std::string l_text;
    std::int64_t n_max = -1;
    dstar_cmd->add_option("l", l_text, "length, p/q")->required();
    dstar_cmd->add_option("--n-max", n_max, "largest reaching iteration to try");
    auto* max_segment_cmd =
        oracle_cmd->add_subcommand("max-segment", "largest n-th segment of any 9-competitive strategy");
    std::int64_t segment_index = 0;
    max_segment_cmd->add_option("n", segment_index, "segment index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!horizon_length_text.empty()) {
        const auto value = Rational::parse(horizon_length_text);
        if (!value) {
            std::cerr << "--horizon-length: `" << horizon_length_text << "` is not a rational\n";
            return kExitUsage;
        }
        config.horizon_length = *value;
    }
    if (config.horizon_iters < 1) {
        std::cerr << "--horizon-iters must be positive\n";
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(config, eval_spec);
        if (verify_cmd->parsed()) return run_verify(config);
        if (tradeoff_cmd->parsed()) return run_tradeoff(alpha_min_text, alpha_max_text, steps);
        if (profile_cmd->parsed()) return run_profile(config, profile_spec);
        if (oracle_cmd->parsed()) {
            if (dstar_cmd->parsed()) {
                return run_oracle_dstar(l_text, n_max >= 0 ? std::optional<std::int64_t>(n_max)
                                                           : std::nullopt);
            }
            return run_oracle_max_segment(segment_index);
        }
    } catch (const cowpath::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cowpath::InvalidStrategyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidStrategy;
    } catch (const cowpath::OutOfRangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidStrategy;
    } catch (const cowpath::InvalidParameterError& e) {
        // Range/parameter problems on eval/profile inputs mean the strategy
        // itself is unusable; elsewhere they are usage errors.
        const bool strategy_context = eval_cmd->parsed() || profile_cmd->parsed();
        std::cerr << "error: " << e.what() << '\n';
        return strategy_context ? kExitInvalidStrategy : kExitUsage;
    } catch (const cowpath::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
