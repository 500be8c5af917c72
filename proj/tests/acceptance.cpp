// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Criterion 1 carries one deliberately red check: the i >= 2 branch supremum
// of dr(R_4, Sigma_9) is pinned at its widely stated value 99/64, while exact
// evaluation yields 189/121 (attained at i = 3; every branch term stays below
// 8/5, so dr(R_4, Sigma_9) = 8/5 itself is unaffected and separately checked
// green). The discrepancy is kept visible rather than swept aside; see the
// unit test "the i >= 2 branch supremum of R_4 peaks at i = 3" for the
// oracle-backed derivation.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cowpath/cowpath.hpp"
#include "walk_oracle.hpp"

using cowpath::Rational;
using cowpath::Strategy;
namespace oracle = cowpath::testing;

namespace {

int failures = 0;
std::vector<std::string> details;

void conclude(int number, const std::string& title, bool pass) {
    std::cout << '[' << number << "] " << title << " ... " << (pass ? "PASS" : "FAIL") << '\n';
    for (const auto& line : details) std::cout << "      " << line << '\n';
    details.clear();
    if (!pass) ++failures;
}

bool expect(bool condition, const std::string& message) {
    if (!condition) details.push_back(message);
    return condition;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool run_report(const cowpath::VerificationReport& report, double elapsed, double budget) {
    bool pass = true;
    for (const auto& check : report.checks) {
        if (!check.pass) {
            details.push_back(check.name + ": expected " + check.expected.str() + ", actual " +
                              check.actual.str() + " -- " + check.claim);
            pass = false;
        }
    }
    if (elapsed >= budget) {
        details.push_back("runtime " + std::to_string(elapsed) + "s exceeded the " +
                          std::to_string(budget) + "s budget");
        pass = false;
    }
    return pass;
}

void criterion_1_constants() {
    const auto start = std::chrono::steady_clock::now();
    const auto report = cowpath::constant_suite_checks();
    conclude(1, "closed-form constant suite (< 1 s)", run_report(report, seconds_since(start), 1.0));
}

void criterion_2_lp_cross_validation() {
    const auto start = std::chrono::steady_clock::now();
    const auto report = cowpath::lp_cross_validation_checks(200);
    conclude(2, "LP cross-validation on 200 lengths in (4, 1000] (< 10 s)",
             run_report(report, seconds_since(start), 10.0));
}

void criterion_3_max_segment() {
    const auto report = cowpath::max_segment_checks();
    conclude(3, "max-segment LP reproduces the reach limit for n = 0..10",
             run_report(report, 0.0, 1e9));
}

Strategy random_valid_strategy(std::mt19937_64& rng) {
    auto fraction = [&rng](std::int64_t lo_num, std::int64_t num_range, std::int64_t den_range) {
        const auto num = lo_num + static_cast<std::int64_t>(rng() % num_range);
        const auto den = 1 + static_cast<std::int64_t>(rng() % den_range);
        return Rational(num, den);
    };
    std::vector<Rational> prefix;
    prefix.push_back(Rational(1) + fraction(0, 12, 4));
    prefix.push_back(Rational(1) + fraction(0, 12, 4));
    for (int i = 2; i < 8; ++i) {
        prefix.push_back(prefix[static_cast<std::size_t>(i - 2)] + fraction(1, 12, 4));
    }
    return Strategy::explicit_prefix(std::move(prefix));
}

void criterion_4_walk_oracle() {
    bool pass = true;
    std::mt19937_64 rng(0xc0ffee5eedULL);
    for (int round = 0; round < 100 && pass; ++round) {
        const Strategy s = random_valid_strategy(rng);
        pass = expect(cowpath::validate_strategy(s, 7).valid,
                      "generated strategy failed validity");
        const Rational coverage = s.segment(7) + s.segment(6);

        // fifty lengths: every piece boundary, near-boundary probes, randoms
        std::vector<Rational> lengths;
        for (std::int64_t i = 1; i <= 8; ++i) {
            lengths.push_back(s.segment(i - 1) + s.segment(i - 2));
        }
        for (std::int64_t i = 1; i <= 7; ++i) {
            lengths.push_back(s.segment(i - 1) + s.segment(i - 2) + Rational(1, 1009));
        }
        lengths.push_back(s.segment(0));
        lengths.push_back(s.segment(0) / Rational(2));
        while (lengths.size() < 50) {
            const auto num = 1 + static_cast<std::int64_t>(rng() % (1 << 20));
            lengths.push_back(coverage * Rational(num, 1 << 20));
        }

        for (const Rational& l : lengths) {
            if (!expect(cowpath::discovery_cost(s, l) == oracle::walk_discovery_cost(s, l),
                        "discovery_cost mismatch at l = " + l.str())) {
                pass = false;
                break;
            }
            const int branch = static_cast<int>(rng() % 2);
            const Rational branch_coverage = s.segment(branch == 0 ? 6 : 7);
            const Rational distance =
                Rational(1) +
                (branch_coverage - Rational(1)) *
                    Rational(static_cast<std::int64_t>(rng() % (1 << 20)), 1 << 20);
            const cowpath::Hider hider(branch, distance);
            if (!expect(cowpath::locate_cost(s, hider) == oracle::walk_locate_cost(s, hider),
                        "locate_cost mismatch at distance " + distance.str())) {
                pass = false;
                break;
            }
        }

        const auto profile = cowpath::discovery_profile(s, coverage);
        for (const auto& piece : profile.pieces) {
            if (!piece.jump_after) continue;
            if (!expect(*piece.jump_after ==
                            s.segment(piece.index) + s.segment(piece.index - 1),
                        "profile jump mismatch at piece " + std::to_string(piece.index))) {
                pass = false;
                break;
            }
        }
    }
    conclude(4, "event-walk oracle equivalence on 100 random strategies x 50 lengths", pass);
}

void criterion_5_tradeoff_grid() {
    bool pass = true;
    const auto curve = cowpath::tradeoff_curve(Rational(11, 10), Rational(4), 29);
    pass = expect(curve.size() == 30, "grid should hold 30 points") && pass;

    Rational best_cr = curve.front().cr;
    Rational best_alpha = curve.front().alpha;
    for (const auto& p : curve) {
        if (p.cr < best_cr) {
            best_cr = p.cr;
            best_alpha = p.alpha;
        }
    }
    pass = expect(best_alpha == Rational(2) && best_cr == Rational(9),
                  "cr should be minimized exactly at alpha = 2 with value 9") &&
           pass;
    for (const auto& p : curve) {
        if (p.alpha != Rational(2) && !(p.cr > Rational(9))) {
            pass = expect(false, "cr minimum is not unique at alpha = " + p.alpha.str());
            break;
        }
    }
    for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
        if (!(curve[k].dr_sigma > curve[k + 1].dr_sigma)) {
            pass = expect(false, "dr is not strictly decreasing at alpha = " +
                                     curve[k + 1].alpha.str());
            break;
        }
    }
    const std::string once = cowpath::tradeoff_csv(curve);
    const std::string twice =
        cowpath::tradeoff_csv(cowpath::tradeoff_curve(Rational(11, 10), Rational(4), 29));
    pass = expect(once == twice, "CSV output should be byte-deterministic") && pass;
    conclude(5, "tradeoff grid alpha in {11/10, ..., 4}: minimum, monotonicity, determinism", pass);
}

void criterion_6_prefix_forcing() {
    bool pass = true;
    const Strategy r4 = Strategy::aggressive(Rational(4));
    for (std::int64_t j = 1; j <= 4; ++j) {
        for (const Rational& q : {Rational(1, 2), Rational(9, 10), Rational(999, 1000)}) {
            const Rational bound = cowpath::prefix_deviation_bound(j, q * r4.segment(j));
            pass = expect(bound > Rational(8, 5),
                          "bound at j = " + std::to_string(j) + ", q = " + q.str() +
                              " should exceed 8/5, got " + bound.str()) &&
                   pass;
        }
        const Rational at_limit = cowpath::prefix_deviation_bound(j, r4.segment(j));
        pass = expect(at_limit == Rational(9 * j + 9, 6 * j + 4),
                      "bound at the reach limit should be (9j+9)/(6j+4) for j = " +
                          std::to_string(j)) &&
               pass;
    }
    pass = expect(cowpath::prefix_deviation_bound(4, r4.segment(4)) == Rational(45, 28),
                  "bound at j = 4 should be 45/28") &&
           pass;
    const Rational at5 = cowpath::prefix_deviation_bound(5, r4.segment(5));
    pass = expect(at5 == Rational(27, 17) && at5 < Rational(8, 5),
                  "bound at j = 5 should be 27/17 < 8/5") &&
           pass;

    // base case: x_0 < 4 forces an i = 1 right-limit of at least 2
    const Strategy below4[] = {
        Strategy::geometric(Rational(2)),
        Strategy::aggressive(Rational(2)),
        Strategy::explicit_prefix({Rational(2), Rational(3), Rational(4), Rational(5)}),
    };
    for (const auto& s : below4) {
        const auto term = cowpath::discovery_ratio_sigma9_term(s, 1);
        pass = expect(term.kind == cowpath::SupKind::right_limit && term.value >= Rational(2),
                      "i = 1 right-limit should be >= 2 for " + s.describe()) &&
               pass;
    }
    conclude(6, "prefix forcing: deviating from the R_4 prefix before index 5 costs > 8/5", pass);
}

void criterion_7_sigma9_membership() {
    bool pass = true;
    for (const Rational& t : {Rational(1), Rational(2), Rational(4)}) {
        const auto report = cowpath::validate_sigma9(Strategy::aggressive(t), 16);
        pass = expect(report.member && report.certified, "R_t should be a member, t = " + t.str()) &&
               pass;
        pass = expect(report.tight_indices.size() == 16,
                      "all constraints should be tight for t = " + t.str()) &&
               pass;
    }
    const auto doubling = cowpath::validate_sigma9(Strategy::geometric(Rational(2)), 16);
    pass = expect(doubling.member, "G_2 should be a member") && pass;

    const auto g3 = cowpath::validate_sigma9(Strategy::geometric(Rational(3)), 16);
    pass = expect(!g3.member, "G_3 should not be a member") && pass;
    pass = expect(g3.first_violation && g3.first_violation->first == 2 &&
                      g3.first_violation->second == Rational(-1),
                  "G_3 should fail at n = 2 with x_2 = 9 > 8") &&
           pass;
    conclude(7, "Sigma_9 membership: R_t tight members, G_2 in, G_3 out at n = 2", pass);
}

} // namespace

int main() {
    criterion_1_constants();
    criterion_2_lp_cross_validation();
    criterion_3_max_segment();
    criterion_4_walk_oracle();
    criterion_5_tradeoff_grid();
    criterion_6_prefix_forcing();
    criterion_7_sigma9_membership();

    std::cout << "result: " << (7 - failures) << "/7 criteria pass\n";
    return failures;
}
