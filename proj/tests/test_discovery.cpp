#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cowpath/discovery.hpp"
#include "walk_oracle.hpp"

using cowpath::Hider;
using cowpath::Rational;
using cowpath::Strategy;
namespace oracle = cowpath::testing;

namespace {
const Strategy g2 = Strategy::geometric(Rational(2));
const Strategy r4 = Strategy::aggressive(Rational(4));
} // namespace

TEST_CASE("hider construction") {
    CHECK_THROWS_AS(Hider(2, Rational(1)), cowpath::InvalidParameterError);
    CHECK_THROWS_AS(Hider(0, Rational(1, 2)), cowpath::InvalidParameterError);
    CHECK(Hider(1, Rational(1)).branch == 1);
}

TEST_CASE("locate cost") {
    CHECK(cowpath::locate_cost(g2, Hider(0, Rational(1))) == Rational(1));
    CHECK(cowpath::locate_cost(g2, Hider(1, Rational(2))) == Rational(4));
    CHECK(cowpath::locate_cost(g2, Hider(0, Rational(3))) == Rational(9));
    // each value matches the event walk
    for (const auto& h : {Hider(0, Rational(1)), Hider(1, Rational(2)), Hider(0, Rational(3))}) {
        CHECK(cowpath::locate_cost(g2, h) == oracle::walk_locate_cost(g2, h));
    }

    const Strategy finite = Strategy::explicit_prefix({Rational(1), Rational(2)});
    CHECK_THROWS_AS(cowpath::locate_cost(finite, Hider(0, Rational(5))), cowpath::OutOfRangeError);
}

TEST_CASE("discovery cost") {
    CHECK(cowpath::discovery_cost(g2, Rational(3)) == Rational(4));
    CHECK(cowpath::discovery_cost(r4, Rational(16)) == Rational(20));
    // l within the first segment costs exactly l
    CHECK(cowpath::discovery_cost(g2, Rational(1, 2)) == Rational(1, 2));
    CHECK(cowpath::discovery_cost(r4, Rational(4)) == Rational(4));

    CHECK(cowpath::discovery_cost(g2, Rational(3)) == oracle::walk_discovery_cost(g2, Rational(3)));
    CHECK(cowpath::discovery_cost(r4, Rational(16)) ==
          oracle::walk_discovery_cost(r4, Rational(16)));

    CHECK_THROWS_AS(cowpath::discovery_cost(g2, Rational(0)), cowpath::InvalidParameterError);
    CHECK_THROWS_AS(cowpath::discovery_cost(g2, Rational(-1)), cowpath::InvalidParameterError);
}

TEST_CASE("turn counts") {
    CHECK(cowpath::turns_to_discover(r4, Rational(4)) == 0);
    CHECK(cowpath::turns_to_discover(r4, Rational(16)) == 1);
    CHECK(cowpath::turns_to_discover(g2, Rational(3)) == 1);
    // boundary belongs to the earlier piece
    CHECK(cowpath::turns_to_discover(g2, Rational(1)) == 0);
    CHECK(cowpath::turns_to_discover(g2, Rational(1) + Rational(1, 100)) == 1);
}

TEST_CASE("discovery profile of G_2 up to 6") {
    const auto profile = cowpath::discovery_profile(g2, Rational(6));
    REQUIRE(profile.pieces.size() == 3);

    CHECK(profile.pieces[0].l_start == Rational(0));
    CHECK(profile.pieces[0].l_end == Rational(1));
    CHECK(profile.pieces[0].cost_start == Rational(0));

    CHECK(profile.pieces[1].l_start == Rational(1));
    CHECK(profile.pieces[1].l_end == Rational(3));
    CHECK(profile.pieces[1].cost_start == Rational(2));

    CHECK(profile.pieces[2].l_start == Rational(3));
    CHECK(profile.pieces[2].l_end == Rational(6));
    CHECK(profile.pieces[2].cost_start == Rational(7));
    REQUIRE(profile.pieces[2].jump_after);
    CHECK(*profile.pieces[2].jump_after == Rational(6)); // x_2 + x_1

    // profile values agree with the walk inside each piece
    for (const auto& l : {Rational(1, 2), Rational(2), Rational(5), Rational(6)}) {
        CHECK(cowpath::discovery_cost(g2, l) == oracle::walk_discovery_cost(g2, l));
    }
}

TEST_CASE("discovery profile edge cases") {
    const auto single = cowpath::discovery_profile(r4, Rational(4));
    REQUIRE(single.pieces.size() == 1);
    CHECK(single.pieces[0].cost_start == Rational(0));
    CHECK(single.pieces[0].l_end == Rational(4));
    CHECK(single.pieces[0].jump_after); // ends exactly at the natural boundary

    const auto truncated = cowpath::discovery_profile(g2, Rational(5, 2));
    REQUIRE(truncated.pieces.size() == 2);
    CHECK(truncated.pieces[1].l_end == Rational(5, 2));
    CHECK_FALSE(truncated.pieces[1].jump_after);

    const Strategy finite = Strategy::explicit_prefix({Rational(1), Rational(2)});
    CHECK_THROWS_AS(cowpath::discovery_profile(finite, Rational(10)), cowpath::OutOfRangeError);
    CHECK_THROWS_AS(cowpath::discovery_profile(g2, Rational(0)), cowpath::InvalidParameterError);
}

TEST_CASE("profile jumps equal x_i + x_{i-1}", "[property]") {
    for (const auto& s : {g2, r4, Strategy::aggressive(Rational(3, 2))}) {
        const auto profile = cowpath::discovery_profile(s, Rational(500));
        for (const auto& piece : profile.pieces) {
            if (!piece.jump_after) continue;
            REQUIRE(*piece.jump_after == s.segment(piece.index) + s.segment(piece.index - 1));
            // jump also equals the cost gap across the boundary, per the walk
            const Rational just_past = piece.l_end + Rational(1, 997);
            if (just_past < profile.horizon) {
                REQUIRE(oracle::walk_discovery_cost(s, just_past) -
                            oracle::walk_discovery_cost(s, piece.l_end) ==
                        *piece.jump_after + Rational(1, 997));
            }
        }
    }
}

TEST_CASE("minimum turns") {
    CHECK(cowpath::min_turns(Rational(4)) == 0);
    CHECK(cowpath::min_turns(Rational(1, 2)) == 0);
    CHECK(cowpath::min_turns(Rational(4) + Rational(1, 1000)) == 1);
    CHECK(cowpath::min_turns(Rational(16)) == 1);
    CHECK(cowpath::min_turns(Rational(44)) == 2);
    CHECK(cowpath::min_turns(Rational(45)) == 3);
    CHECK(cowpath::min_turns(Rational(112)) == 3);
    CHECK_THROWS_AS(cowpath::min_turns(Rational(0)), cowpath::InvalidParameterError);
}

TEST_CASE("min_turns is nondecreasing and matches m(R_4, l)", "[property]") {
    std::int64_t previous = 0;
    for (std::int64_t k = 1; k <= 600; ++k) {
        const Rational l(k, 2); // 1/2 .. 300
        const std::int64_t m = cowpath::min_turns(l);
        REQUIRE(m >= previous);
        previous = m;
        REQUIRE(m == cowpath::turns_to_discover(r4, l));
    }
}

TEST_CASE("minimum discovery cost closed form") {
    const auto at4 = cowpath::min_discovery_cost(Rational(4));
    CHECK(at4.d_star == Rational(4));
    CHECK(at4.m_star == 0);

    const auto at16 = cowpath::min_discovery_cost(Rational(16));
    CHECK(at16.d_star == Rational(20));
    CHECK(at16.witness_t == Rational(4));
    CHECK(at16.m_star == 1);

    const auto at5 = cowpath::min_discovery_cost(Rational(5));
    CHECK(at5.d_star == Rational(25, 4));
    CHECK(at5.witness_t == Rational(5, 4));
}

TEST_CASE("d*(l)/l is nondecreasing and below 2; witness stays in (1, 4]", "[property]") {
    Rational previous(0);
    for (std::int64_t k = 2; k <= 400; ++k) {
        const Rational l(3 * k, 2);
        const auto opt = cowpath::min_discovery_cost(l);
        const Rational normalized = opt.d_star / l;
        REQUIRE(normalized >= previous);
        REQUIRE(normalized < Rational(2));
        previous = normalized;
        if (l > Rational(4)) {
            REQUIRE(opt.witness_t > Rational(1));
            REQUIRE(opt.witness_t <= Rational(4));
        }
    }
}

TEST_CASE("locate cost dominates discovery cost at the hider distance", "[property]") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 200; ++round) {
        const Strategy& s = (round % 2 == 0) ? g2 : r4;
        const Hider h(static_cast<int>(rng() % 2),
                      Rational(static_cast<std::int64_t>(rng() % 400 + 4), 4));
        REQUIRE(cowpath::locate_cost(s, h) >= cowpath::discovery_cost(s, h.distance));
    }
}

TEST_CASE("discovery cost dominates l, equality only before the first turn", "[property]") {
    for (std::int64_t k = 1; k <= 200; ++k) {
        const Rational l(k, 7);
        const Rational cost = cowpath::discovery_cost(g2, l);
        REQUIRE(cost >= l);
        REQUIRE((cost == l) == (cowpath::turns_to_discover(g2, l) == 0));
    }
}
