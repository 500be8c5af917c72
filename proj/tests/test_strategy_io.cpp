#include <catch2/catch_amalgamated.hpp>

#include "cowpath/strategy_io.hpp"

using cowpath::Rational;
using cowpath::Strategy;

TEST_CASE("strategy files parse") {
    const Strategy g2 = cowpath::parse_strategy("family = geometric\nalpha = 2\n");
    CHECK(g2.family() == Strategy::Family::geometric);
    CHECK(g2.alpha() == Rational(2));

    const Strategy r = cowpath::parse_strategy("# a comment\n\nfamily = aggressive\nt = 3/2\n");
    CHECK(r.family() == Strategy::Family::aggressive);
    CHECK(r.t_param() == Rational(3, 2));

    const Strategy e = cowpath::parse_strategy(
        "family = explicit\nprefix = 1, 3/2, 2, 7/2\ntail.base = 5\ntail.ratio = 2\n");
    CHECK(e.prefix().size() == 4);
    CHECK(e.prefix()[1] == Rational(3, 2));
    REQUIRE(e.tail());
    CHECK(e.tail()->base == Rational(5));
    CHECK(e.segment(5) == Rational(10)); // 5 * 2^1, one step into the tail
}

TEST_CASE("strategy files reject malformed input") {
    CHECK_THROWS_AS(cowpath::parse_strategy(""), cowpath::ParseError);
    CHECK_THROWS_AS(cowpath::parse_strategy("family = warp\n"), cowpath::ParseError);
    CHECK_THROWS_AS(cowpath::parse_strategy("family = geometric\n"), cowpath::ParseError);
    CHECK_THROWS_AS(cowpath::parse_strategy("family = geometric\nalpha = two\n"),
                    cowpath::ParseError);
    CHECK_THROWS_AS(cowpath::parse_strategy("family = geometric\nalpha = 2\nalpha = 3\n"),
                    cowpath::ParseError);
    CHECK_THROWS_AS(cowpath::parse_strategy("family = geometric\nalpha = 2\nbogus = 1\n"),
                    cowpath::ParseError);
    CHECK_THROWS_AS(cowpath::parse_strategy("family = explicit\nprefix = 1\ntail.base = 2\n"),
                    cowpath::ParseError);
    CHECK_THROWS_AS(cowpath::parse_strategy("family = geometric\nalpha\n"), cowpath::ParseError);
    // parses but constructs an out-of-domain strategy
    CHECK_THROWS_AS(cowpath::parse_strategy("family = geometric\nalpha = 1\n"),
                    cowpath::InvalidParameterError);
}

TEST_CASE("serialize/parse round-trips segments", "[property]") {
    const Strategy strategies[] = {
        Strategy::geometric(Rational(7, 3)),
        Strategy::aggressive(Rational(9, 4)),
        Strategy::explicit_prefix({Rational(1), Rational(2), Rational(5, 2)}),
        Strategy::explicit_prefix({Rational(4)},
                                  cowpath::GeometricTail{Rational(12), Rational(8, 3)}),
    };
    for (const auto& original : strategies) {
        const Strategy restored = cowpath::parse_strategy(cowpath::serialize_strategy(original));
        REQUIRE(restored.family() == original.family());
        for (std::int64_t n = 0; n <= 6; ++n) {
            if (!original.has_segment(n)) break;
            REQUIRE(restored.segment(n) == original.segment(n));
        }
    }
}
