// Blow-up charts with exceptional-divisor bookkeeping: chart substitution,
// divisor multiplicity arithmetic, cleaning with its no-progress guard, and
// the auxiliary coordinate operations.
#include <catch2/catch_amalgamated.hpp>

#include "minsing/chart.hpp"
#include "minsing/parse.hpp"

using namespace minsing;

namespace {
const std::vector<std::string> kVars{"w", "x", "y", "z"};
MPoly P(const std::string& s) { return parse_poly(s); }
}  // namespace

TEST_CASE("chart of a point blowup") {
    Chart c(P("z^2+y*(w*y+x^2)^2"), kVars);
    OpOutcome r = c.blowup({"w", "x", "y", "z"}, "w");
    REQUIRE(r.ok);
    REQUIRE(r.extracted == 2);
    REQUIRE(c.germ() == P("z^2+w^3*y*(y+x^2)^2"));
    REQUIRE(c.divisors().size() == 1);
    REQUIRE(c.divisors()[0].equation == P("w"));
    REQUIRE(c.divisors()[0].multiplicity == 2);
    REQUIRE(c.total_transform() == P("w^2*(z^2+w^3*y*(y+x^2)^2)"));
}

TEST_CASE("cleaning strips residual divisor powers") {
    Chart c(P("z^2+y*(w*y+x^2)^2"), kVars);
    REQUIRE(c.blowup({"w", "x", "y", "z"}, "w").ok);
    OpOutcome r = c.clean({"z", "w"}, "w");
    REQUIRE(r.ok);
    REQUIRE(r.ord_before == 2);
    REQUIRE(r.ord_after == 2);
    REQUIRE(c.germ() == P("z^2+w*y*(y+x^2)^2"));
    REQUIRE(c.divisors()[0].multiplicity == 4);

    // Once the germ carries no more absorbable power, cleaning must refuse
    // and leave the chart untouched.
    MPoly before = c.germ();
    OpOutcome r2 = c.clean({"z", "w"}, "w");
    REQUIRE_FALSE(r2.ok);
    REQUIRE(r2.error == "cleaning ineffective: order rose from 2 to 3");
    REQUIRE(c.germ() == before);
    REQUIRE(c.divisors()[0].multiplicity == 4);
}

TEST_CASE("divisor multiplicities accumulate through blowups") {
    Chart c(P("z^3+w*y^3+w^2*x^3-3*w*x*y*z"), kVars);
    c.add_divisor(P("w"), 1);

    REQUIRE(c.blowup({"w", "x", "y", "z"}, "x").ok);
    REQUIRE(c.germ() == P("z^3+w*x*y^3+w^2*x^2-3*w*x*y*z"));
    {
        bool sawx = false, saww = false;
        for (const auto& d : c.divisors()) {
            if (d.equation == P("x")) sawx = d.multiplicity == 4;
            if (d.equation == P("w")) saww = d.multiplicity == 1;
        }
        REQUIRE(sawx);
        REQUIRE(saww);
    }

    REQUIRE(c.blowup({"w", "x", "y", "z"}, "w").ok);
    REQUIRE(c.germ() == P("z^3+w^2*x*y^3+w*x^2-3*w*x*y*z"));
    REQUIRE(c.blowup({"w", "x", "y", "z"}, "w").ok);
    REQUIRE(c.germ() == P("z^3+w^3*x*y^3+x^2-3*w*x*y*z"));
    {
        bool sawx = false, saww = false;
        for (const auto& d : c.divisors()) {
            if (d.equation == P("x")) sawx = d.multiplicity == 4;
            if (d.equation == P("w")) saww = d.multiplicity == 15;
        }
        REQUIRE(sawx);
        REQUIRE(saww);
    }
}

TEST_CASE("self-similar product chart") {
    Chart c(P("x*(z^2+w*y^2)"), kVars);
    c.add_divisor(P("w"), 1);
    Chart wchart = c, ychart = c;

    REQUIRE(wchart.blowup({"w", "x", "y", "z"}, "w").ok);
    REQUIRE(wchart.germ() == P("x*(z^2+w*y^2)"));
    REQUIRE(wchart.divisors().size() == 1);
    REQUIRE(wchart.divisors()[0].multiplicity == 4);

    REQUIRE(ychart.blowup({"w", "x", "y", "z"}, "y").ok);
    REQUIRE(ychart.germ() == P("x*(z^2+w*y)"));
    REQUIRE(ychart.divisors().size() == 2);

    REQUIRE(ychart.blowup({"w", "x", "y", "z"}, "w").ok);
    REQUIRE(ychart.germ() == P("x*(z^2+y)"));
    bool sawy = false, saww = false;
    for (const auto& d : ychart.divisors()) {
        if (d.equation == P("y")) sawy = d.multiplicity == 4;
        if (d.equation == P("w")) saww = d.multiplicity == 8;
    }
    REQUIRE(sawy);
    REQUIRE(saww);
}

TEST_CASE("blowup centers can be proper subspaces") {
    Chart c(P("x*(z^2+w*y)"), kVars);
    c.add_divisor(P("w"), 1);
    c.add_divisor(P("y"), 4);
    OpOutcome r = c.blowup({"w", "y", "z"}, "w");
    REQUIRE(r.ok);
    REQUIRE(r.extracted == 2);
    REQUIRE(c.germ() == P("x*(z^2+y)"));
    for (const auto& d : c.divisors())
        if (d.equation == P("w")) REQUIRE(d.multiplicity == 7);
}

TEST_CASE("blowup argument validation") {
    Chart c(P("z^2+x*y^2"), kVars);
    REQUIRE_FALSE(c.blowup({"z"}, "z").ok);
    REQUIRE_FALSE(c.blowup({"x", "y"}, "z").ok);
    REQUIRE_FALSE(c.blowup({"x", "q"}, "x").ok);
}

TEST_CASE("localization") {
    Chart c(P("z^3+w*y^3+w^2*x^3-3*w*x*y*z"), kVars);
    c.add_divisor(P("w"), 1);
    OpOutcome r = c.localize("x");
    REQUIRE(r.ok);
    REQUIRE(c.germ() == P("z^3+w*y^3+w^2-3*w*y*z"));
    REQUIRE(c.divisors().size() == 1);
    REQUIRE(c.divisors()[0].equation == P("w"));
}

TEST_CASE("coordinate changes move germ and divisors together") {
    Chart c(P("w^2+8*w*y^3-6*w*y*z+z^3"), kVars);
    c.add_divisor(P("w"), 1);
    OpOutcome r = c.complete_power("w", 2);
    REQUIRE(r.ok);
    REQUIRE(c.germ() == P("w^2+z^3-(4*y^3-3*y*z)^2"));
    REQUIRE(c.divisors()[0].equation == P("w-4*y^3+3*y*z").trailing_monic());

    r = c.change_coords({{"z", P("z+3*y^2")}});
    REQUIRE(r.ok);
    REQUIRE(c.germ() == P("w^2+(z-y^2)^2*(z+2*y^2)"));
    REQUIRE(c.divisors()[0].equation == P("w+5*y^3+3*y*z").trailing_monic());
    REQUIRE(c.divisors()[0].multiplicity == 1);
}

TEST_CASE("coordinate change validation") {
    Chart c(P("z^2+x*y^2"), kVars);
    // The image must vanish at the origin.
    REQUIRE_FALSE(c.change_coords({{"z", P("z+1")}}).ok);
    // The linear part must be invertible.
    REQUIRE_FALSE(c.change_coords({{"z", P("z^2")}}).ok);
    REQUIRE_FALSE(c.change_coords({{"x", P("y")}, {"y", P("y")}}).ok);
    // A shear is fine.
    REQUIRE(c.change_coords({{"x", P("x+y")}}).ok);
    REQUIRE(c.germ() == P("z^2+(x+y)*y^2"));
}

TEST_CASE("power completion validation") {
    // No w^2 term to absorb: completing the cube is a legal no-op.
    Chart c(P("w^3+x*w+y"), kVars);
    REQUIRE(c.complete_power("w", 3).ok);
    REQUIRE(c.germ() == P("w^3+x*w+y"));
    // A constant shift would move the origin: refuse.
    Chart cm(P("w^2+2*w+y"), kVars);
    REQUIRE_FALSE(cm.complete_power("w", 2).ok);
    Chart c2(P("x*w^2+w+y"), kVars);
    REQUIRE_FALSE(c2.complete_power("w", 2).ok);  // non-unit top coefficient
}

TEST_CASE("ramified base covers") {
    Chart c(P("z^2+w*y^2"), kVars);
    OpOutcome r = c.ramify("w", 2);
    REQUIRE(r.ok);
    REQUIRE(c.germ() == P("z^2+w^2*y^2"));
    REQUIRE_FALSE(c.ramify("w", 1).ok);
    REQUIRE_FALSE(c.ramify("q", 2).ok);
}

TEST_CASE("localize validation") {
    Chart c(P("z^2+x*y^2"), kVars);
    REQUIRE_FALSE(c.localize("q").ok);
}
