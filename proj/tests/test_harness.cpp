// The external interface layer: the expression grammar, structured reports,
// and scenario replay against the bundled scenario files.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minsing/parse.hpp"
#include "minsing/report.hpp"
#include "minsing/scenario.hpp"

using namespace minsing;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }

// Random polynomial over the integral coefficient span 1, eps, i — exactly
// what printed artifacts use, so printing must invert parsing on it.
MPoly random_integral_poly(std::mt19937_64& rng) {
    static const std::vector<std::string> names{"w", "x", "y", "z", "v"};
    std::uniform_int_distribution<int> nterms(1, 6);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    MPoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        AlgNum c(coeff(rng));
        if (kind(rng) == 0) c = c + AlgNum::eps();
        if (kind(rng) == 1) c = c - AlgNum::i();
        if (c.is_zero()) c = AlgNum(1);
        MPoly term{c};
        for (const auto& v : names)
            if (int d = deg(rng); d > 0 && kind(rng) < 3)
                term *= MPoly::var(v, d);
        p += term;
    }
    if (p.is_zero()) p = MPoly::var("x");
    return p;
}

}  // namespace

TEST_CASE("grammar basics") {
    REQUIRE(P("z^3+w*y^3+w^2*x^3-3*w*x*y*z") ==
            MPoly::var("z", 3) + MPoly::var("w") * MPoly::var("y", 3) +
                MPoly::var("w", 2) * MPoly::var("x", 3) -
                AlgNum(3) * (MPoly::var("w") * MPoly::var("x") *
                             MPoly::var("y") * MPoly::var("z")));
    REQUIRE(P("eps^2+eps+1").is_zero());
    REQUIRE(P("i^2") == MPoly(AlgNum(-1)));
    REQUIRE(P("-x^2") == -MPoly::var("x", 2));
    REQUIRE(P("2*x^2") == AlgNum(2) * MPoly::var("x", 2));
    REQUIRE(P("(2*x)^2") == AlgNum(4) * MPoly::var("x", 2));
    REQUIRE(P("x+y*z") == MPoly::var("x") + MPoly::var("y") * MPoly::var("z"));
    REQUIRE(P(" ( x + y ) * ( x - y ) ") ==
            MPoly::var("x", 2) - MPoly::var("y", 2));
}

TEST_CASE("parse errors carry positions") {
    auto expect_error = [](const std::string& text) {
        try {
            parse_poly(text);
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            REQUIRE(e.position <= text.size());
            REQUIRE(std::string(e.what()).find("position") !=
                    std::string::npos);
        }
    };
    expect_error("");
    expect_error("x+");
    expect_error("(x");
    expect_error("x)");
    expect_error("q+1");
    expect_error("x^");
    expect_error("x^9999999");
    expect_error("3/4*x");  // no rational literals in the grammar
    expect_error("x**y");
}

TEST_CASE("printing inverts parsing on integral polynomials") {
    std::mt19937_64 rng(20240817);
    for (int n = 0; n < 100; ++n) {
        MPoly p = random_integral_poly(rng);
        std::string s = p.to_string();
        INFO("printed: " << s);
        MPoly back = parse_poly(s);
        REQUIRE(back == p);
        // A second print of the reparsed value is bit-stable.
        REQUIRE(back.to_string() == s);
    }
}

TEST_CASE("branch summaries") {
    REQUIRE(branch_summary(-1, 0) == "indeterminate");
    REQUIRE(branch_summary(1, 3) == "1 branch (split at k=3)");
    REQUIRE(branch_summary(3, 1) == "3 branches (split at k=1)");
}

TEST_CASE("report lifecycle and shape") {
    Report rep;
    rep.name = "demo";
    ReportStep& a = rep.add("first");
    a.status = "pass";
    ReportStep& b = rep.add("second");
    b.status = "fail";
    b.expected = "x";
    b.actual = "y";
    rep.finish();
    REQUIRE_FALSE(rep.passed());
    REQUIRE(rep.summary == "1/2 steps passed");
    OrderedJson j = rep.to_json();
    REQUIRE(j.at("schema_version").get<int>() == 1);
    REQUIRE(j.at("name").get<std::string>() == "demo");
    REQUIRE(j.at("steps").size() == 2);
    REQUIRE(j.at("steps")[0].at("index").get<int>() == 0);
    REQUIRE(j.at("steps")[1].at("expected").get<std::string>() == "x");
    // No timing or machine-specific fields: the dump is reproducible.
    REQUIRE(j.dump() == rep.to_json().dump());
}

TEST_CASE("scenario parsing validates the schema") {
    OrderedJson good = OrderedJson::parse(R"({
        "schema_version": 1,
        "name": "inline",
        "vars": ["x", "y", "z"],
        "seed_poly": "z^2+x*y^2",
        "steps": [{"op": "assert_label", "expect": "pp"}]
    })");
    Scenario sc = parse_scenario(good);
    REQUIRE(sc.name == "inline");
    REQUIRE(sc.steps.size() == 1);
    Report rep = run_scenario(sc);
    REQUIRE(rep.passed());

    OrderedJson bad = good;
    bad["schema_version"] = 2;
    REQUIRE_THROWS(parse_scenario(bad));
}

TEST_CASE("assertion failures do not halt a scenario") {
    OrderedJson j = OrderedJson::parse(R"({
        "schema_version": 1,
        "name": "inline",
        "vars": ["x", "y", "z"],
        "seed_poly": "z^2+x*y^2",
        "steps": [
            {"op": "assert_label", "expect": "dpp"},
            {"op": "assert_equal", "expect": "z^2+x*y^2"}
        ]
    })");
    Report rep = run_scenario(parse_scenario(j));
    REQUIRE_FALSE(rep.passed());
    REQUIRE(rep.steps.size() == 2);
    REQUIRE(rep.steps[0].status == "fail");
    REQUIRE(rep.steps[1].status == "pass");
}

TEST_CASE("hard failures halt with an error status") {
    OrderedJson j = OrderedJson::parse(R"({
        "schema_version": 1,
        "name": "inline",
        "vars": ["w", "x", "y", "z"],
        "seed_poly": "z^2+x*y^2",
        "steps": [
            {"op": "blowup", "args": {"center": ["q", "z"], "chart": "q"}},
            {"op": "assert_label", "expect": "pp"}
        ]
    })");
    Report rep = run_scenario(parse_scenario(j));
    REQUIRE_FALSE(rep.passed());
    REQUIRE(rep.steps[0].status == "error");
    REQUIRE(rep.steps[1].status == "error");
}

TEST_CASE("bundled scenarios replay deterministically") {
    const std::vector<std::string> files{
        "scenarios/counterexample_branches.json",
        "scenarios/cp3_blowups_to_dpp.json",
        "scenarios/cp3_to_dpp.json",
        "scenarios/exc_chain.json",
        "scenarios/prod_charts.json",
    };
    for (const auto& path : files) {
        Scenario sc = load_scenario(path);
        Chart c1, c2;
        Report r1 = run_scenario(sc, &c1);
        Report r2 = run_scenario(sc, &c2);
        INFO(path);
        REQUIRE(r1.passed());
        REQUIRE(r1.to_json().dump() == r2.to_json().dump());
        REQUIRE(c1.germ() == c2.germ());
        REQUIRE(c1.divisors().size() == c2.divisors().size());
    }
}

TEST_CASE("scenario replay reproduces the final chart") {
    Scenario sc = load_scenario("scenarios/cp3_blowups_to_dpp.json");
    Chart final_chart;
    Report rep = run_scenario(sc, &final_chart);
    REQUIRE(rep.passed());
    REQUIRE(final_chart.germ() == P("x^2+(z-y^2)^2*(z+2*y^2)"));
    bool saww = false, sawx = false;
    for (const auto& d : final_chart.divisors()) {
        if (d.equation == P("w")) saww = d.multiplicity == 33;
        if (d.equation == P("x+5*y^3+3*y*z").trailing_monic())
            sawx = d.multiplicity == 4;
    }
    REQUIRE(saww);
    REQUIRE(sawx);
}
