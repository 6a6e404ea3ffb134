// Series square and cube roots checked against independently constructed
// answers: we build the root first, expand its power, and require the
// extractor to recover a root exactly.  Also the cubic discriminant product
// identity on random root triples.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minsing/cubic.hpp"
#include "minsing/series_roots.hpp"

using namespace minsing;

namespace {

// Random polynomial in up to three of {w, x, y} with small coefficients.
MPoly random_root_poly(std::mt19937_64& rng, int max_deg) {
    static const std::vector<std::string> names{"w", "x", "y"};
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, max_deg);
    MPoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        MPoly term{AlgNum(c)};
        int budget = max_deg;
        for (const auto& v : names) {
            int d = std::min(deg(rng), budget);
            budget -= d;
            if (d > 0) term *= MPoly::var(v, d);
        }
        p += term;
    }
    if (p.is_zero()) p = MPoly::var("x");
    return p;
}

}  // namespace

TEST_CASE("square roots of constructed squares") {
    std::mt19937_64 rng(4242);
    int certified = 0;
    for (int n = 0; n < 50; ++n) {
        MPoly g = random_root_poly(rng, 4);
        MPoly f = g * g;
        RootResult r = series_sqrt(Jet(f, 20));
        REQUIRE(r.ok());
        REQUIRE(r.root.poly() * r.root.poly() == f);
        REQUIRE((r.root.poly() == g || r.root.poly() == -g));
        if (r.status == RootStatus::Certified) ++certified;
    }
    // Exact polynomial squares must certify, not merely match to precision.
    REQUIRE(certified == 50);
}

TEST_CASE("cube roots of constructed cubes") {
    std::mt19937_64 rng(999);
    for (int n = 0; n < 50; ++n) {
        MPoly g = random_root_poly(rng, 2);
        MPoly f = g * g * g;
        RootResult r = series_cbrt(Jet(f, 20));
        REQUIRE(r.ok());
        REQUIRE(r.status == RootStatus::Certified);
        // Cube roots are determined up to a cube root of unity.
        REQUIRE(r.root.poly() * r.root.poly() * r.root.poly() == f);
    }
}

TEST_CASE("parity obstructions are reported") {
    REQUIRE(series_sqrt(Jet(MPoly::var("w"), 12)).status ==
            RootStatus::Obstructed);
    REQUIRE(series_sqrt(Jet(MPoly::var("w", 2) * MPoly::var("x"), 12)).status ==
            RootStatus::Obstructed);
    REQUIRE(series_cbrt(Jet(MPoly::var("w", 2), 12)).status ==
            RootStatus::Obstructed);
    // A sum whose lowest form is not a power.
    MPoly f = MPoly::var("x", 2) + MPoly::var("y", 3);
    auto r = series_cbrt(Jet(f, 12));
    REQUIRE_FALSE(r.ok());
}

TEST_CASE("roots needing a larger coefficient field") {
    MPoly x2 = MPoly::var("x", 2);
    MPoly x3 = MPoly::var("x", 3);
    REQUIRE(series_sqrt(Jet(AlgNum(2) * x2, 12)).status ==
            RootStatus::NeedsFieldExtension);
    REQUIRE(series_cbrt(Jet(AlgNum(2) * x3, 12)).status ==
            RootStatus::NeedsFieldExtension);
    // -1 and 3 have square roots in the working field, so these certify.
    auto rm = series_sqrt(Jet(AlgNum(-1) * x2, 12));
    REQUIRE(rm.status == RootStatus::Certified);
    REQUIRE(rm.root.poly() * rm.root.poly() == AlgNum(-1) * x2);
    auto r3 = series_sqrt(Jet(AlgNum(3) * x2, 12));
    REQUIRE(r3.status == RootStatus::Certified);
    REQUIRE(r3.root.poly() * r3.root.poly() == AlgNum(3) * x2);
}

TEST_CASE("truncated input yields a root to precision") {
    MPoly g = MPoly(AlgNum(1)) + MPoly::var("w");
    MPoly f = g * g;
    Jet approx = Jet::approximation(f.pow(3), 4);  // (1+w)^6 cut at degree 4
    RootResult r = series_sqrt(approx);
    REQUIRE(r.ok());
    REQUIRE(r.status == RootStatus::ToPrecision);
    Jet expect = Jet::approximation(g.pow(3), 4);
    REQUIRE((agree(r.root, expect) || agree(r.root, expect.scaled(AlgNum(-1)))));
}

TEST_CASE("monomial prefactors ride along") {
    // w^4 * (1 + x)^2 has the certified root w^2 * (1 + x).
    MPoly f = MPoly::var("w", 4) * (MPoly(AlgNum(1)) + MPoly::var("x")).pow(2);
    RootResult r = series_sqrt(Jet(f, 12));
    REQUIRE(r.status == RootStatus::Certified);
    REQUIRE(r.root.poly() * r.root.poly() == f);
}

TEST_CASE("depressed form of a cubic") {
    // (z - x)(z - y)(z + x + y) is already trace free in z.
    MPoly z = MPoly::var("z"), x = MPoly::var("x"), y = MPoly::var("y");
    MPoly f = (z - x) * (z - y) * (z + x + y);
    DepressedCubic dep = depress_cubic(f, "z", 12);
    REQUIRE(dep.ok);
    REQUIRE(dep.shift.is_zero());
    // z^3 - 3 B z + C with 3B = x^2 + xy + y^2 and C = -xy(x+y) ... check
    // structurally through the defining identity instead of frozen strings.
    MPoly rebuilt = z.pow(3) - AlgNum(3) * (dep.B.poly() * z) + dep.C.poly();
    REQUIRE(rebuilt == f);
    REQUIRE(dep.delta.poly() ==
            dep.C.poly() * dep.C.poly() -
                AlgNum(4) * dep.B.poly().pow(3));
}

TEST_CASE("discriminant equals the root difference product") {
    std::mt19937_64 rng(31337);
    for (int n = 0; n < 50; ++n) {
        MPoly r1 = random_root_poly(rng, 2);
        MPoly r2 = random_root_poly(rng, 2);
        MPoly r3 = -(r1 + r2);  // trace-free triple
        MPoly z = MPoly::var("z");
        MPoly f = (z - r1) * (z - r2) * (z - r3);
        DepressedCubic dep = depress_cubic(f, "z", 24);
        REQUIRE(dep.ok);
        REQUIRE(dep.delta.exact());
        MPoly prod = (r1 - r2).pow(2) * (r2 - r3).pow(2) * (r1 - r3).pow(2);
        REQUIRE(AlgNum(-27) * dep.delta.poly() == prod);
    }
}

TEST_CASE("discriminant product for shifted cubics") {
    // The identity survives a nonzero trace: the depression shift removes it.
    std::mt19937_64 rng(606);
    for (int n = 0; n < 10; ++n) {
        MPoly r1 = random_root_poly(rng, 2);
        MPoly r2 = random_root_poly(rng, 2);
        MPoly r3 = random_root_poly(rng, 2);
        MPoly z = MPoly::var("z");
        MPoly f = (z - r1) * (z - r2) * (z - r3);
        DepressedCubic dep = depress_cubic(f, "z", 24);
        REQUIRE(dep.ok);
        MPoly prod = (r1 - r2).pow(2) * (r2 - r3).pow(2) * (r1 - r3).pow(2);
        REQUIRE(AlgNum(-27) * dep.delta.poly() == prod);
    }
}
