// The singularity catalog: label round trips, classification of the model
// equations and of disguised copies, honest rejections, neighborhood scans,
// the cyclic-point construction, and the deformation families.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minsing/catalog.hpp"
#include "minsing/parse.hpp"

using namespace minsing;

namespace {
MPoly P(const std::string& s) { return parse_poly(s); }
const std::vector<SingLabel> kCataloged{
    SingLabel::NC2, SingLabel::NC3, SingLabel::NC4, SingLabel::PP,
    SingLabel::DPP, SingLabel::Prod, SingLabel::Exc, SingLabel::CP3};
}  // namespace

TEST_CASE("label names round trip") {
    for (SingLabel l :
         {SingLabel::Smooth, SingLabel::NC2, SingLabel::NC3, SingLabel::NC4,
          SingLabel::PP, SingLabel::DPP, SingLabel::Prod, SingLabel::Exc,
          SingLabel::CP3, SingLabel::Unrecognized, SingLabel::UnsupportedShape}) {
        auto back = label_from_string(to_string(l));
        REQUIRE(back.has_value());
        REQUIRE(*back == l);
    }
    REQUIRE_FALSE(label_from_string("nonsense").has_value());
}

TEST_CASE("model equations classify as themselves") {
    for (SingLabel l : kCataloged) {
        Detection d = detect(catalog_equation(l));
        INFO(to_string(l) << " -> " << to_string(d.label));
        REQUIRE(d.label == l);
    }
    REQUIRE_THROWS_AS(catalog_equation(SingLabel::Smooth), std::domain_error);
}

TEST_CASE("smooth and degenerate inputs") {
    REQUIRE(detect(P("x+z^2")).label == SingLabel::Smooth);
    REQUIRE(detect(P("w")).label == SingLabel::Smooth);
    REQUIRE(detect(MPoly(AlgNum(3))).label == SingLabel::Smooth);
    // The zero polynomial cuts out no hypersurface at all.
    Detection zero = detect(MPoly());
    REQUIRE(zero.label == SingLabel::Unrecognized);
    REQUIRE(zero.ord == -1);
}

TEST_CASE("honest rejections") {
    // Entangled double/triple points that imitate catalog cones.
    REQUIRE(detect(P("x*y+z^3")).label == SingLabel::Unrecognized);
    REQUIRE(detect(P("z^2+x*y")).label == SingLabel::Unrecognized);
    REQUIRE(detect(P("z^3+w^4")).label == SingLabel::Unrecognized);
    REQUIRE(detect(P("(z+x)^2")).label == SingLabel::Unrecognized);
    REQUIRE(detect(P("z^2+x^2*y^3")).label == SingLabel::Unrecognized);
    // Looks like the doubled-branch shape, but the doubled curve is a pair of
    // lines rather than one smooth component.
    REQUIRE(detect(P("z^2+x^2*y^2*(x+y)")).label == SingLabel::Unrecognized);
    // Higher fiber degree than the classifier covers: say so explicitly.
    REQUIRE(detect(P("z^2+z^3+x*y^2")).label == SingLabel::UnsupportedShape);
    REQUIRE(detect(P("z^3+z^4+w*y^3")).label == SingLabel::UnsupportedShape);
}

TEST_CASE("classification is coordinate free within the flag group") {
    // Hand-picked changes of coordinates first.
    REQUIRE(detect(P("z^2+y*x^2")).label == SingLabel::PP);
    MPoly cp3 = catalog_equation(SingLabel::CP3);
    MPoly moved = cp3.substitute({{"w", P("0-w")},
                                  {"x", P("2*x+w")},
                                  {"y", P("0-y+x-2*w")},
                                  {"z", P("z-2*y+x+w")}});
    REQUIRE(detect(moved).label == SingLabel::CP3);
    REQUIRE(detect(P("x^2+(z-y^2)^2*(z+2*y^2)")).label == SingLabel::DPP);

    // Seeded random flag changes must never alter the label.
    std::vector<std::string> vars{"w", "x", "y", "z"};
    for (SingLabel l : kCataloged) {
        std::mt19937_64 rng(1000 + static_cast<int>(l));
        for (int n = 0; n < 10; ++n) {
            LinearChange ch = random_flag_change(rng, vars);
            Detection d = detect(catalog_equation(l).substitute(ch.forward));
            INFO(to_string(l) << " under " << ch.description);
            REQUIRE(d.label == l);
        }
    }
}

TEST_CASE("detection notes carry evidence") {
    Detection d = detect(catalog_equation(SingLabel::DPP));
    REQUIRE(d.label == SingLabel::DPP);
    REQUIRE(d.route == "quadratic");
    REQUIRE_FALSE(d.notes.empty());
    Detection c = detect(catalog_equation(SingLabel::CP3));
    REQUIRE(c.route == "cyclic");
    Detection n = detect(catalog_equation(SingLabel::NC3));
    REQUIRE(n.route == "crossings");
    Detection p = detect(catalog_equation(SingLabel::Prod));
    REQUIRE(p.route == "product");
}

TEST_CASE("neighborhood scans along axes") {
    std::vector<std::string> vars{"w", "x", "y", "z"};
    Chart cp3(catalog_equation(SingLabel::CP3), vars);

    // Along the w axis the cyclic point degenerates to a triple crossing.
    auto sw = neighborhood_scan(cp3, "w", {AlgNum(1), AlgNum(-1)}, 12);
    REQUIRE(sw.size() == 2);
    for (const auto& e : sw) REQUIRE(e.result.label == SingLabel::NC3);

    // At w = 2 the crossing needs a cube root the field lacks; the scan must
    // report the boundary rather than guess.
    auto sw2 = neighborhood_scan(cp3, "w", {AlgNum(2)}, 12);
    REQUIRE(sw2[0].result.label == SingLabel::Unrecognized);

    // Along the x axis it degenerates to the doubled-branch double plane.
    auto sx =
        neighborhood_scan(cp3, "x", {AlgNum(1), AlgNum(-1), AlgNum(2)}, 12);
    for (const auto& e : sx) REQUIRE(e.result.label == SingLabel::DPP);

    // The product germ keeps a double crossing along its doubled line after
    // one blowup.
    Chart prod(catalog_equation(SingLabel::Prod), vars);
    REQUIRE(prod.blowup({"w", "x", "y", "z"}, "w").ok);
    auto sy = neighborhood_scan(prod, "y", {AlgNum(1), AlgNum(2)}, 12);
    for (const auto& e : sy) REQUIRE(e.result.label == SingLabel::NC2);
}

TEST_CASE("chart overload uses the current germ") {
    std::vector<std::string> vars{"w", "x", "y", "z"};
    Chart c(catalog_equation(SingLabel::Prod), vars);
    c.add_divisor(P("w"), 3);
    REQUIRE(detect(c).label == SingLabel::Prod);
}

TEST_CASE("cyclic point construction") {
    CyclicConstruction cc = construct_cyclic_point();
    REQUIRE(cc.v_exponents_divisible_by_3);
    REQUIRE(cc.z3_invariant);
    REQUIRE(cc.matches_catalog);
    REQUIRE(cc.descended == catalog_equation(SingLabel::CP3));
    // The specialized form really is the cube-descended germ pulled back.
    REQUIRE(cc.specialized ==
            cc.descended.substitute({{"w", MPoly::var("v", 3)}}));
}

TEST_CASE("family three exponent constraints") {
    REQUIRE_THROWS_AS(family_three_equation(3, 3, 0, 0), std::domain_error);
    REQUIRE_THROWS_AS(family_three_equation(2, 1, 0, 0), std::domain_error);
    REQUIRE(family_three_equation(1, 1, 0, 0) ==
            catalog_equation(SingLabel::CP3));
}

TEST_CASE("family instances match their ground truth") {
    for (Family fam : {Family::One, Family::TwoA, Family::TwoB, Family::Three}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            FamilyGenerator gen(seed);
            FamilyInstance inst = gen.generate(fam);
            SplitProfile p = split_profile(inst.f, "w", "z", 12);
            INFO(to_string(fam) << " seed " << seed << ": "
                                << inst.f.to_string());
            REQUIRE(p.branch_count == inst.ground_truth_branches);
            REQUIRE(p.ramification == inst.ground_truth_ramification);
        }
    }
    // The raw shape of the unibranch family, two seeds to keep this quick.
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        FamilyGenerator gen(seed);
        FamilyInstance inst = gen.generate(Family::ThreeRaw);
        SplitProfile p = split_profile(inst.f, "w", "z", 12);
        REQUIRE(p.branch_count == 1);
        REQUIRE(p.ramification == 3);
    }
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::One, Family::TwoA, Family::TwoB, Family::Three,
                     Family::ThreeRaw}) {
        auto back = family_from_string(to_string(f));
        REQUIRE(back.has_value());
        REQUIRE(*back == f);
    }
    REQUIRE_FALSE(family_from_string("four").has_value());
}

TEST_CASE("order comparison decides the first-try square root") {
    // Unibranch raw instances have ord B^3 > ord C^2, and then the
    // discriminant is a square before any base cover.
    FamilyGenerator gen(11);
    FamilyInstance inst = gen.generate(Family::ThreeRaw);
    DepressedCubic dep = depress_cubic(inst.f, "z", 12);
    REQUIRE(dep.ok);
    int ob = dep.B.poly().pow(3).ord(), oc = dep.C.poly().pow(2).ord();
    REQUIRE(ob > oc);
    RootResult r = series_sqrt(dep.delta);
    REQUIRE(r.status == RootStatus::Certified);

    // Two-sheet instances have ord B^3 <= ord C^2 and split at k = 2.
    FamilyGenerator gen2(11);
    FamilyInstance inst2 = gen2.generate(Family::TwoA);
    DepressedCubic dep2 = depress_cubic(inst2.f, "z", 12);
    REQUIRE(dep2.ok);
    REQUIRE(dep2.B.poly().pow(3).ord() <= dep2.C.poly().pow(2).ord());
    SplitProfile p2 = split_profile(inst2.f, "w", "z", 12);
    REQUIRE(p2.ramification == 2);
}
