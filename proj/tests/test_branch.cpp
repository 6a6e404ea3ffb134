// Branch analysis: exact gcds and squarefree splitting, linear-form
// factorization of cones, cubic splitting over ramified base covers, and
// Hensel separation of transverse sheets.
#include <catch2/catch_amalgamated.hpp>

#include "minsing/cubic.hpp"
#include "minsing/gcd.hpp"
#include "minsing/hensel.hpp"
#include "minsing/linear_forms.hpp"

using namespace minsing;

namespace {
const MPoly w = MPoly::var("w");
const MPoly x = MPoly::var("x");
const MPoly y = MPoly::var("y");
const MPoly z = MPoly::var("z");
}  // namespace

TEST_CASE("polynomial gcd") {
    MPoly a = (x + y).pow(2) * (x - y);
    MPoly b = (x + y) * (x - y).pow(2);
    REQUIRE(poly_gcd(a, b) == ((x + y) * (x - y)).monic());
    REQUIRE(poly_gcd(a, a) == a.monic());
    REQUIRE(poly_gcd(x.pow(3), y.pow(2)) == MPoly(AlgNum(1)));
    // Multivariate content.
    MPoly f = y * x.pow(2) + y.pow(2);
    REQUIRE(detail::content_wrt(f, "x") == y.monic());
    REQUIRE(detail::content_wrt(x.pow(2) + y, "x") == MPoly(AlgNum(1)));
}

TEST_CASE("gcd survives dense inputs") {
    // Coefficient growth killed the naive remainder sequence on inputs of
    // this shape; the subresultant sequence must stay exact and fast.
    MPoly g = (x + AlgNum(2) * y + w).pow(2);
    MPoly a = g * (x.pow(3) + AlgNum(3) * w * y * x + y.pow(2) + w.pow(5));
    MPoly b = g * (x.pow(2) - w * x * y + AlgNum(7) * y.pow(3) - w.pow(4));
    MPoly d = poly_gcd(a, b);
    REQUIRE(d == g.monic());
}

TEST_CASE("squarefree decomposition") {
    MPoly p = (x + y).pow(3) * (x - y).pow(2);
    SquarefreeDecomposition d = squarefree_decompose(p);
    REQUIRE(d.reassembled() == p);
    REQUIRE(d.factors.size() == 2);
    bool saw3 = false, saw2 = false;
    for (const auto& f : d.factors) {
        if (f.multiplicity == 3) saw3 = f.factor == (x + y).monic();
        if (f.multiplicity == 2) saw2 = f.factor == (x - y).monic();
    }
    REQUIRE(saw3);
    REQUIRE(saw2);
    // Coprime factors of equal multiplicity are reported as one band.
    SquarefreeDecomposition d2 = squarefree_decompose((x * y).pow(2));
    REQUIRE(d2.factors.size() == 1);
    REQUIRE(d2.factors[0].multiplicity == 2);
    REQUIRE(d2.factors[0].factor == (x * y).monic());
    REQUIRE(d2.reassembled() == (x * y).pow(2));
}

TEST_CASE("linear form factorization by degree") {
    // Quadratic.
    FormFactorization f2 = factor_linear_forms((x + AlgNum(2) * y) * (x - y));
    REQUIRE(f2.ok);
    REQUIRE(f2.total_multiplicity() == 2);
    {
        MPoly prod{f2.unit};
        for (size_t i = 0; i < f2.factors.size(); ++i)
            prod *= f2.factors[i].pow(f2.multiplicities[i]);
        REQUIRE(prod == (x + AlgNum(2) * y) * (x - y));
    }
    // i lies in the coefficient field, so x^2 + y^2 splits.
    FormFactorization fi = factor_linear_forms(x.pow(2) + y.pow(2));
    REQUIRE(fi.ok);
    REQUIRE(fi.factors.size() == 2);
    // Cubic with three concurrent lines.
    MPoly c3 = (x + y) * (x + AlgNum(2) * y) * (x - AlgNum(3) * y);
    FormFactorization f3 = factor_linear_forms(c3);
    REQUIRE(f3.ok);
    REQUIRE(f3.total_multiplicity() == 3);
    {
        MPoly prod{f3.unit};
        for (size_t i = 0; i < f3.factors.size(); ++i)
            prod *= f3.factors[i].pow(f3.multiplicities[i]);
        REQUIRE(prod == c3);
    }
    // Quartic with a doubled pair.
    MPoly c4 = (x + y).pow(2) * (x - y).pow(2);
    FormFactorization f4 = factor_linear_forms(c4);
    REQUIRE(f4.ok);
    REQUIRE(f4.total_multiplicity() == 4);
    // Monomials factor by inspection.
    FormFactorization fm = factor_linear_forms(x.pow(2) * y.pow(3));
    REQUIRE(fm.ok);
    REQUIRE(fm.total_multiplicity() == 5);
    // A smooth quadric in three variables is not a product of lines.
    FormFactorization bad =
        factor_linear_forms(x.pow(2) + y.pow(2) + z.pow(2));
    REQUIRE_FALSE(bad.ok);
    // Rank of the span of the factors.
    REQUIRE(f2.rank() == 2);
    REQUIRE(fm.rank() == 2);
}

TEST_CASE("cubic depression rejects non-cubics") {
    REQUIRE_FALSE(depress_cubic(z.pow(2) + x, "z", 12).ok);
    REQUIRE_FALSE(depress_cubic(w * z.pow(3) + x, "z", 12).ok);  // non-unit lead
}

TEST_CASE("full cubic split on a transparent product") {
    MPoly f = z * (z + w * x) * (z + w * x + w.pow(2) * y);
    CubicSplit s = full_split_cubic(f, "z", 12);
    REQUIRE(s.outcome == SplitOutcome::Split);
    REQUIRE(s.roots.size() == 3);
    REQUIRE(s.exact_factorization);
    MPoly prod{AlgNum(1)};
    for (const auto& r : s.roots) prod *= (z - r.poly());
    REQUIRE(prod == f);
    // The two cube-root branches are paired so their product is B.
    REQUIRE(s.eta1.poly() * s.eta2.poly() == s.dep.B.poly());
}

TEST_CASE("split profiles across the family shapes") {
    // Three sheets already over the base: k = 1.
    MPoly one = z * (z + w * x) * (z + w * (x + w * y));
    SplitProfile p1 = split_profile(one, "w", "z", 12);
    REQUIRE(p1.branch_count == 3);
    REQUIRE(p1.ramification == 1);
    REQUIRE(p1.attempts.size() == 1);

    // One sheet plus a double sheet needing the square cover: k = 2.
    MPoly twoa = (z + w * x) *
                 (z.pow(2) + w.pow(3) * (x + w * y).pow(2));
    SplitProfile p2 = split_profile(twoa, "w", "z", 12);
    REQUIRE(p2.branch_count == 2);
    REQUIRE(p2.ramification == 2);

    // Cyclic triple point: splits only at k = 3.
    MPoly cyc = z.pow(3) + w * y.pow(3) + w.pow(2) * x.pow(3) -
                AlgNum(3) * (w * x * y * z);
    SplitProfile p3 = split_profile(cyc, "w", "z", 12);
    REQUIRE(p3.branch_count == 1);
    REQUIRE(p3.ramification == 3);
    REQUIRE_FALSE(p3.needs_field_extension);

    // The obstructed product: no cover splits it.
    MPoly bad = (z + x) * (z.pow(2) + (w + y) * y.pow(2));
    SplitProfile pb = split_profile(bad, "w", "z", 12, true);
    REQUIRE(pb.branch_count == -1);
    REQUIRE(pb.attempts.size() == 3);
    for (const auto& a : pb.attempts)
        REQUIRE(a.outcome != SplitOutcome::Split);
    REQUIRE(pb.attempts[1].k == 2);
    REQUIRE(pb.attempts[1].delta_sqrt.status == RootStatus::Obstructed);
}

TEST_CASE("delta decomposition is attached on demand") {
    MPoly cyc = z.pow(3) + w * y.pow(3) + w.pow(2) * x.pow(3) -
                AlgNum(3) * (w * x * y * z);
    SplitProfile bare = split_profile(cyc, "w", "z", 12);
    SplitProfile rich = split_profile(cyc, "w", "z", 12, true);
    bool any_bare = false, any_rich = false;
    for (const auto& a : bare.attempts) any_bare |= a.delta_decomposed;
    for (const auto& a : rich.attempts) any_rich |= a.delta_decomposed;
    REQUIRE_FALSE(any_bare);
    REQUIRE(any_rich);
    for (const auto& a : rich.attempts) {
        if (!a.delta_decomposed) continue;
        // delta = unit * square_part^2 * cofactor must hold exactly.
        MPoly delta = MPoly{a.delta_unit} * a.delta_square_part.pow(2) *
                      a.delta_cofactor;
        DepressedCubic dep = depress_cubic(
            cyc.substitute({{"w", MPoly::var(a.cover_var, a.k)}}), "z", 12);
        REQUIRE(dep.delta.poly() == delta);
    }
}

TEST_CASE("quadratic profiles") {
    QuadraticProfile q1 = quadratic_profile(z.pow(2) + w * y.pow(2), "w", "z", 12);
    REQUIRE(q1.branch_count == 1);
    REQUIRE(q1.ramification == 2);
    QuadraticProfile q2 =
        quadratic_profile(z.pow(2) + w.pow(2) * y.pow(2), "w", "z", 12);
    REQUIRE(q2.branch_count == 2);
    REQUIRE(q2.ramification == 1);
    QuadraticProfile qx =
        quadratic_profile(z.pow(2) + y * (w * y + x.pow(2)).pow(2), "w", "z", 12);
    REQUIRE(qx.branch_count == -1);
}

TEST_CASE("ramification orders of the cube root pair") {
    // For the cyclic point the two cube-root series have cover orders 1 and 2
    // in the threefold cover variable.
    MPoly cyc = z.pow(3) + w * y.pow(3) + w.pow(2) * x.pow(3) -
                AlgNum(3) * (w * x * y * z);
    SplitProfile p = split_profile(cyc, "w", "z", 12);
    REQUIRE(p.branch_count == 1);
    const std::string v = p.attempts.back().cover_var;
    auto [o1, c1] = p.split.eta1.poly().factor_out_variable(v);
    auto [o2, c2] = p.split.eta2.poly().factor_out_variable(v);
    REQUIRE(std::min(o1, o2) == 1);
    REQUIRE(std::max(o1, o2) == 2);
}

TEST_CASE("hensel separation of transverse sheets") {
    // Build the factorization first; the split must recover it.
    MPoly f = (x + z.pow(2)) * (y + z.pow(3));
    FormFactorization cone = factor_linear_forms(f.leading_form());
    REQUIRE(cone.ok);
    HenselSplit h = hensel_split_independent(f, cone.factors, 14);
    REQUIRE(h.ok);
    REQUIRE(h.factors.size() == 2);
    MPoly prod{h.unit};
    for (const auto& g : h.factors) prod *= g.poly();
    // Transverse smooth sheets of a polynomial germ reassemble exactly.
    REQUIRE(prod == f);
}

TEST_CASE("splitting off the smooth factor of a product") {
    MPoly f = x * (z.pow(2) + w * y.pow(2));
    CoprimeSplit s = split_off_smooth_factor(f, x, 12);
    REQUIRE(s.ok);
    REQUIRE(s.smooth_factor.poly() * s.cofactor.poly() == f);
    REQUIRE(s.smooth_factor.poly().ord() == 1);
    REQUIRE(s.cofactor.poly().ord() == 2);
}

TEST_CASE("hensel refuses entangled germs") {
    // x*y + z^3 looks like two sheets at cone level, but z^3 lies in neither
    // axis ideal, so no sheet decomposition exists and the split must say so.
    MPoly f = x * y + z.pow(3);
    FormFactorization cone = factor_linear_forms(f.leading_form());
    REQUIRE(cone.ok);
    HenselSplit h = hensel_split_independent(f, cone.factors, 12);
    REQUIRE_FALSE(h.ok);
    REQUIRE(h.obstruction_degree == 3);
    REQUIRE_FALSE(h.note.empty());
}
