#pragma once

// Fixed identity battery: exact expansions that pin down the algebraic
// backbone of the resolution chains.  Every check is an exact polynomial
// comparison; any failure is a red build.

#include "report.hpp"

namespace minsing {

namespace detail {

inline void check_equal(Report& rep, const std::string& op, const MPoly& lhs,
                        const MPoly& rhs) {
    ReportStep& rs = rep.add(op);
    rs.expected = rhs.to_string();
    rs.actual = lhs.to_string();
    if (lhs == rhs) {
        rs.status = "pass";
    } else {
        rs.status = "fail";
        rs.certificates["difference"] = (lhs - rhs).to_string();
    }
}

}  // namespace detail

inline Report verify_identities() {
    Report rep;
    rep.name = "identities";
    MPoly w = MPoly::var("w"), x = MPoly::var("x"), y = MPoly::var("y"),
          z = MPoly::var("z"), v = MPoly::var("v");

    // The cyclic-point equation, localized at x = 1 and rescaled y -> 2y,
    // becomes a quadratic in w over the base curve z^3.
    {
        MPoly lhs = catalog_equation(SingLabel::CP3).substitute({
            {"x", MPoly(AlgNum(1))},
            {"y", y.scaled(AlgNum(2))},
        });
        MPoly rhs = w.pow(2) +
                    AlgNum(2) * (y.pow(3).scaled(AlgNum(4)) -
                                 AlgNum(3) * y * z) * w +
                    z.pow(3);
        detail::check_equal(rep, "localized-cyclic-rewrite", lhs, rhs);
    }

    // The completed square of that quadratic factors the base curve.
    {
        MPoly lhs = z.pow(3) -
                    (y.pow(3).scaled(AlgNum(4)) - AlgNum(3) * y * z).pow(2);
        MPoly rhs = (z - y.pow(2).scaled(AlgNum(4))).pow(2) *
                    (z - y.pow(2));
        detail::check_equal(rep, "base-curve-factorization", lhs, rhs);
    }

    // The same completion one chart deeper: after the shift
    // z -> z + (3/4) w^2 y^2 and the rescale y -> 2y, the germ becomes the
    // degenerate pinch point with doubled sheet z = w^2 y^2.
    {
        MPoly start = x.pow(2) + z.pow(3) -
                      (w.pow(3) * y.pow(3) - AlgNum(3) * w * y * z)
                          .pow(2)
                          .scaled(AlgNum(Rat(1, 4)));
        MPoly lhs = start.substitute({
            {"z", z + (w.pow(2) * y.pow(2)).scaled(AlgNum(Rat(3, 4)))},
        });
        lhs = lhs.substitute({{"y", y.scaled(AlgNum(2))}});
        MPoly rhs = x.pow(2) +
                    (z - w.pow(2) * y.pow(2)).pow(2) *
                        (z + (w.pow(2) * y.pow(2)).scaled(AlgNum(2)));
        detail::check_equal(rep, "completed-square-chart", lhs, rhs);
    }

    // -27 * (C^2 - 4 B^3) is the discriminant: the product of squared root
    // differences for a cubic with symbolic roots x, y, z.
    {
        MPoly f = (v - x) * (v - y) * (v - z);
        DepressedCubic dep = depress_cubic(f, "v", kDefaultPrecision);
        ReportStep& rs = rep.add("discriminant-product");
        if (!dep.ok || !dep.delta.exact()) {
            rs.status = "fail";
            rs.actual = "depression failed: " + dep.error;
        } else {
            MPoly lhs = dep.delta.poly().scaled(AlgNum(-27));
            MPoly rhs = (x - y).pow(2) * (y - z).pow(2) * (x - z).pow(2);
            rs.expected = rhs.to_string();
            rs.actual = lhs.to_string();
            rs.status = lhs == rhs ? "pass" : "fail";
            if (rs.status == "fail")
                rs.certificates["difference"] = (lhs - rhs).to_string();
        }
    }

    // Discrete-Fourier construction of the cyclic point: the norm form
    // specializes with only cube-power weights and descends to the catalog
    // equation, invariantly under the cyclic symmetry.
    {
        ReportStep& rs = rep.add("cyclic-construction");
        try {
            CyclicConstruction cc = construct_cyclic_point();
            rs.expected = catalog_equation(SingLabel::CP3).to_string();
            rs.actual = cc.descended.to_string();
            rs.status = "pass";
            rs.certificates["phi"] = cc.phi.to_string();
            rs.certificates["specialized"] = cc.specialized.to_string();
            rs.certificates["cube_weights"] = cc.v_exponents_divisible_by_3;
            rs.certificates["cyclic_invariant"] = cc.z3_invariant;
        } catch (const std::exception& e) {
            rs.status = "fail";
            rs.actual = e.what();
        }
    }

    // The unibranch normal family specializes to the cyclic point at the
    // smallest admissible exponents.
    detail::check_equal(rep, "family-three-specialization",
                        family_three_equation(1, 1, 0, AlgNum(0)),
                        catalog_equation(SingLabel::CP3));

    rep.finish();
    return rep;
}

}  // namespace minsing
