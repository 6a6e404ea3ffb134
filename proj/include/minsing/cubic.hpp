#pragma once

// Splitting cubics (and quadratics) in a distinguished variable into linear
// factors with power-series coefficients, optionally after a ramified cover
// w = v^k of the base.  The number of factors that appear at the smallest
// working k gives the branch count of the corresponding curve germ:
// k = 1 -> 3 branches, k = 2 -> 2, k = 3 -> 1 (for quadratics: k = 1 -> 2,
// k = 2 -> 1).  If no k works the analysis is reported as indeterminate
// together with per-k certificates.

#include <string>
#include <vector>

#include "gcd.hpp"
#include "series_roots.hpp"

namespace minsing {

enum class SplitOutcome { Split, Obstructed, NeedsFieldExtension };

inline const char* to_string(SplitOutcome s) {
    switch (s) {
        case SplitOutcome::Split: return "split";
        case SplitOutcome::Obstructed: return "obstructed";
        case SplitOutcome::NeedsFieldExtension: return "needs-field-extension";
    }
    return "?";
}

struct DepressedCubic {
    bool ok = false;
    std::string error;
    Jet unit;   // leading z-coefficient (must be a unit)
    Jet shift;  // s with z = t - s; t the depressed variable
    Jet B, C;   // t^3 - 3 B t + C
    Jet delta;  // C^2 - 4 B^3
};

inline DepressedCubic depress_cubic(const MPoly& f, const std::string& zvar,
                                    int prec) {
    DepressedCubic d;
    auto uni = f.as_univariate(zvar);
    if (uni.empty() || uni.rbegin()->first != 3) {
        d.error = "not a cubic in " + zvar;
        return d;
    }
    MPoly a3 = uni[3], a2 = uni[2], a1 = uni[1], a0 = uni[0];
    if (a3.constant_term().is_zero()) {
        d.error = "leading coefficient of " + zvar + "^3 is not a unit";
        return d;
    }
    Jet u(a3, prec);
    Jet b2 = Jet(a2, prec) / u;
    Jet b1 = Jet(a1, prec) / u;
    Jet b0 = Jet(a0, prec) / u;
    Jet s = b2.scaled(AlgNum(Rat(1, 3)));
    // t^3 + p t + q with p = b1 - 3 s^2, q = 2 s^3 - s b1 + b0.
    Jet p = b1 - s.pow(2).scaled(AlgNum(3));
    Jet q = s.pow(3).scaled(AlgNum(2)) - s * b1 + b0;
    d.ok = true;
    d.unit = u;
    d.shift = s;
    d.B = p.scaled(AlgNum(Rat(-1, 3)));
    d.C = q;
    d.delta = d.C.pow(2) - d.B.pow(3).scaled(AlgNum(4));
    return d;
}

struct CubicSplit {
    SplitOutcome outcome = SplitOutcome::Obstructed;
    DepressedCubic dep;
    RootResult delta_sqrt;      // A with A^2 = delta
    RootResult cbrt1, cbrt2;    // eta1^3 = (C+A)/2, eta2^3 = (C-A)/2
    Jet eta1, eta2;             // paired so that eta1 * eta2 = B
    std::vector<Jet> roots;     // the three roots in the original variable
    bool exact_factorization = false;
    std::string note;
};

// Attempts to write f (a cubic in zvar, unit leading coefficient) as
// unit * prod (z - root_j) with power-series roots.
inline CubicSplit full_split_cubic(const MPoly& f, const std::string& zvar,
                                   int prec) {
    CubicSplit out;
    out.dep = depress_cubic(f, zvar, prec);
    if (!out.dep.ok) {
        out.note = out.dep.error;
        return out;
    }
    out.delta_sqrt = series_sqrt(out.dep.delta);
    if (!out.delta_sqrt.ok()) {
        out.outcome = out.delta_sqrt.status == RootStatus::NeedsFieldExtension
                          ? SplitOutcome::NeedsFieldExtension
                          : SplitOutcome::Obstructed;
        out.note = "discriminant square root: " + out.delta_sqrt.note;
        return out;
    }
    const Jet& A = out.delta_sqrt.root;
    out.cbrt1 = series_cbrt((out.dep.C + A).scaled(AlgNum(Rat(1, 2))));
    if (!out.cbrt1.ok()) {
        out.outcome = out.cbrt1.status == RootStatus::NeedsFieldExtension
                          ? SplitOutcome::NeedsFieldExtension
                          : SplitOutcome::Obstructed;
        out.note = "first radicand cube root: " + out.cbrt1.note;
        return out;
    }
    out.cbrt2 = series_cbrt((out.dep.C - A).scaled(AlgNum(Rat(1, 2))));
    if (!out.cbrt2.ok()) {
        out.outcome = out.cbrt2.status == RootStatus::NeedsFieldExtension
                          ? SplitOutcome::NeedsFieldExtension
                          : SplitOutcome::Obstructed;
        out.note = "second radicand cube root: " + out.cbrt2.note;
        return out;
    }
    // Pair the cube-root choices so that eta1 * eta2 = B.
    out.eta1 = out.cbrt1.root;
    bool paired = false;
    AlgNum eps = AlgNum::eps();
    for (int k = 0; k < 3 && !paired; ++k) {
        Jet cand = out.cbrt2.root.scaled(eps.pow(k));
        if (agree(out.eta1 * cand, out.dep.B)) {
            out.eta2 = cand;
            paired = true;
        }
    }
    if (!paired) {
        out.outcome = SplitOutcome::Obstructed;
        out.note = "cube roots admit no pairing with product B";
        return out;
    }
    for (int j = 0; j < 3; ++j) {
        Jet t = -(out.eta1.scaled(eps.pow(j)) +
                  out.eta2.scaled(eps.pow(2 * j)));
        out.roots.push_back(t - out.dep.shift);
    }
    out.outcome = SplitOutcome::Split;
    // Verify the factorization against f, exactly when everything is exact.
    Jet z(MPoly::var(zvar), prec);
    Jet prod = out.dep.unit;
    for (const auto& r : out.roots) prod *= (z - r);
    Jet fj(f, prec);
    if (!agree(prod, fj)) {
        out.outcome = SplitOutcome::Obstructed;
        out.note = "internal: reassembled product disagrees with input";
        out.roots.clear();
        return out;
    }
    out.exact_factorization = prod.exact() && prod.poly() == f;
    return out;
}

struct ProfileAttempt {
    int k = 0;                  // cover exponent: w = v^k
    std::string cover_var;      // v (equals the base variable when k = 1)
    SplitOutcome outcome = SplitOutcome::Obstructed;
    RootResult delta_sqrt;
    int ord_B3 = kOrdInf;       // order of B^3
    int ord_C2 = kOrdInf;       // order of C^2
    MPoly delta_square_part;    // delta = unit * square_part^2 * cofactor
    MPoly delta_cofactor;       //   (filled when delta is exactly known)
    AlgNum delta_unit;
    bool delta_decomposed = false;
    std::string note;
};

struct SplitProfile {
    int branch_count = -1;  // 3 / 2 / 1, or -1 when indeterminate
    int ramification = 0;   // k of the first successful split
    bool needs_field_extension = false;
    std::vector<ProfileAttempt> attempts;
    CubicSplit split;       // the successful split, if any
};

inline std::string fresh_var_name(const MPoly& f, const std::string& base) {
    if (!f.depends_on(base)) return base;
    for (int k = 1;; ++k) {
        std::string cand = base + std::to_string(k);
        if (!f.depends_on(cand)) return cand;
    }
}

// Ramified trichotomy for a cubic in zvar over the base variable wvar.  The
// discriminant decomposition delta = unit * square^2 * cofactor is a report
// extra whose gcd cost grows quickly on dense inputs, so it is only
// computed on request.
inline SplitProfile split_profile(const MPoly& f, const std::string& wvar,
                                  const std::string& zvar, int prec,
                                  bool decompose_delta = false) {
    SplitProfile out;
    std::string v = fresh_var_name(f, "v");
    for (int k = 1; k <= 3; ++k) {
        MPoly fk = k == 1
                       ? f
                       : f.substitute({{wvar, MPoly::var(v, k)}});
        CubicSplit s = full_split_cubic(fk, zvar, prec);
        ProfileAttempt att;
        att.k = k;
        att.cover_var = k == 1 ? wvar : v;
        att.outcome = s.outcome;
        att.delta_sqrt = s.delta_sqrt;
        att.note = s.note;
        if (s.dep.ok) {
            att.ord_B3 = s.dep.B.pow(3).ord();
            att.ord_C2 = s.dep.C.pow(2).ord();
            if (decompose_delta && s.dep.delta.exact() &&
                !s.dep.delta.is_zero()) {
                auto dec = squarefree_decompose(s.dep.delta.poly());
                MPoly sq(AlgNum(1)), cof(AlgNum(1));
                for (const auto& fac : dec.factors) {
                    sq *= fac.factor.pow(fac.multiplicity / 2);
                    if (fac.multiplicity % 2) cof *= fac.factor;
                }
                att.delta_square_part = sq;
                att.delta_cofactor = cof;
                att.delta_unit = dec.unit;
                att.delta_decomposed = true;
            }
        }
        if (s.outcome == SplitOutcome::NeedsFieldExtension)
            out.needs_field_extension = true;
        out.attempts.push_back(att);
        if (s.outcome == SplitOutcome::Split) {
            out.branch_count = 4 - k;
            out.ramification = k;
            out.split = std::move(s);
            return out;
        }
    }
    return out;
}

struct QuadraticSplit {
    SplitOutcome outcome = SplitOutcome::Obstructed;
    Jet unit, shift;
    Jet D;                  // (b/2)^2 - c after normalization
    RootResult disc_sqrt;
    std::vector<Jet> roots;
    bool exact_factorization = false;
    std::string note;
};

inline QuadraticSplit split_quadratic(const MPoly& f, const std::string& zvar,
                                      int prec) {
    QuadraticSplit out;
    auto uni = f.as_univariate(zvar);
    if (uni.empty() || uni.rbegin()->first != 2) {
        out.note = "not a quadratic in " + zvar;
        return out;
    }
    MPoly a2 = uni[2], a1 = uni[1], a0 = uni[0];
    if (a2.constant_term().is_zero()) {
        out.note = "leading coefficient of " + zvar + "^2 is not a unit";
        return out;
    }
    Jet u(a2, prec);
    Jet b = Jet(a1, prec) / u;
    Jet c = Jet(a0, prec) / u;
    out.unit = u;
    out.shift = b.scaled(AlgNum(Rat(1, 2)));
    out.D = out.shift.pow(2) - c;
    out.disc_sqrt = series_sqrt(out.D);
    if (!out.disc_sqrt.ok()) {
        out.outcome =
            out.disc_sqrt.status == RootStatus::NeedsFieldExtension
                ? SplitOutcome::NeedsFieldExtension
                : SplitOutcome::Obstructed;
        out.note = "discriminant square root: " + out.disc_sqrt.note;
        return out;
    }
    const Jet& s = out.disc_sqrt.root;
    out.roots.push_back(-out.shift + s);
    out.roots.push_back(-out.shift - s);
    out.outcome = SplitOutcome::Split;
    Jet z(MPoly::var(zvar), prec);
    Jet prod = u * (z - out.roots[0]) * (z - out.roots[1]);
    if (!agree(prod, Jet(f, prec))) {
        out.outcome = SplitOutcome::Obstructed;
        out.note = "internal: reassembled product disagrees with input";
        out.roots.clear();
        return out;
    }
    out.exact_factorization = prod.exact() && prod.poly() == f;
    return out;
}

struct QuadraticProfile {
    int branch_count = -1;  // 2 / 1, or -1
    int ramification = 0;
    bool needs_field_extension = false;
    std::vector<ProfileAttempt> attempts;
    QuadraticSplit split;
};

inline QuadraticProfile quadratic_profile(const MPoly& f,
                                          const std::string& wvar,
                                          const std::string& zvar, int prec) {
    QuadraticProfile out;
    std::string v = fresh_var_name(f, "v");
    for (int k = 1; k <= 2; ++k) {
        MPoly fk = k == 1 ? f : f.substitute({{wvar, MPoly::var(v, k)}});
        QuadraticSplit s = split_quadratic(fk, zvar, prec);
        ProfileAttempt att;
        att.k = k;
        att.cover_var = k == 1 ? wvar : v;
        att.outcome = s.outcome;
        att.delta_sqrt = s.disc_sqrt;
        att.note = s.note;
        if (s.outcome == SplitOutcome::NeedsFieldExtension)
            out.needs_field_extension = true;
        out.attempts.push_back(att);
        if (s.outcome == SplitOutcome::Split) {
            out.branch_count = 3 - k;
            out.ramification = k;
            out.split = std::move(s);
            return out;
        }
    }
    return out;
}

}  // namespace minsing
