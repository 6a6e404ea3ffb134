#pragma once

// The normal-form catalog: reference equations for the singularity classes
// handled by this library, the cyclic-point construction through a discrete
// Fourier transform, randomized generators for the normal-form families of
// limits of triple normal crossings, certificate-based detection mapping a
// chart equation to a catalog label, and neighborhood scans re-detecting the
// label at nearby points of a coordinate axis.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "chart.hpp"
#include "cubic.hpp"
#include "gcd.hpp"
#include "hensel.hpp"
#include "linear_forms.hpp"

namespace minsing {

// ---------------------------------------------------------------------------
// Labels and reference equations
// ---------------------------------------------------------------------------

enum class SingLabel {
    Smooth,
    NC2,
    NC3,
    NC4,
    PP,    // pinch point
    DPP,   // degenerate pinch point
    Prod,  // smooth sheet times a pinch-point quadratic
    Exc,   // the exceptional quadratic z^2 + y(wy+x^2)^2
    CP3,   // the cyclic point z^3 + wy^3 + w^2x^3 - 3wxyz
    Unrecognized,
    UnsupportedShape,
};

inline const char* to_string(SingLabel l) {
    switch (l) {
        case SingLabel::Smooth: return "smooth";
        case SingLabel::NC2: return "nc2";
        case SingLabel::NC3: return "nc3";
        case SingLabel::NC4: return "nc4";
        case SingLabel::PP: return "pp";
        case SingLabel::DPP: return "dpp";
        case SingLabel::Prod: return "prod";
        case SingLabel::Exc: return "exc";
        case SingLabel::CP3: return "cp3";
        case SingLabel::Unrecognized: return "unrecognized";
        case SingLabel::UnsupportedShape: return "unsupported-shape";
    }
    return "?";
}

inline std::optional<SingLabel> label_from_string(const std::string& s) {
    static const std::pair<const char*, SingLabel> table[] = {
        {"smooth", SingLabel::Smooth},
        {"nc2", SingLabel::NC2},
        {"nc3", SingLabel::NC3},
        {"nc4", SingLabel::NC4},
        {"pp", SingLabel::PP},
        {"dpp", SingLabel::DPP},
        {"prod", SingLabel::Prod},
        {"exc", SingLabel::Exc},
        {"cp3", SingLabel::CP3},
        {"unrecognized", SingLabel::Unrecognized},
        {"unsupported-shape", SingLabel::UnsupportedShape},
    };
    for (const auto& [name, l] : table)
        if (s == name) return l;
    return std::nullopt;
}

// The eight catalog equations, in the standard variables w, x, y, z.
inline MPoly catalog_equation(SingLabel l) {
    MPoly w = MPoly::var("w"), x = MPoly::var("x"), y = MPoly::var("y"),
          z = MPoly::var("z");
    switch (l) {
        case SingLabel::NC2:
            return x * y;
        case SingLabel::NC3:
            return x * y * z;
        case SingLabel::NC4:
            return w * x * y * z;
        case SingLabel::PP:
            return z.pow(2) + x * y.pow(2);
        case SingLabel::DPP:
            return z.pow(2) +
                   (y + AlgNum(2) * x.pow(2)) * (y - x.pow(2)).pow(2);
        case SingLabel::Prod:
            return x * (z.pow(2) + w * y.pow(2));
        case SingLabel::Exc:
            return z.pow(2) + y * (w * y + x.pow(2)).pow(2);
        case SingLabel::CP3:
            return z.pow(3) + w * y.pow(3) + w.pow(2) * x.pow(3) -
                   AlgNum(3) * w * x * y * z;
        default:
            throw std::domain_error(std::string("catalog_equation: no "
                                                "reference equation for ") +
                                    to_string(l));
    }
}

// ---------------------------------------------------------------------------
// Cyclic-point construction
// ---------------------------------------------------------------------------
//
// Phi(z, p, q) = (z + p + q)(z + eps p + eps^2 q)(z + eps^2 p + eps q)
//              = z^3 + p^3 + q^3 - 3 p q z,
// the norm form of a cyclic cubic cover.  Substituting p = v y, q = v^2 x
// leaves only v-exponents divisible by 3, so v^3 descends to a single base
// parameter w and yields the cyclic-point equation.

struct CyclicConstruction {
    MPoly phi;          // in z, p, q
    MPoly specialized;  // phi(z, v y, v^2 x)
    MPoly descended;    // v^3 replaced by w
    bool v_exponents_divisible_by_3 = false;
    bool z3_invariant = false;
    bool matches_catalog = false;
};

inline CyclicConstruction construct_cyclic_point() {
    CyclicConstruction out;
    MPoly z = MPoly::var("z"), p = MPoly::var("p"), q = MPoly::var("q");
    AlgNum eps = AlgNum::eps();
    out.phi = MPoly(AlgNum(1));
    for (int j = 0; j < 3; ++j)
        out.phi *= z + p.scaled(eps.pow(j)) + q.scaled(eps.pow(2 * j));
    out.z3_invariant =
        out.phi.substitute({{"p", p.scaled(eps)},
                            {"q", q.scaled(eps.pow(2))}}) == out.phi;

    MPoly v = MPoly::var("v");
    out.specialized = out.phi.substitute(
        {{"p", v * MPoly::var("y")}, {"q", v.pow(2) * MPoly::var("x")}});

    out.v_exponents_divisible_by_3 = true;
    const auto& vars = out.specialized.vars();
    size_t vi = vars.size();
    for (size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == "v") vi = k;
    for (const auto& [e, c] : out.specialized.terms()) {
        int ve = vi < e.size() ? e[vi] : 0;
        if (ve % 3 != 0) out.v_exponents_divisible_by_3 = false;
        MPoly mono(c);
        for (size_t k = 0; k < vars.size(); ++k) {
            if (e[k] == 0) continue;
            if (k == vi)
                mono *= MPoly::var("w", e[k] / 3);
            else
                mono *= MPoly::var(vars[k], e[k]);
        }
        out.descended += mono;
    }
    out.matches_catalog =
        out.descended == catalog_equation(SingLabel::CP3);
    if (!out.v_exponents_divisible_by_3 || !out.z3_invariant ||
        !out.matches_catalog)
        throw std::logic_error(
            "construct_cyclic_point: descent invariants violated");
    return out;
}

// ---------------------------------------------------------------------------
// Normal-form families
// ---------------------------------------------------------------------------

enum class Family { One, TwoA, TwoB, Three, ThreeRaw };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::One: return "one";
        case Family::TwoA: return "two-a";
        case Family::TwoB: return "two-b";
        case Family::Three: return "three";
        case Family::ThreeRaw: return "three-raw";
    }
    return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
    static const std::pair<const char*, Family> table[] = {
        {"one", Family::One},         {"two-a", Family::TwoA},
        {"two-b", Family::TwoB},      {"three", Family::Three},
        {"three-raw", Family::ThreeRaw},
    };
    for (const auto& [name, f] : table)
        if (s == name) return f;
    return std::nullopt;
}

struct FamilyInstance {
    Family family = Family::One;
    std::uint64_t seed = 0;
    MPoly f;  // cubic in z over the base w with parameters x, y
    int ground_truth_branches = 0;
    int ground_truth_ramification = 0;
    std::map<std::string, int> exponents;  // alpha/beta/gamma/m/n as used
    std::string description;
};

// Family three with explicit exponents; throws unless 2*alpha < 3*beta and
// 3 does not divide alpha.  G = eta*y + w^gamma * x.
inline MPoly family_three_equation(int alpha, int beta, int gamma,
                                   const AlgNum& eta) {
    if (alpha % 3 == 0)
        throw std::domain_error(
            "family three: alpha must not be divisible by 3");
    if (2 * alpha >= 3 * beta)
        throw std::domain_error("family three: requires 2*alpha < 3*beta");
    if (alpha < 1 || gamma < 0)
        throw std::domain_error("family three: exponents out of range");
    MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");
    MPoly G = y.scaled(eta) + MPoly::var("w", gamma) * x;
    return z.pow(3) - AlgNum(3) * MPoly::var("w", beta) * y * G * z +
           MPoly::var("w", alpha) * y.pow(3) +
           MPoly::var("w", 3 * beta - alpha) * G.pow(3);
}

class FamilyGenerator {
  public:
    explicit FamilyGenerator(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    FamilyInstance generate(Family fam) {
        FamilyInstance inst;
        inst.family = fam;
        inst.seed = seed_;
        MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");
        switch (fam) {
            case Family::One: {
                int alpha = pick({1, 2, 3});
                int beta = pick({1, 2});
                AlgNum xi = coeff();
                MPoly r1 = MPoly::var("w", alpha) * x;
                MPoly r2 = MPoly::var("w", alpha) *
                           (x.scaled(xi) + MPoly::var("w", beta) * y);
                inst.f = z * (z + r1) * (z + r2);
                inst.ground_truth_branches = 3;
                inst.ground_truth_ramification = 1;
                inst.exponents = {{"alpha", alpha}, {"beta", beta}};
                inst.description = "z(z + w^a x)(z + w^a (xi x + w^b y))";
                break;
            }
            case Family::TwoA: {
                int alpha = pick({1, 2});
                int beta = pick({1, 2});
                AlgNum xi = coeff();
                MPoly g = x.scaled(xi) + MPoly::var("w", beta) * y;
                inst.f = (z + MPoly::var("w", alpha) * x) *
                         (z.pow(2) +
                          MPoly::var("w", 2 * alpha + 1) * g.pow(2));
                inst.ground_truth_branches = 2;
                inst.ground_truth_ramification = 2;
                inst.exponents = {{"alpha", alpha}, {"beta", beta}};
                inst.description =
                    "(z + w^a x)(z^2 + w^(2a+1) (xi x + w^b y)^2)";
                break;
            }
            case Family::TwoB: {
                int alpha = pick({1, 2});
                int beta = pick({1, 2});
                AlgNum eta = coeff();
                inst.f = (z + MPoly::var("w", alpha) *
                                  (y.scaled(eta) + MPoly::var("w", beta) * x)) *
                         (z.pow(2) + MPoly::var("w", 2 * alpha + 1) * y.pow(2));
                inst.ground_truth_branches = 2;
                inst.ground_truth_ramification = 2;
                inst.exponents = {{"alpha", alpha}, {"beta", beta}};
                inst.description =
                    "(z + w^a (eta y + w^b x))(z^2 + w^(2a+1) y^2)";
                break;
            }
            case Family::Three: {
                int beta = pick({1, 2, 3});
                std::vector<int> alphas;
                for (int a = 1; 2 * a < 3 * beta; ++a)
                    if (a % 3 != 0) alphas.push_back(a);
                int alpha = alphas[size_t(rng_() % alphas.size())];
                int gamma = pick({0, 1, 2});
                AlgNum eta = coeff();
                inst.f = family_three_equation(alpha, beta, gamma, eta);
                inst.ground_truth_branches = 1;
                inst.ground_truth_ramification = 3;
                inst.exponents = {{"alpha", alpha},
                                  {"beta", beta},
                                  {"gamma", gamma}};
                inst.description =
                    "z^3 - 3 w^b y G z + w^a y^3 + w^(3b-a) G^3";
                break;
            }
            case Family::ThreeRaw: {
                int m = pick({0, 1});
                int n = pick({0, 1});
                MPoly z1 = order_one_series();
                MPoly z2 = positive_order_series();
                inst.f = z.pow(3) + MPoly::var("w", 3 * n + 1) * z2.pow(3) +
                         MPoly::var("w", 3 * m + 2) * z1.pow(3) -
                         AlgNum(3) * MPoly::var("w", m + n + 1) * z1 * z2 * z;
                inst.ground_truth_branches = 1;
                inst.ground_truth_ramification = 3;
                inst.exponents = {{"m", m},
                                  {"n", n},
                                  {"alpha", std::min(3 * m + 2, 3 * n + 1)}};
                inst.description =
                    "z^3 + w^(3n+1) z2^3 + w^(3m+2) z1^3 - 3 w^(m+n+1) z1 z2 z";
                break;
            }
        }
        return inst;
    }

  private:
    int pick(std::initializer_list<int> choices) {
        std::vector<int> v(choices);
        return v[size_t(rng_() % v.size())];
    }
    // Whitelisted series coefficient: one of 0, +-1, +-2.
    AlgNum coeff() {
        static const int palette[] = {0, 1, -1, 2, -2};
        return AlgNum(palette[rng_() % 5]);
    }
    AlgNum nonzero_coeff() {
        static const int palette[] = {1, -1, 2, -2};
        return AlgNum(palette[rng_() % 4]);
    }
    // Series in (x, y) with a nonzero linear part plus a quadratic tail.
    MPoly order_one_series() {
        MPoly x = MPoly::var("x"), y = MPoly::var("y");
        AlgNum cx = coeff(), cy = coeff();
        if (cx.is_zero() && cy.is_zero()) cx = nonzero_coeff();
        MPoly s = x.scaled(cx) + y.scaled(cy);
        s += x.pow(2).scaled(coeff()) + (x * y).scaled(coeff()) +
             y.pow(2).scaled(coeff());
        return s;
    }
    // Nonzero series in (x, y) without constant term (order >= 1).
    MPoly positive_order_series() {
        for (;;) {
            MPoly x = MPoly::var("x"), y = MPoly::var("y");
            MPoly s = x.scaled(coeff()) + y.scaled(coeff()) +
                      x.pow(2).scaled(coeff()) + (x * y).scaled(coeff()) +
                      y.pow(2).scaled(coeff());
            if (!s.is_zero()) return s;
        }
    }

    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Random linear coordinate changes preserving (w = 0)
// ---------------------------------------------------------------------------
//
// The changes are triangular with respect to the flag
// (w) < (w, x) < (w, x, y) < (w, x, y, z): each variable maps to a unit
// multiple of itself plus a combination of strictly smaller variables, and
// the roles of x and y may be exchanged.  The unit for w is restricted to
// +-1 and the remaining units to {+-1, +-2}, so that every square or cube
// root the detectors take stays inside the ground field.

struct LinearChange {
    std::map<std::string, MPoly> forward;
    std::string description;
};

inline LinearChange random_flag_change(std::mt19937_64& rng,
                                       const std::vector<std::string>& vars) {
    auto unit = [&](bool w) {
        static const int wide[] = {1, -1, 2, -2};
        return AlgNum(wide[rng() % (w ? 2 : 4)]);
    };
    auto small = [&]() {
        static const int palette[] = {0, 1, -1, 2, -2};
        return AlgNum(palette[rng() % 5]);
    };
    // Order the present variables along the flag, optionally exchanging the
    // roles of x and y.
    std::vector<std::string> order;
    for (const char* v : {"w", "x", "y", "z"})
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
            order.push_back(v);
    bool swap_xy = false;
    auto xi = std::find(order.begin(), order.end(), "x");
    auto yi = std::find(order.begin(), order.end(), "y");
    if (xi != order.end() && yi != order.end() && rng() % 2 == 1) {
        std::iter_swap(xi, yi);
        swap_xy = true;
    }
    LinearChange out;
    out.description = swap_xy ? "x<->y; " : "";
    for (size_t j = 0; j < order.size(); ++j) {
        const std::string& v = order[j];
        MPoly img = MPoly::var(v).scaled(unit(v == "w"));
        if (v != "w")
            for (size_t i = 0; i < j; ++i)
                img += MPoly::var(order[i]).scaled(small());
        out.description += v + " -> " + img.to_string() + "; ";
        out.forward[v] = img;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Detection
// ---------------------------------------------------------------------------

struct Detection {
    SingLabel label = SingLabel::Unrecognized;
    int ord = 0;
    std::string route;               // which certificate case fired
    std::vector<std::string> notes;  // human-readable evidence trail
    FormFactorization cone;          // tangent cone factorization attempt
    MPoly discriminant;              // quadratic route: a1^2 - 4 a2 a0
    SplitProfile profile;            // cubic route: the ramified trichotomy

    std::string summary() const {
        std::string s = to_string(label);
        s += " [" + route + "]";
        for (const auto& n : notes) s += "; " + n;
        return s;
    }
};

namespace detail {

// Substitution sending the linear form ell to the coordinate axis target
// while fixing every other variable; requires a nonzero target coefficient.
inline std::map<std::string, MPoly> axis_align(const MPoly& ell,
                                               const std::string& target,
                                               const std::vector<std::string>&
                                                   vars) {
    Vec c = form_coefficients(ell, vars);
    size_t ti = vars.size();
    for (size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == target) ti = k;
    if (ti == vars.size() || c[ti].is_zero())
        throw std::logic_error("axis_align: target coefficient vanishes");
    MPoly img = MPoly::var(target);
    for (size_t k = 0; k < vars.size(); ++k)
        if (k != ti && !c[k].is_zero())
            img -= MPoly::var(vars[k]).scaled(c[k]);
    return {{target, img.scaled(c[ti].inverse())}};
}

// Preferred alignment target: the last ambient variable carried by ell.
inline std::string align_target(const MPoly& ell,
                                const std::vector<std::string>& vars) {
    Vec c = form_coefficients(ell, vars);
    for (size_t k = vars.size(); k-- > 0;)
        if (!c[k].is_zero()) return vars[k];
    throw std::logic_error("align_target: zero form");
}

inline bool independent_one_jets(const MPoly& a, const MPoly& b,
                                 const std::vector<std::string>& vars) {
    Mat rows{form_coefficients(a, vars), form_coefficients(b, vars)};
    return matrix_rank(rows) == 2;
}

}  // namespace detail

inline Detection detect(const MPoly& f, int prec = kDefaultPrecision);

namespace detail {

// Quadratic certificate battery: f has tangent cone ell^2.  After aligning
// ell with a coordinate axis the equation must be an honest quadratic in
// that variable; its polynomial discriminant D = a1^2 - 4 a2 a0 determines
// the class through the vanishing pattern of the squarefree decomposition:
// D = unit * (nonvanishing factors) * A^2 B with A, B vanishing at the
// origin, and (ord A, ord B) together with the contact of A and B decide
// pp / dpp / exc.
inline Detection detect_quadratic(const MPoly& f, const MPoly& ell,
                                  Detection d) {
    const auto vars = f.vars();
    std::string target = align_target(ell, vars);
    MPoly fs = f.substitute(axis_align(ell, target, vars));
    auto uni = fs.as_univariate(target);
    int top = uni.empty() ? 0 : uni.rbegin()->first;
    if (top != 2) {
        d.label = SingLabel::UnsupportedShape;
        d.route = "quadratic";
        d.notes.push_back("aligned equation has degree " +
                          std::to_string(top) + " in " + target +
                          "; a non-polynomial preparation would be needed");
        return d;
    }
    MPoly a2 = uni[2];
    MPoly a1 = uni.count(1) ? uni[1] : MPoly();
    MPoly a0 = uni.count(0) ? uni[0] : MPoly();
    if (a2.constant_term().is_zero())
        throw std::logic_error("detect: aligned quadratic is not unital");
    d.route = "quadratic";
    d.discriminant = a1 * a1 - AlgNum(4) * a2 * a0;
    if (d.discriminant.is_zero()) {
        d.notes.push_back(
            "discriminant vanishes identically: a doubled smooth sheet");
        return d;
    }
    auto dec = squarefree_decompose(d.discriminant);
    std::vector<SquarefreeFactor> vanishing;
    for (const auto& fac : dec.factors)
        if (fac.factor.constant_term().is_zero()) vanishing.push_back(fac);
    std::string pattern;
    for (const auto& fac : vanishing)
        pattern += (pattern.empty() ? "" : " * ") + fac.factor.to_string() +
                   "^" + std::to_string(fac.multiplicity);
    d.notes.push_back("discriminant vanishing part: " +
                      (pattern.empty() ? std::string("none") : pattern));
    if (vanishing.size() != 2) return d;
    std::sort(vanishing.begin(), vanishing.end(),
              [](const SquarefreeFactor& a, const SquarefreeFactor& b) {
                  return a.multiplicity > b.multiplicity;
              });
    if (vanishing[0].multiplicity != 2 || vanishing[1].multiplicity != 1)
        return d;
    const MPoly& A = vanishing[0].factor;
    const MPoly& B = vanishing[1].factor;
    int ordA = A.ord(), ordB = B.ord();
    if (ordA == 1 && ordB == 1) {
        MPoly jA = A.homogeneous_component(1), jB = B.homogeneous_component(1);
        if (independent_one_jets(jA, jB, vars)) {
            d.label = SingLabel::PP;
            d.notes.push_back("doubled and simple sheets are transverse");
            return d;
        }
        Vec ca = form_coefficients(jA, vars), cb = form_coefficients(jB, vars);
        AlgNum lambda;
        for (size_t k = 0; k < cb.size(); ++k)
            if (!cb[k].is_zero()) {
                lambda = ca[k] / cb[k];
                break;
            }
        if (jA != jB.scaled(lambda))
            throw std::logic_error("detect: dependent jets do not match");
        int contact = (A - B.scaled(lambda)).ord();
        d.notes.push_back("tangent sheets with contact order " +
                          std::to_string(contact));
        if (contact == 2) d.label = SingLabel::DPP;
        return d;
    }
    if (ordA == 2 && ordB == 1) {
        // The doubled factor must be irreducible at the cone level: its
        // quadratic leading form must not factor into linear forms.
        FormFactorization coneA = factor_linear_forms(A.leading_form());
        if (coneA.ok) {
            d.notes.push_back(
                "doubled factor of order 2 has a reducible tangent cone");
            return d;
        }
        d.label = SingLabel::Exc;
        d.notes.push_back(
            "doubled factor of order 2 with irreducible tangent cone over a "
            "simple smooth factor");
        return d;
    }
    d.notes.push_back("vanishing orders (" + std::to_string(ordA) + ", " +
                      std::to_string(ordB) + ") match no catalog class");
    return d;
}

// Normal-crossings battery: the tangent cone splits into d independent
// linear forms of multiplicity one; a lifting to precision certifies d
// pairwise transverse smooth sheets.
inline Detection detect_crossings(const MPoly& f, Detection d, int prec) {
    d.route = "crossings";
    HenselSplit hs =
        hensel_split_independent(f, d.cone.factors, prec);
    if (!hs.ok) {
        d.notes.push_back("sheet lifting failed: " + hs.note);
        return d;
    }
    switch (d.ord) {
        case 2: d.label = SingLabel::NC2; break;
        case 3: d.label = SingLabel::NC3; break;
        case 4: d.label = SingLabel::NC4; break;
        default: return d;
    }
    d.notes.push_back(std::to_string(d.ord) +
                      " transverse smooth sheets certified to precision " +
                      std::to_string(prec));
    return d;
}

// Product battery: cone = ell1 * ell2^2 with independent forms.  Split off
// the smooth sheet along ell1 exactly and classify the cofactor; the label
// is prod exactly when the cofactor is a pinch point.
inline Detection detect_product(const MPoly& f, Detection d, int prec) {
    d.route = "product";
    size_t simple = d.cone.multiplicities[0] == 1 ? 0 : 1;
    CoprimeSplit cs =
        split_off_smooth_factor(f, d.cone.factors[simple], prec);
    if (!cs.ok) {
        d.notes.push_back("smooth factor split failed: " + cs.note);
        return d;
    }
    MPoly sm = cs.smooth_factor.poly(), co = cs.cofactor.poly();
    if (!(sm * co == f)) {
        d.notes.push_back(
            "smooth factor split is not exact at this precision");
        return d;
    }
    Detection sub = detect(co, prec);
    d.notes.push_back("cofactor " + co.to_string() + " classified as " +
                      std::string(to_string(sub.label)));
    for (const auto& n : sub.notes) d.notes.push_back("  cofactor: " + n);
    if (sub.label == SingLabel::PP) d.label = SingLabel::Prod;
    return d;
}

// Cyclic-point battery: cone = ell^3.  After aligning ell the equation is a
// cubic over the base variable; it must be unibranch (first split at the
// threefold cover w = v^3) and the two radicands must have v-orders {1, 2}
// with independent one-jet cofactors -- the exponent pattern of the
// cyclic-point normal form.
inline Detection detect_cyclic(const MPoly& f, const MPoly& ell, Detection d,
                               int prec) {
    d.route = "cyclic";
    const auto vars = f.vars();
    std::string target = align_target(ell, vars);
    MPoly fs = f.substitute(axis_align(ell, target, vars));
    std::string base;
    for (const auto& v : fs.vars())
        if (v != target) {
            base = v;
            break;
        }
    if (base.empty()) {
        d.notes.push_back("no base variable besides the cubic direction");
        return d;
    }
    auto uni = fs.as_univariate(target);
    if (uni.empty() || uni.rbegin()->first != 3) {
        d.label = SingLabel::UnsupportedShape;
        d.notes.push_back(
            "aligned equation has degree " +
            std::to_string(uni.empty() ? 0 : uni.rbegin()->first) + " in " +
            target + "; a non-polynomial preparation would be needed");
        return d;
    }
    d.profile = split_profile(fs, base, target, prec);
    if (d.profile.branch_count != 1) {
        d.notes.push_back(
            d.profile.branch_count < 0
                ? std::string("ramified splitting is indeterminate")
                : "splits into " + std::to_string(d.profile.branch_count) +
                      " branches at k = " +
                      std::to_string(d.profile.ramification));
        return d;
    }
    std::string cover;
    for (const auto& att : d.profile.attempts)
        if (att.k == d.profile.ramification) cover = att.cover_var;
    if (cover.empty()) {
        d.notes.push_back("no recorded cover for the successful split");
        return d;
    }
    MPoly e1 = d.profile.split.eta1.poly(), e2 = d.profile.split.eta2.poly();
    if (e1.is_zero() || e2.is_zero()) {
        d.notes.push_back("a radicand vanishes: degenerate unibranch cubic");
        return d;
    }
    auto [g1, u1] = e1.factor_out_variable(cover);
    auto [g2, u2] = e2.factor_out_variable(cover);
    if (std::min(g1, g2) != 1 || std::max(g1, g2) != 2) {
        d.notes.push_back("radicand cover-orders (" + std::to_string(g1) +
                          ", " + std::to_string(g2) +
                          ") differ from the cyclic-point pattern (1, 2)");
        return d;
    }
    MPoly c1 = u1.substitute({{cover, MPoly()}});
    MPoly c2 = u2.substitute({{cover, MPoly()}});
    if (!c1.constant_term().is_zero() || !c2.constant_term().is_zero()) {
        d.notes.push_back("radicand cofactors do not vanish at the origin");
        return d;
    }
    MPoly j1 = c1.homogeneous_component(1), j2 = c2.homogeneous_component(1);
    std::vector<std::string> jet_vars;
    for (const auto& v : j1.vars()) jet_vars.push_back(v);
    for (const auto& v : j2.vars())
        if (std::find(jet_vars.begin(), jet_vars.end(), v) == jet_vars.end())
            jet_vars.push_back(v);
    if (j1.is_zero() || j2.is_zero() ||
        !independent_one_jets(j1, j2, jet_vars)) {
        d.notes.push_back("radicand cofactor one-jets are not independent");
        return d;
    }
    d.label = SingLabel::CP3;
    d.notes.push_back(
        "unibranch at the threefold cover with radicand orders {1, 2} and "
        "independent cofactor jets");
    return d;
}

}  // namespace detail

inline Detection detect(const MPoly& f, int prec) {
    Detection d;
    d.ord = f.ord();
    if (f.is_zero()) {
        d.route = "order";
        d.ord = -1;
        d.notes.push_back("the zero polynomial defines no hypersurface germ");
        return d;
    }
    if (d.ord == 0) {
        d.label = SingLabel::Smooth;
        d.route = "order";
        d.notes.push_back("the equation does not vanish at the base point");
        return d;
    }
    if (d.ord == 1) {
        d.label = SingLabel::Smooth;
        d.route = "order";
        d.notes.push_back("order 1: a smooth hypersurface germ");
        return d;
    }
    d.cone = factor_linear_forms(f.leading_form());
    if (!d.cone.ok) {
        d.route = "cone";
        d.notes.push_back("tangent cone does not split into linear forms: " +
                          (d.cone.note.empty()
                               ? std::string(to_string(d.cone.failure))
                               : d.cone.note));
        return d;
    }
    size_t k = d.cone.factors.size();
    bool all_simple = true;
    for (int m : d.cone.multiplicities)
        if (m != 1) all_simple = false;

    if (int(k) == d.ord && all_simple && d.cone.rank() == d.ord &&
        d.ord >= 2 && d.ord <= 4)
        return detail::detect_crossings(f, std::move(d), prec);

    if (d.ord == 2 && k == 1 && d.cone.multiplicities[0] == 2) {
        MPoly ell = d.cone.factors[0];
        return detail::detect_quadratic(f, ell, std::move(d));
    }

    if (d.ord == 3 && k == 2 && d.cone.rank() == 2 &&
        ((d.cone.multiplicities[0] == 1 && d.cone.multiplicities[1] == 2) ||
         (d.cone.multiplicities[0] == 2 && d.cone.multiplicities[1] == 1)))
        return detail::detect_product(f, std::move(d), prec);

    if (d.ord == 3 && k == 1 && d.cone.multiplicities[0] == 3) {
        MPoly ell = d.cone.factors[0];
        return detail::detect_cyclic(f, ell, std::move(d), prec);
    }

    d.route = "cone";
    d.notes.push_back("tangent cone multiplicity pattern matches no catalog "
                      "class at order " +
                      std::to_string(d.ord));
    return d;
}

inline Detection detect(const Chart& c, int prec = kDefaultPrecision) {
    return detect(c.germ(), prec);
}

// ---------------------------------------------------------------------------
// Neighborhood scans
// ---------------------------------------------------------------------------

struct ScanEntry {
    AlgNum point;
    Detection result;
};

// Re-detects the chart equation at nearby points t != 0 of a coordinate
// axis, by the exact translation axis -> axis + t.
inline std::vector<ScanEntry> neighborhood_scan(
    const Chart& c, const std::string& axis, const std::vector<AlgNum>& samples,
    int prec = kDefaultPrecision) {
    std::vector<ScanEntry> out;
    for (const AlgNum& t : samples) {
        MPoly translated = c.germ().substitute(
            {{axis, MPoly::var(axis) + MPoly(t)}});
        out.push_back({t, detect(translated, prec)});
    }
    return out;
}

}  // namespace minsing
