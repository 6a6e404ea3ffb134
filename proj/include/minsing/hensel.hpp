#pragma once

// Hensel-style factor lifting for germs whose tangent cone already factors.
//
// (1) hensel_split_independent: the cone is a product of k linearly
//     independent linear forms.  After straightening the forms to coordinate
//     axes, each residual monomial at every degree must be divisible by one
//     of the products of k-1 axes; the quotient feeds the matching factor.
//     An unassignable monomial is a certificate that the germ is not a
//     product of k smooth sheets with these tangents.
//
// (2) split_off_smooth_factor: the cone is ell * Q with ell linear and not
//     dividing Q.  After straightening ell to an axis x, the two-factor lift
//     is forced: the x-free part of each residual layer must be divisible by
//     Q|_{x=0}, and the rest is absorbed into the cofactor.

#include <map>
#include <string>
#include <vector>

#include "jet.hpp"
#include "linear_forms.hpp"

namespace minsing {

struct HenselSplit {
    bool ok = false;
    std::vector<Jet> factors;   // in the original coordinates
    AlgNum unit;
    std::map<std::string, MPoly> to_straight, from_straight;
    int obstruction_degree = -1;
    MPoly obstruction_monomial;  // in straightened coordinates
    std::string note;
};

inline HenselSplit hensel_split_independent(
    const MPoly& f, const std::vector<MPoly>& cone_factors, int prec) {
    HenselSplit out;
    size_t k = cone_factors.size();
    if (k < 2) {
        out.note = "need at least two cone factors";
        return out;
    }
    auto st = straighten_forms(cone_factors, f.vars());
    if (!st) {
        out.note = "cone factors are not linearly independent";
        return out;
    }
    out.to_straight = st->forward;
    out.from_straight = st->backward;
    MPoly g = f.substitute(st->forward);
    // Axis product and the complementary products P_i.
    MPoly axes(AlgNum(1));
    std::vector<MPoly> axis;
    for (size_t i = 0; i < k; ++i) {
        axis.push_back(MPoly::var(st->images[i]));
        axes *= axis.back();
    }
    MPoly lead = g.leading_form();
    auto cq = lead.exact_divide(axes);
    if (!cq || !cq->is_constant() || int(k) != g.ord()) {
        out.note = "internal: straightened cone is not the axis product";
        return out;
    }
    out.unit = cq->constant_term();
    MPoly gn = g.scaled(out.unit.inverse());

    std::vector<MPoly> h(k);  // factor i = axis_i + h_i, ord(h_i) >= 2
    std::vector<MPoly> comp(k, MPoly(AlgNum(1)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (j != i) comp[i] *= axis[j];

    for (int e = int(k) + 1; e <= prec; ++e) {
        MPoly prod(AlgNum(1));
        for (size_t i = 0; i < k; ++i) prod *= axis[i] + h[i];
        MPoly layer = gn.homogeneous_component(e) -
                      prod.homogeneous_component(e);
        // Assign each monomial of the layer to the first complementary
        // product dividing it.
        for (const auto& [me, mc] : layer.terms()) {
            MPoly mono = detail::monomial_of(layer.vars(), me, mc);
            bool assigned = false;
            for (size_t i = 0; i < k && !assigned; ++i) {
                if (auto q = mono.exact_divide(comp[i])) {
                    h[i] += *q;
                    assigned = true;
                }
            }
            if (!assigned) {
                out.obstruction_degree = e;
                out.obstruction_monomial = mono;
                out.note = "monomial " + mono.to_string() +
                           " at degree " + std::to_string(e) +
                           " is divisible by no complementary axis product";
                return out;
            }
        }
    }
    // Verify to the achievable precision and map back.
    int fprec = prec - int(k) + 1;
    Jet check(MPoly(out.unit), prec);
    for (size_t i = 0; i < k; ++i)
        check *= Jet::approximation(axis[i] + h[i], fprec);
    if (!agree(check, Jet::approximation(g, prec))) {
        out.note = "internal: lifted product disagrees with input";
        return out;
    }
    for (size_t i = 0; i < k; ++i) {
        MPoly back = (axis[i] + h[i]).substitute(st->backward);
        out.factors.push_back(Jet::approximation(back, fprec));
    }
    out.ok = true;
    return out;
}

struct CoprimeSplit {
    bool ok = false;
    Jet smooth_factor;  // x + h in the original coordinates (ord 1)
    Jet cofactor;       // the complementary factor, cone Q
    std::map<std::string, MPoly> to_straight, from_straight;
    int obstruction_degree = -1;
    std::string note;
};

inline CoprimeSplit split_off_smooth_factor(const MPoly& f,
                                            const MPoly& linear_cone_factor,
                                            int prec) {
    CoprimeSplit out;
    auto st = straighten_forms({linear_cone_factor}, f.vars());
    if (!st) {
        out.note = "cone factor is not a nonzero linear form";
        return out;
    }
    out.to_straight = st->forward;
    out.from_straight = st->backward;
    std::string xv = st->images[0];
    MPoly x = MPoly::var(xv);
    MPoly g = f.substitute(st->forward);
    int d = g.ord();
    MPoly lead = g.leading_form();
    auto Q0 = lead.exact_divide(x);
    if (!Q0) {
        out.note = "internal: straightened cone not divisible by the axis";
        return out;
    }
    // Coprimality: Q must not vanish on x = 0.
    MPoly Qbar = Q0->substitute({{xv, MPoly()}});
    if (Qbar.is_zero()) {
        out.note = "cone factor divides the cone with multiplicity > 1";
        return out;
    }

    MPoly h;   // smooth factor x + h, h free of x, ord >= 2
    MPoly T2 = *Q0;  // cofactor, cone Q
    for (int e = d + 1; e <= prec; ++e) {
        MPoly layer = g.homogeneous_component(e) -
                      ((x + h) * T2).homogeneous_component(e);
        if (layer.is_zero()) continue;
        MPoly layer0 = layer.substitute({{xv, MPoly()}});
        MPoly d1;
        if (!layer0.is_zero()) {
            auto q = layer0.exact_divide(Qbar);
            if (!q) {
                out.obstruction_degree = e;
                out.note = "degree-" + std::to_string(e) +
                           " layer restricted to the smooth sheet is not "
                           "divisible by the cofactor cone";
                return out;
            }
            d1 = *q;
        }
        MPoly rest = layer - *Q0 * d1;
        if (rest.is_zero()) {
            h += d1;
            continue;
        }
        auto [gamma, d2] = rest.factor_out_variable(xv);
        if (gamma < 1) {
            out.obstruction_degree = e;
            out.note = "internal: residual layer not divisible by the axis";
            return out;
        }
        h += d1;
        T2 += MPoly::var(xv, gamma - 1) * d2;
    }
    int fprec = prec - d + 1;
    Jet sm = Jet::approximation(x + h, fprec);
    Jet co = Jet::approximation(T2, fprec);
    if (!agree(sm * co, Jet::approximation(g, prec))) {
        out.note = "internal: lifted product disagrees with input";
        return out;
    }
    out.smooth_factor = Jet::approximation((x + h).substitute(st->backward),
                                           fprec);
    out.cofactor = Jet::approximation(T2.substitute(st->backward), fprec);
    out.ok = true;
    return out;
}

}  // namespace minsing
