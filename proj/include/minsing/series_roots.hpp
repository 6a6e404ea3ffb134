#pragma once

// Square and cube roots of power series given as jets.
//
// The root of F is assembled in three stages: (1) split off the monomial
// content of F, whose exponents must be divisible by the root index;
// (2) extract a root of the leading homogeneous form term by term, walking
// grlex-leading terms; (3) lift degree by degree, where each new homogeneous
// layer of the root is forced by exact polynomial division against the
// leading root form.  Every failure mode yields a certificate: an obstruction
// degree where lifting is impossible, or a coefficient with no root in the
// ground field.

#include <optional>
#include <string>

#include "jet.hpp"
#include "mpoly.hpp"

namespace minsing {

enum class RootStatus {
    Certified,            // exact polynomial root, verified by multiplication
    ToPrecision,          // series root computed up to the stated precision
    Obstructed,           // no root exists; see obstruction_degree / note
    NeedsFieldExtension,  // a coefficient has no root in the ground field
};

inline const char* to_string(RootStatus s) {
    switch (s) {
        case RootStatus::Certified: return "certified";
        case RootStatus::ToPrecision: return "to-precision";
        case RootStatus::Obstructed: return "obstructed";
        case RootStatus::NeedsFieldExtension: return "needs-field-extension";
    }
    return "?";
}

struct RootResult {
    RootStatus status = RootStatus::Obstructed;
    Jet root;                    // meaningful for Certified / ToPrecision
    int obstruction_degree = -1; // degree in the input where lifting failed
    std::string note;

    bool ok() const {
        return status == RootStatus::Certified ||
               status == RootStatus::ToPrecision;
    }
};

namespace detail {

inline MPoly monomial_of(const std::vector<std::string>& vars, const ExpVec& e,
                         const AlgNum& c) {
    std::map<std::string, int> m;
    for (size_t k = 0; k < vars.size(); ++k)
        if (e[k] > 0) m[vars[k]] = e[k];
    return MPoly::from_term(m, c);
}

// Root of a nonzero homogeneous form, driven by grlex-leading terms.  index
// is 2 or 3.  On success fills `out` (homogeneous of degree deg(L)/index).
inline RootResult form_root(const MPoly& L, int index, MPoly& out) {
    RootResult fail;
    int d = L.total_degree();
    if (d % index != 0) {
        fail.status = RootStatus::Obstructed;
        fail.obstruction_degree = d;
        fail.note = "form degree not divisible by " + std::to_string(index);
        return fail;
    }
    MPoly H;
    MPoly lead;  // first (grlex-largest) term of the root
    MPoly R = L;
    int guard = 0;
    while (!R.is_zero()) {
        if (++guard > 20000) {
            fail.status = RootStatus::Obstructed;
            fail.obstruction_degree = d;
            fail.note = "term extraction did not terminate";
            return fail;
        }
        auto [e, c] = R.leading_term();
        MPoly t;
        if (H.is_zero()) {
            ExpVec h(e.size());
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] % index != 0) {
                    fail.status = RootStatus::Obstructed;
                    fail.obstruction_degree = d;
                    fail.note = "leading monomial exponent of " +
                                R.vars()[k] + " not divisible by " +
                                std::to_string(index);
                    return fail;
                }
                h[k] = e[k] / index;
            }
            std::optional<AlgNum> s = index == 2 ? algnum_sqrt(c)
                                                 : algnum_cbrt(c);
            if (!s) {
                fail.status = RootStatus::NeedsFieldExtension;
                fail.obstruction_degree = d;
                fail.note = "coefficient " + c.to_string() + " has no " +
                            (index == 2 ? "square" : "cube") +
                            " root in the coefficient field";
                return fail;
            }
            t = monomial_of(R.vars(), h, *s);
            lead = t;
        } else {
            // Next term is forced: lt(R) / (index * lead^(index-1)).
            MPoly den = lead.pow(index - 1).scaled(AlgNum(index));
            auto [de, dc] = den.leading_term();  // den is a single term
            std::map<std::string, int> quot;
            for (size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0) quot[R.vars()[k]] = e[k];
            bool divisible = true;
            for (size_t k = 0; k < de.size(); ++k) {
                if (de[k] == 0) continue;
                quot[den.vars()[k]] -= de[k];
            }
            int qdeg = 0;
            for (auto it = quot.begin(); it != quot.end();) {
                if (it->second < 0) divisible = false;
                qdeg += it->second;
                if (it->second == 0)
                    it = quot.erase(it);
                else
                    ++it;
            }
            if (!divisible || qdeg != d / index) {
                fail.status = RootStatus::Obstructed;
                fail.obstruction_degree = d;
                fail.note = "residual term not divisible by the leading root "
                            "term";
                return fail;
            }
            t = MPoly::from_term(quot, c / dc);
        }
        H += t;
        R = L - H.pow(index);
    }
    out = H;
    RootResult okr;
    okr.status = RootStatus::Certified;
    return okr;
}

}  // namespace detail

inline RootResult series_root(const Jet& f, int index) {
    RootResult res;
    if (f.is_zero()) {
        res.status = f.exact() ? RootStatus::Certified : RootStatus::ToPrecision;
        res.root = f;
        return res;
    }
    const MPoly& F = f.poly();
    auto [mono, G] = F.content_monomial();
    int mono_deg = 0;
    for (const auto& [v, g] : mono) {
        mono_deg += g;
        if (g % index != 0) {
            res.status = RootStatus::Obstructed;
            res.obstruction_degree = F.ord();
            res.note = "monomial content has exponent " + std::to_string(g) +
                       " of " + v + ", not divisible by " +
                       std::to_string(index);
            return res;
        }
    }
    std::map<std::string, int> half;
    for (const auto& [v, g] : mono) half[v] = g / index;
    MPoly root_mono = MPoly::from_term(half, AlgNum(1));

    int d = G.ord();
    if (d % index != 0) {
        res.status = RootStatus::Obstructed;
        res.obstruction_degree = d + mono_deg;
        res.note = "order " + std::to_string(d + mono_deg) +
                   " minus monomial content is not divisible by " +
                   std::to_string(index);
        return res;
    }
    MPoly h_lead;
    RootResult fr = detail::form_root(G.leading_form(), index, h_lead);
    if (!fr.ok()) {
        fr.obstruction_degree = d + mono_deg;
        return fr;
    }

    int target = f.precision() - mono_deg;
    if (f.exact()) target = std::max(target, G.total_degree());
    MPoly H = h_lead;
    MPoly den = h_lead.pow(index - 1).scaled(AlgNum(index));
    for (int e = d + 1; e <= target; ++e) {
        MPoly layer =
            G.homogeneous_component(e) - H.pow(index).homogeneous_component(e);
        if (layer.is_zero()) continue;
        auto q = layer.exact_divide(den);
        if (!q) {
            res.status = RootStatus::Obstructed;
            res.obstruction_degree = e + mono_deg;
            res.note = "layer of degree " + std::to_string(e + mono_deg) +
                       " is not divisible by the leading root form";
            return res;
        }
        H += *q;
    }

    MPoly root_poly = root_mono * H;
    if (f.exact() && H.pow(index) == G) {
        res.status = RootStatus::Certified;
        res.root = Jet(root_poly, f.precision());
        return res;
    }
    res.status = RootStatus::ToPrecision;
    int root_prec = f.precision() - (d + mono_deg) + (d + mono_deg) / index;
    res.root = Jet::approximation(root_poly, root_prec);
    return res;
}

inline RootResult series_sqrt(const Jet& f) { return series_root(f, 2); }
inline RootResult series_cbrt(const Jet& f) { return series_root(f, 3); }

}  // namespace minsing
