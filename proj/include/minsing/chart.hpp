#pragma once

// A chart carries the germ under analysis, the ambient variable list, and a
// ledger of exceptional/boundary divisors with multiplicities.  Every
// operation rewrites all three through a substitution and preserves the
// total-transform identity
//     (f * prod E_i^{m_i}) o sigma  ==  unit * sel^gamma * f' * prod E'_j^{m_j},
// which is re-checked exactly after each step.
//
// Operations: blow up a coordinate subspace (one chart of it), "clean"
// (a blow-up that must not raise the order of the germ), invertible
// coordinate changes (including renames), killing the subleading coefficient
// of a power (completing the square/cube), localizing at a point of the
// exceptional divisor, and ramified base covers.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "mpoly.hpp"

namespace minsing {

struct DivisorEntry {
    MPoly equation;    // trailing-monic (lowest grlex term has coefficient 1)
    int multiplicity;  // >= 1
};

struct OpOutcome {
    bool ok = true;
    std::string error;
    int extracted = 0;   // power of the chart variable removed from the germ
    int ord_before = -1;
    int ord_after = -1;
};

class Chart {
public:
    Chart() = default;
    Chart(const MPoly& f, std::vector<std::string> ambient)
        : f_(f), vars_(std::move(ambient)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        for (const auto& v : f.vars()) ensure_var(v);
    }

    const MPoly& germ() const { return f_; }
    const std::vector<std::string>& ambient() const { return vars_; }
    const std::vector<DivisorEntry>& divisors() const { return divisors_; }

    MPoly total_transform() const {
        MPoly t = f_;
        for (const auto& d : divisors_) t *= d.equation.pow(d.multiplicity);
        return t;
    }

    void add_divisor(const MPoly& eq, int mult) {
        push_entry(eq, mult);
        merge_entries();
    }

    // One chart of the blow-up of the subspace {v = 0 : v in center}.
    OpOutcome blowup(const std::vector<std::string>& center,
                     const std::string& sel) {
        OpOutcome res;
        res.ord_before = f_.ord();
        if (center.size() < 2) {
            res.ok = false;
            res.error = "blow-up center needs at least two variables";
            return res;
        }
        std::set<std::string> cs(center.begin(), center.end());
        if (cs.size() != center.size() || !cs.count(sel)) {
            res.ok = false;
            res.error = "chart variable must be one of the center variables";
            return res;
        }
        for (const auto& v : center)
            if (!has_var(v)) {
                res.ok = false;
                res.error = "unknown center variable " + v;
                return res;
            }
        std::map<std::string, MPoly> sigma;
        for (const auto& v : center)
            if (v != sel) sigma[v] = MPoly::var(sel) * MPoly::var(v);
        apply(sigma, sel, res);
        res.ord_after = f_.ord();
        return res;
    }

    // A blow-up that is required not to raise the order of the germ.  On
    // violation nothing changes and the outcome reports the failure.
    OpOutcome clean(const std::vector<std::string>& center,
                    const std::string& sel) {
        Chart saved = *this;
        OpOutcome res = blowup(center, sel);
        if (!res.ok) return res;
        if (res.ord_after > res.ord_before) {
            *this = saved;
            res.ok = false;
            res.error = "cleaning ineffective: order rose from " +
                        std::to_string(res.ord_before) + " to " +
                        std::to_string(res.ord_after);
        }
        return res;
    }

    // Invertible origin-preserving substitution old-variable -> polynomial.
    OpOutcome change_coords(const std::map<std::string, MPoly>& bind) {
        OpOutcome res;
        res.ord_before = f_.ord();
        for (const auto& [v, img] : bind) {
            if (!has_var(v)) {
                res.ok = false;
                res.error = "unknown variable " + v;
                return res;
            }
            if (img.is_zero() || img.ord() < 1) {
                res.ok = false;
                res.error = "image of " + v + " must vanish at the origin";
                return res;
            }
        }
        // New variable universe.
        std::vector<std::string> nv;
        for (const auto& v : vars_) {
            auto it = bind.find(v);
            if (it == bind.end()) {
                if (std::find(nv.begin(), nv.end(), v) == nv.end())
                    nv.push_back(v);
            } else {
                for (const auto& u : it->second.vars())
                    if (std::find(nv.begin(), nv.end(), u) == nv.end())
                        nv.push_back(u);
            }
        }
        std::sort(nv.begin(), nv.end());
        if (nv.size() != vars_.size()) {
            res.ok = false;
            res.error = "substitution changes the ambient dimension";
            return res;
        }
        // Linear parts must form an invertible matrix.
        Mat J;
        for (const auto& v : vars_) {
            auto it = bind.find(v);
            MPoly img = it == bind.end() ? MPoly::var(v) : it->second;
            MPoly lin = img.homogeneous_component(1);
            Vec row(nv.size(), AlgNum(0));
            for (const auto& [e, c] : lin.terms())
                for (size_t k = 0; k < e.size(); ++k)
                    if (e[k] == 1) {
                        auto p = std::lower_bound(nv.begin(), nv.end(),
                                                  lin.vars()[k]);
                        row[p - nv.begin()] = c;
                    }
            J.push_back(row);
        }
        if (determinant(J).is_zero()) {
            res.ok = false;
            res.error = "linear part of the substitution is singular";
            return res;
        }
        apply(bind, "", res, nv);
        res.ord_after = f_.ord();
        return res;
    }

    // Kills the second-highest coefficient of the germ as a polynomial in
    // `var`: z -> z - a_{d-1} / (d a_d), requiring a constant a_d.
    OpOutcome complete_power(const std::string& var, int d) {
        OpOutcome res;
        res.ord_before = f_.ord();
        auto uni = f_.as_univariate(var);
        auto ad = uni.find(d);
        if (ad == uni.end() || !ad->second.is_constant() ||
            ad->second.is_zero()) {
            res.ok = false;
            res.error = "coefficient of " + var + "^" + std::to_string(d) +
                        " is not a nonzero constant";
            return res;
        }
        auto ad1 = uni.find(d - 1);
        if (ad1 == uni.end() || ad1->second.is_zero()) {
            res.ord_after = res.ord_before;
            return res;  // nothing to do
        }
        MPoly shift = ad1->second.scaled(
            (AlgNum(d) * ad->second.constant_term()).inverse());
        if (shift.ord() < 1) {
            res.ok = false;
            res.error = "completing the power would move the origin";
            return res;
        }
        return change_coords({{var, MPoly::var(var) - shift}});
    }

    // Move to the point var = 1 on the exceptional divisor (irreversible).
    OpOutcome localize(const std::string& var) {
        OpOutcome res;
        res.ord_before = f_.ord();
        if (!has_var(var)) {
            res.ok = false;
            res.error = "unknown variable " + var;
            return res;
        }
        std::map<std::string, MPoly> sigma{{var, MPoly(AlgNum(1))}};
        std::vector<std::string> nv;
        for (const auto& v : vars_)
            if (v != var) nv.push_back(v);
        apply(sigma, "", res, nv);
        res.ord_after = f_.ord();
        return res;
    }

    // Ramified base cover var -> var^k.
    OpOutcome ramify(const std::string& var, int k) {
        OpOutcome res;
        res.ord_before = f_.ord();
        if (k < 2) {
            res.ok = false;
            res.error = "cover exponent must be at least 2";
            return res;
        }
        if (!has_var(var)) {
            res.ok = false;
            res.error = "unknown variable " + var;
            return res;
        }
        std::map<std::string, MPoly> sigma{{var, MPoly::var(var, k)}};
        apply(sigma, "", res);
        res.ord_after = f_.ord();
        return res;
    }

private:
    MPoly f_;
    std::vector<std::string> vars_;
    std::vector<DivisorEntry> divisors_;

    bool has_var(const std::string& v) const {
        return std::binary_search(vars_.begin(), vars_.end(), v);
    }
    void ensure_var(const std::string& v) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) vars_.insert(it, v);
    }

    void push_entry(const MPoly& eq, int mult) {
        if (mult == 0 || eq.is_constant()) return;
        divisors_.push_back({eq.trailing_monic(), mult});
    }
    void merge_entries() {
        std::vector<DivisorEntry> merged;
        for (const auto& d : divisors_) {
            bool found = false;
            for (auto& m : merged)
                if (m.equation == d.equation) {
                    m.multiplicity += d.multiplicity;
                    found = true;
                    break;
                }
            if (!found) merged.push_back(d);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const DivisorEntry& d) {
                                        return d.multiplicity == 0;
                                    }),
                     merged.end());
        divisors_ = std::move(merged);
    }

    // Shared transform: applies sigma to germ and ledger; when sel is
    // nonempty, extracts sel-powers (a blow-up chart) and records the new
    // exceptional multiplicity.  Verifies the total-transform identity.
    void apply(const std::map<std::string, MPoly>& sigma,
               const std::string& sel, OpOutcome& res,
               std::optional<std::vector<std::string>> new_vars =
                   std::nullopt) {
        MPoly total_before = total_transform();
        apply_raw(sigma, sel, new_vars ? *new_vars : vars_, &res);
        // total_before o sigma == unit * total_after: the new exceptional
        // entry absorbs the extracted powers, monic normalization of ledger
        // equations only sheds constants.
        MPoly lhs = total_before.substitute(sigma);
        auto q = lhs.exact_divide(total_transform());
        if (!q || !q->is_constant())
            throw std::logic_error(
                "chart invariant broken: total transform mismatch");
    }

    void apply_raw(const std::map<std::string, MPoly>& sigma,
                   const std::string& sel,
                   const std::vector<std::string>& new_vars,
                   OpOutcome* res = nullptr) {
        MPoly f2 = f_.substitute(sigma);
        int excess = 0;
        if (!sel.empty() && !f2.is_zero()) {
            auto [g, rest] = f2.factor_out_variable(sel);
            excess = g;
            f2 = rest;
            if (res) res->extracted = g;
        }
        int exc_mult = excess;
        std::vector<DivisorEntry> old = std::move(divisors_);
        divisors_.clear();
        for (const auto& d : old) {
            MPoly e2 = d.equation.substitute(sigma);
            if (e2.is_constant()) continue;  // divisor missed the new origin
            auto [mono, core] = e2.content_monomial();
            for (const auto& [v, g] : mono) {
                if (v == sel)
                    exc_mult += g * d.multiplicity;
                else
                    push_entry(MPoly::var(v), g * d.multiplicity);
            }
            if (!core.is_constant()) push_entry(core, d.multiplicity);
        }
        if (!sel.empty()) push_entry(MPoly::var(sel), exc_mult);
        merge_entries();
        f_ = f2;
        vars_ = new_vars;
        std::sort(vars_.begin(), vars_.end());
    }
};

}  // namespace minsing
