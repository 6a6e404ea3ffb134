#pragma once

// Factoring homogeneous forms of degree <= 4 into linear forms over the
// ground field, and straightening independent linear forms to coordinate
// axes.  Degree 2 goes through congruence diagonalization of the symmetric
// coefficient matrix; degree 3 through monicization in a sheared direction
// plus the cubic splitting machinery; degree 4 through the resolvent cubic,
// whose roots are the squared pair sums of the quartic's roots.

#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"
#include "series_roots.hpp"

namespace minsing {

struct FormFactorization {
    bool ok = false;
    RootStatus failure = RootStatus::Obstructed;  // reason when !ok
    AlgNum unit;
    std::vector<MPoly> factors;       // normalized: grlex-leading coeff 1
    std::vector<int> multiplicities;  // parallel to factors
    std::string note;

    int total_multiplicity() const {
        int t = 0;
        for (int m : multiplicities) t += m;
        return t;
    }
    // Dimension of the span of the distinct factors.
    int rank() const {
        if (factors.empty()) return 0;
        std::vector<std::string> universe;
        for (const auto& f : factors)
            for (const auto& v : f.vars())
                if (std::find(universe.begin(), universe.end(), v) ==
                    universe.end())
                    universe.push_back(v);
        std::sort(universe.begin(), universe.end());
        Mat rows;
        for (const auto& f : factors) {
            Vec row(universe.size(), AlgNum(0));
            for (const auto& [e, c] : f.terms())
                for (size_t k = 0; k < e.size(); ++k)
                    if (e[k] == 1) {
                        auto it = std::lower_bound(universe.begin(),
                                                   universe.end(),
                                                   f.vars()[k]);
                        row[it - universe.begin()] = c;
                    }
            rows.push_back(row);
        }
        return int(matrix_rank(rows));
    }
};

namespace detail {

// Linear-form coefficient vector over an explicit variable list.
inline Vec form_coefficients(const MPoly& form,
                             const std::vector<std::string>& vars) {
    Vec row(vars.size(), AlgNum(0));
    for (const auto& [e, c] : form.terms())
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] == 1)
                for (size_t j = 0; j < vars.size(); ++j)
                    if (vars[j] == form.vars()[k]) row[j] = c;
    return row;
}

inline void push_factor(FormFactorization& out, const MPoly& factor, int mult) {
    MPoly norm = factor;
    AlgNum lead = norm.leading_coefficient();
    norm = norm.scaled(lead.inverse());
    for (int k = 0; k < mult; ++k) out.unit *= lead;
    for (size_t k = 0; k < out.factors.size(); ++k)
        if (out.factors[k] == norm) {
            out.multiplicities[k] += mult;
            return;
        }
    out.factors.push_back(norm);
    out.multiplicities.push_back(mult);
}

// Finds a point with small integer coordinates where the form is nonzero,
// and an invertible substitution sending the first variable's axis there.
// Returns {to_sheared, from_sheared}.
inline std::optional<std::pair<std::map<std::string, MPoly>,
                               std::map<std::string, MPoly>>>
shear_to_regular(const MPoly& form, const std::string& main) {
    const auto& vars = form.vars();
    size_t n = vars.size();
    static const int palette[] = {1, 0, -1, 2, -2, 3, -3};
    std::vector<size_t> idx(n, 0);
    auto value_at = [&](const std::vector<size_t>& sel) {
        std::map<std::string, AlgNum> pt;
        for (size_t k = 0; k < n; ++k) pt[vars[k]] = AlgNum(palette[sel[k]]);
        return form.evaluate(pt);
    };
    for (;;) {
        if (!value_at(idx).is_zero()) break;
        size_t k = 0;
        while (k < n && idx[k] + 1 == std::size(palette)) idx[k++] = 0;
        if (k == n) return std::nullopt;  // form vanishes everywhere sampled
        ++idx[k];
    }
    Vec p(n);
    for (size_t k = 0; k < n; ++k) p[k] = AlgNum(palette[idx[k]]);
    // Basis: columns p, then standard vectors skipping the first j with
    // p[j] != 0 (keeps the matrix invertible).
    size_t skip = 0;
    while (p[skip].is_zero()) ++skip;
    Mat T(n, Vec(n, AlgNum(0)));
    size_t col = 1;
    for (size_t k = 0; k < n; ++k) T[k][0] = p[k];
    for (size_t j = 0; j < n; ++j) {
        if (j == skip) continue;
        T[j][col++] = AlgNum(1);
    }
    auto Tinv = invert_matrix(T);
    if (!Tinv) return std::nullopt;
    // The main variable plays the role of coordinate 0: permute so that the
    // new first coordinate is `main`.
    size_t mi = 0;
    while (vars[mi] != main) ++mi;
    // to_sheared: old var j -> sum_i T[j][i] * var(coord i), where coord 0 is
    // `main` and the others keep their own names in order.
    std::vector<std::string> coords;
    coords.push_back(main);
    for (size_t k = 0; k < n; ++k)
        if (k != mi) coords.push_back(vars[k]);
    std::map<std::string, MPoly> fwd, bwd;
    for (size_t j = 0; j < n; ++j) {
        MPoly acc;
        for (size_t i = 0; i < n; ++i)
            acc += MPoly::var(coords[i]).scaled(T[j][i]);
        fwd[vars[j]] = acc;
    }
    for (size_t i = 0; i < n; ++i) {
        MPoly acc;
        for (size_t j = 0; j < n; ++j)
            acc += MPoly::var(vars[j]).scaled((*Tinv)[i][j]);
        bwd[coords[i]] = acc;
    }
    return std::make_pair(fwd, bwd);
}

}  // namespace detail

inline FormFactorization factor_linear_forms(const MPoly& form) {
    FormFactorization out;
    out.unit = AlgNum(1);
    if (form.is_zero()) {
        out.note = "zero form";
        return out;
    }
    if (form.leading_form() != form) {
        out.note = "input is not homogeneous";
        return out;
    }
    int d = form.total_degree();
    if (d == 0) {
        out.ok = true;
        out.unit = form.constant_term();
        return out;
    }
    if (d == 1) {
        out.ok = true;
        detail::push_factor(out, form, 1);
        return out;
    }
    if (form.terms().size() == 1) {
        // Monomial: the factorization is the variable support itself.
        auto [e, c] = *form.terms().begin();
        out.ok = true;
        out.unit = c;
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) {
                out.factors.push_back(MPoly::var(form.vars()[k]));
                out.multiplicities.push_back(e[k]);
            }
        return out;
    }
    if (d > 4) {
        out.note = "unsupported form degree " + std::to_string(d);
        return out;
    }
    const auto vars = form.vars();
    size_t n = vars.size();

    if (d == 2) {
        // Symmetric coefficient matrix; rank <= 2 iff product of two forms.
        Mat M(n, Vec(n, AlgNum(0)));
        AlgNum half(Rat(1, 2));
        for (const auto& [e, c] : form.terms()) {
            std::vector<size_t> pos;
            for (size_t k = 0; k < e.size(); ++k)
                for (int r = 0; r < e[k]; ++r) pos.push_back(k);
            if (pos[0] == pos[1])
                M[pos[0]][pos[0]] = c;
            else {
                M[pos[0]][pos[1]] = c * half;
                M[pos[1]][pos[0]] = c * half;
            }
        }
        auto [P, diag] = congruence_diagonalize(M);
        auto Pinv = invert_matrix(P);
        if (!Pinv) {
            out.note = "internal: congruence transform not invertible";
            return out;
        }
        std::vector<std::pair<AlgNum, MPoly>> lines;  // (d_i, ell_i)
        for (size_t i = 0; i < n; ++i) {
            if (diag[i].is_zero()) continue;
            MPoly ell;
            for (size_t j = 0; j < n; ++j)
                ell += MPoly::var(vars[j]).scaled((*Pinv)[i][j]);
            lines.push_back({diag[i], ell});
        }
        if (lines.size() > 2) {
            out.note = "quadratic form has rank " +
                       std::to_string(lines.size());
            return out;
        }
        if (lines.size() == 1) {
            out.ok = true;
            detail::push_factor(out, lines[0].second, 2);
            out.unit *= lines[0].first;
        } else {
            // d1 l1^2 + d2 l2^2 = d1 (l1 + s l2)(l1 - s l2), s^2 = -d2/d1.
            auto s = algnum_sqrt(-(lines[1].first / lines[0].first));
            if (!s) {
                out.failure = RootStatus::NeedsFieldExtension;
                out.note = "splitting the rank-2 quadratic needs sqrt of " +
                           (-(lines[1].first / lines[0].first)).to_string();
                return out;
            }
            out.ok = true;
            detail::push_factor(out, lines[0].second + lines[1].second.scaled(*s),
                                1);
            detail::push_factor(out, lines[0].second - lines[1].second.scaled(*s),
                                1);
            out.unit *= lines[0].first;
        }
        MPoly check(out.unit);
        for (size_t k = 0; k < out.factors.size(); ++k)
            check *= out.factors[k].pow(out.multiplicities[k]);
        if (check != form) {
            out = FormFactorization{};
            out.note = "internal: quadratic reassembly mismatch";
            return out;
        }
        return out;
    }

    // Degrees 3 and 4: shear so the form is monic in its first variable,
    // then split.
    std::string main = vars[0];
    auto sh = detail::shear_to_regular(form, main);
    if (!sh) {
        out.note = "no regular direction found";
        return out;
    }
    MPoly sheared = form.substitute(sh->first);
    int prec = 2 * d + 4;

    std::vector<std::pair<MPoly, int>> found;  // factors in sheared coords
    if (d == 3) {
        CubicSplit s = full_split_cubic(sheared, main, prec);
        if (s.outcome != SplitOutcome::Split) {
            out.failure = s.outcome == SplitOutcome::NeedsFieldExtension
                              ? RootStatus::NeedsFieldExtension
                              : RootStatus::Obstructed;
            out.note = s.note;
            return out;
        }
        if (!s.exact_factorization) {
            out.note = "internal: cubic form split is not exact";
            return out;
        }
        for (const auto& r : s.roots)
            found.push_back({MPoly::var(main) - r.poly(), 1});
        out.unit *= s.dep.unit.poly().constant_term();
    } else {
        auto uni = sheared.as_univariate(main);
        AlgNum lead = uni[4].constant_term();
        Jet u(uni.count(4) ? uni[4] : MPoly(), prec);
        // Monic depressed quartic t^4 + p t^2 + q t + r, t = z + a3/(4 a4).
        Jet a3 = Jet(uni.count(3) ? uni[3] : MPoly(), prec) / u;
        Jet a2 = Jet(uni.count(2) ? uni[2] : MPoly(), prec) / u;
        Jet a1 = Jet(uni.count(1) ? uni[1] : MPoly(), prec) / u;
        Jet a0 = Jet(uni.count(0) ? uni[0] : MPoly(), prec) / u;
        Jet s4 = a3.scaled(AlgNum(Rat(1, 4)));
        Jet p = a2 - s4.pow(2).scaled(AlgNum(6));
        Jet q = a1 - a2 * s4.scaled(AlgNum(2)) + s4.pow(3).scaled(AlgNum(8));
        Jet r = a0 - a1 * s4 + a2 * s4.pow(2) - s4.pow(4).scaled(AlgNum(3));
        if (!p.exact() || !q.exact() || !r.exact()) {
            out.note = "internal: quartic normalization lost exactness";
            return out;
        }
        MPoly P = p.poly(), Q = q.poly(), R = r.poly(), S = s4.poly();
        auto emit = [&](const MPoly& t_root) {
            found.push_back({MPoly::var(main) - (t_root - S), 1});
        };
        if (P.is_zero() && Q.is_zero() && R.is_zero()) {
            found.push_back({MPoly::var(main) + S, 4});
        } else {
            std::string sv = fresh_var_name(form, "s");
            MPoly Sv = MPoly::var(sv);
            MPoly resolvent = Sv.pow(3) + AlgNum(2) * P * Sv.pow(2) +
                              (P.pow(2) - AlgNum(4) * R) * Sv - Q.pow(2);
            CubicSplit rs = full_split_cubic(resolvent, sv, prec);
            if (rs.outcome != SplitOutcome::Split || !rs.exact_factorization) {
                out.failure =
                    rs.outcome == SplitOutcome::NeedsFieldExtension
                        ? RootStatus::NeedsFieldExtension
                        : RootStatus::Obstructed;
                out.note = "resolvent cubic: " +
                           (rs.note.empty() ? std::string("does not split")
                                            : rs.note);
                return out;
            }
            bool done = false;
            RootStatus worst = RootStatus::Obstructed;
            std::string why = "no usable resolvent root";
            for (const auto& rr : rs.roots) {
                MPoly S0 = rr.poly();
                if (S0.is_zero()) continue;
                auto sq = series_sqrt(Jet(S0, prec));
                if (sq.status != RootStatus::Certified) {
                    if (sq.status == RootStatus::NeedsFieldExtension)
                        worst = RootStatus::NeedsFieldExtension;
                    why = "resolvent root is not a perfect square: " + sq.note;
                    continue;
                }
                MPoly s0 = sq.root.poly();
                auto qs = Q.exact_divide(s0);
                if (!qs) {
                    why = "pair-sum does not divide the odd coefficient";
                    continue;
                }
                MPoly t1 = (P + S0 + *qs).scaled(AlgNum(Rat(1, 2)));
                MPoly t2 = (P + S0 - *qs).scaled(AlgNum(Rat(1, 2)));
                // Quadratics t^2 -+ s0 t + t1/2: discriminants.
                auto split_quad = [&](const MPoly& lin,
                                      const MPoly& cst) -> bool {
                    // t^2 + lin t + cst
                    MPoly D = lin.pow(2).scaled(AlgNum(Rat(1, 4))) - cst;
                    auto ds = series_sqrt(Jet(D, prec));
                    if (ds.status != RootStatus::Certified) {
                        if (ds.status == RootStatus::NeedsFieldExtension)
                            worst = RootStatus::NeedsFieldExtension;
                        why = "quadratic discriminant: " + ds.note;
                        return false;
                    }
                    MPoly half = lin.scaled(AlgNum(Rat(-1, 2)));
                    emit(half + ds.root.poly());
                    emit(half - ds.root.poly());
                    return true;
                };
                size_t before = found.size();
                if (split_quad(-s0, t1) && split_quad(s0, t2)) {
                    done = true;
                    break;
                }
                found.resize(before);
            }
            if (!done) {
                // Fallback: the quartic may be the square of a quadratic.
                auto sq = series_sqrt(Jet(sheared, prec));
                if (sq.status == RootStatus::Certified) {
                    FormFactorization inner =
                        factor_linear_forms(sq.root.poly().leading_form());
                    if (inner.ok && inner.total_multiplicity() == 2) {
                        out.unit *= inner.unit * inner.unit;
                        for (size_t k = 0; k < inner.factors.size(); ++k)
                            found.push_back({inner.factors[k],
                                             2 * inner.multiplicities[k]});
                        done = true;
                    }
                }
            }
            if (!done) {
                out.failure = worst;
                out.note = why;
                return out;
            }
        }
        out.unit *= lead;
    }

    // Map factors back through the shear and normalize.
    for (auto& [fac, mult] : found) {
        MPoly back = fac.substitute(sh->second);
        detail::push_factor(out, back, mult);
    }
    MPoly check(out.unit);
    for (size_t k = 0; k < out.factors.size(); ++k)
        check *= out.factors[k].pow(out.multiplicities[k]);
    if (check != form) {
        out = FormFactorization{};
        out.note = "internal: reassembled factors disagree with the form";
        return out;
    }
    out.ok = true;
    return out;
}

// An invertible coordinate change sending each given independent linear form
// to a coordinate variable (the i-th form becomes images[i]).
struct Straightening {
    std::map<std::string, MPoly> forward;   // apply to move into new coords
    std::map<std::string, MPoly> backward;  // apply to return
    std::vector<std::string> images;
};

inline std::optional<Straightening> straighten_forms(
    const std::vector<MPoly>& forms, const std::vector<std::string>& vars) {
    size_t n = vars.size(), r = forms.size();
    if (r > n) return std::nullopt;
    Mat N;
    for (const auto& f : forms) N.push_back(detail::form_coefficients(f, vars));
    // Extend with standard basis rows, keeping full rank.
    for (size_t j = 0; j < n && N.size() < n; ++j) {
        Vec row(n, AlgNum(0));
        row[j] = AlgNum(1);
        Mat test = N;
        test.push_back(row);
        if (matrix_rank(test) == test.size()) N.push_back(row);
    }
    if (N.size() < n || matrix_rank(N) < n) return std::nullopt;
    auto Ninv = invert_matrix(N);
    if (!Ninv) return std::nullopt;
    Straightening st;
    for (size_t j = 0; j < n; ++j) {
        MPoly acc;
        for (size_t i = 0; i < n; ++i)
            acc += MPoly::var(vars[i]).scaled((*Ninv)[j][i]);
        st.forward[vars[j]] = acc;
    }
    for (size_t i = 0; i < n; ++i) {
        MPoly acc;
        for (size_t j = 0; j < n; ++j)
            acc += MPoly::var(vars[j]).scaled(N[i][j]);
        st.backward[vars[i]] = acc;
    }
    for (size_t i = 0; i < r; ++i) st.images.push_back(vars[i]);
    return st;
}

}  // namespace minsing
