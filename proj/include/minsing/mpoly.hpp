#pragma once

// Sparse multivariate polynomials over Q(zeta12).
//
// A polynomial carries its own ordered variable list (sorted by name, trimmed
// to the variables actually appearing) and a term map from exponent vectors to
// nonzero coefficients.  Binary operations merge variable universes by name.
// Terms are kept in graded-lexicographic order, so the map's last entry is the
// division-loop leading term.

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algnum.hpp"

namespace minsing {

using ExpVec = std::vector<int>;

// Order at +infinity for the zero polynomial.
inline constexpr int kOrdInf = INT_MAX;

struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        for (size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

class MPoly {
public:
    using TermMap = std::map<ExpVec, AlgNum, GrlexLess>;

    MPoly() = default;
    explicit MPoly(const AlgNum& c) {
        if (!c.is_zero()) terms_[ExpVec{}] = c;
    }
    explicit MPoly(long n) : MPoly(AlgNum(n)) {}

    static MPoly constant(const AlgNum& c) { return MPoly(c); }
    static MPoly var(const std::string& name, int exp = 1) {
        MPoly p;
        p.vars_ = {name};
        if (exp < 0) throw std::invalid_argument("MPoly: negative exponent");
        p.terms_[ExpVec{exp}] = AlgNum(1);
        p.normalize();
        return p;
    }
    static MPoly from_term(const std::map<std::string, int>& mono, const AlgNum& c) {
        MPoly p;
        if (c.is_zero()) return p;
        ExpVec e;
        for (const auto& [name, exp] : mono) {
            p.vars_.push_back(name);  // std::map iterates sorted
            e.push_back(exp);
        }
        p.terms_[e] = c;
        p.normalize();
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && term_degree(terms_.begin()->first) == 0);
    }
    AlgNum constant_term() const {
        ExpVec zero(vars_.size(), 0);
        auto it = terms_.find(zero);
        return it == terms_.end() ? AlgNum(0) : it->second;
    }
    size_t term_count() const { return terms_.size(); }

    static int term_degree(const ExpVec& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return term_degree(terms_.rbegin()->first);
    }
    // Order of vanishing at the origin (min total degree); kOrdInf for 0.
    int ord() const {
        int m = kOrdInf;
        for (const auto& [e, c] : terms_) m = std::min(m, term_degree(e));
        return m;
    }
    // Order counting only the given variables.
    int ord_sub(const std::vector<std::string>& sub) const {
        if (terms_.empty()) return kOrdInf;
        std::vector<int> idx;
        for (const auto& v : sub) {
            int k = var_index(v);
            if (k >= 0) idx.push_back(k);
        }
        int m = kOrdInf;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int k : idx) d += e[k];
            m = std::min(m, d);
        }
        return m;
    }

    // Sum of the terms of total degree d (the tangent cone when d = ord()).
    MPoly homogeneous_component(int d) const {
        MPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_)
            if (term_degree(e) == d) r.terms_[e] = c;
        r.normalize();
        return r;
    }
    MPoly leading_form() const { return homogeneous_component(ord()); }

    MPoly truncated(int max_degree) const {
        MPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_)
            if (term_degree(e) <= max_degree) r.terms_[e] = c;
        r.normalize();
        return r;
    }

    int degree_in(const std::string& v) const {
        int k = var_index(v);
        if (k < 0) return 0;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
        return d;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [e, c] : y.terms_) {
            auto it = x.terms_.find(e);
            if (it == x.terms_.end())
                x.terms_[e] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) x.terms_.erase(it);
            }
        }
        x.normalize();
        return x;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        auto [x, y] = aligned(a, b);
        MPoly r;
        r.vars_ = x.vars_;
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                ExpVec e(ea.size());
                for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                AlgNum prod = ca * cb;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    if (!prod.is_zero()) r.terms_[e] = prod;
                } else {
                    it->second += prod;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        r.normalize();
        return r;
    }
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

    MPoly scaled(const AlgNum& c) const {
        MPoly r;
        if (c.is_zero()) return r;
        r.vars_ = vars_;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    MPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MPoly: negative power");
        MPoly r(AlgNum(1));
        MPoly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Leading term under grlex (largest).  Requires a nonzero polynomial.
    std::pair<ExpVec, AlgNum> leading_term() const {
        if (terms_.empty()) throw std::domain_error("MPoly: leading term of 0");
        return *terms_.rbegin();
    }
    AlgNum leading_coefficient() const { return leading_term().second; }
    // Trailing term under grlex (smallest).  Requires a nonzero polynomial.
    std::pair<ExpVec, AlgNum> trailing_term() const {
        if (terms_.empty())
            throw std::domain_error("MPoly: trailing term of 0");
        return *terms_.begin();
    }
    AlgNum trailing_coefficient() const { return trailing_term().second; }
    // Divides all coefficients so the grlex-leading coefficient becomes 1.
    MPoly monic() const {
        if (terms_.empty()) return *this;
        return scaled(leading_coefficient().inverse());
    }
    // Divides all coefficients so the grlex-trailing coefficient becomes 1.
    // Natural normalization for divisor equations vanishing at the origin:
    // it keeps the lowest-degree part's unit coefficient at 1.
    MPoly trailing_monic() const {
        if (terms_.empty()) return *this;
        return scaled(trailing_coefficient().inverse());
    }

    // Exact division certificate: f/g when g divides f, nullopt otherwise.
    std::optional<MPoly> exact_divide(const MPoly& g) const {
        if (g.is_zero()) throw std::domain_error("MPoly: division by zero");
        MPoly r = *this;
        MPoly q;
        while (!r.is_zero()) {
            // Re-align each round: subtraction may trim r's variable list.
            auto [rr, gg] = aligned(r, g);
            auto [re, rc] = rr.leading_term();
            auto [ge, gc] = gg.leading_term();
            ExpVec t(re.size());
            for (size_t k = 0; k < re.size(); ++k) {
                t[k] = re[k] - ge[k];
                if (t[k] < 0) return std::nullopt;
            }
            MPoly mono;
            mono.vars_ = rr.vars_;
            mono.terms_[t] = rc * gc.inverse();
            mono.normalize();
            q += mono;
            r = rr - mono * gg;
        }
        return q;
    }

    // f = var^gamma * cofactor with gamma maximal; requires f != 0.
    std::pair<int, MPoly> factor_out_variable(const std::string& v) const {
        if (is_zero())
            throw std::domain_error("MPoly: factor_out_variable on 0");
        int k = var_index(v);
        if (k < 0) return {0, *this};
        int gamma = INT_MAX;
        for (const auto& [e, c] : terms_) gamma = std::min(gamma, e[k]);
        if (gamma == 0) return {0, *this};
        MPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            e2[k] -= gamma;
            r.terms_[e2] = c;
        }
        r.normalize();
        return {gamma, r};
    }

    // Largest monomial m with f = m * cofactor; exponents per variable.
    std::pair<std::map<std::string, int>, MPoly> content_monomial() const {
        std::map<std::string, int> mono;
        MPoly rest = *this;
        for (const auto& v : vars_) {
            auto [g, r] = rest.factor_out_variable(v);
            if (g > 0) {
                mono[v] = g;
                rest = r;
            }
        }
        return {mono, rest};
    }

    MPoly derivative(const std::string& v) const {
        MPoly r;
        int k = var_index(v);
        if (k < 0) return r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[k] == 0) continue;
            ExpVec e2 = e;
            e2[k] -= 1;
            r.terms_[e2] = c * AlgNum(e[k]);
        }
        r.normalize();
        return r;
    }

    // Simultaneous substitution; unbound variables map to themselves.
    MPoly substitute(const std::map<std::string, MPoly>& bind) const {
        std::map<std::string, std::vector<MPoly>> powers;
        MPoly acc;
        for (const auto& [e, c] : terms_) {
            MPoly term(c);
            for (size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto bit = bind.find(vars_[k]);
                MPoly base =
                    bit == bind.end() ? MPoly::var(vars_[k]) : bit->second;
                auto& cache = powers[vars_[k]];
                if (cache.empty()) cache.push_back(MPoly(AlgNum(1)));
                while ((int)cache.size() <= e[k])
                    cache.push_back(cache.back() * base);
                term *= cache[e[k]];
            }
            acc += term;
        }
        return acc;
    }

    MPoly rename(const std::string& from, const std::string& to) const {
        return substitute({{from, MPoly::var(to)}});
    }

    AlgNum evaluate(const std::map<std::string, AlgNum>& point) const {
        AlgNum out(0);
        for (const auto& [e, c] : terms_) {
            AlgNum t = c;
            for (size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = point.find(vars_[k]);
                if (it == point.end())
                    throw std::invalid_argument("MPoly: unbound variable " +
                                                vars_[k]);
                t *= it->second.pow(e[k]);
            }
            out += t;
        }
        return out;
    }

    // Coefficients with respect to one variable: exponent -> coefficient
    // polynomial in the remaining variables.
    std::map<int, MPoly> as_univariate(const std::string& v) const {
        std::map<int, MPoly> out;
        int k = var_index(v);
        for (const auto& [e, c] : terms_) {
            int d = k < 0 ? 0 : e[k];
            ExpVec e2 = e;
            if (k >= 0) e2[k] = 0;
            MPoly mono;
            mono.vars_ = vars_;
            mono.terms_[e2] = c;
            mono.normalize();
            out[d] += mono;
        }
        return out;
    }
    static MPoly from_univariate(const std::map<int, MPoly>& coeffs,
                                 const std::string& v) {
        MPoly acc;
        for (const auto& [d, c] : coeffs) acc += c * MPoly::var(v, d);
        return acc;
    }

    int var_index(const std::string& v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return -1;
        return int(it - vars_.begin());
    }
    bool depends_on(const std::string& v) const {
        int k = var_index(v);
        if (k < 0) return false;
        for (const auto& [e, c] : terms_)
            if (e[k] > 0) return true;
        return false;
    }

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    // Drop variables no term uses, keeping vars_ sorted and keys aligned.
    void normalize() {
        if (vars_.empty()) return;
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t k = 0; k < used.size(); ++k)
                if (e[k] > 0) used[k] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
            return;
        std::vector<std::string> nv;
        std::vector<int> keep;
        for (size_t k = 0; k < vars_.size(); ++k)
            if (used[k]) {
                nv.push_back(vars_[k]);
                keep.push_back(int(k));
            }
        TermMap nt;
        for (const auto& [e, c] : terms_) {
            ExpVec e2;
            e2.reserve(keep.size());
            for (int k : keep) e2.push_back(e[k]);
            nt[e2] = c;
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    // Re-express both operands over the union of their variable lists.
    static std::pair<MPoly, MPoly> aligned(const MPoly& a, const MPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                       b.vars_.end(), std::back_inserter(u));
        return {a.remapped(u), b.remapped(u)};
    }
    MPoly remapped(const std::vector<std::string>& u) const {
        MPoly r;
        r.vars_ = u;
        std::vector<int> pos(vars_.size());
        for (size_t k = 0; k < vars_.size(); ++k) {
            auto it = std::lower_bound(u.begin(), u.end(), vars_[k]);
            pos[k] = int(it - u.begin());
        }
        for (const auto& [e, c] : terms_) {
            ExpVec e2(u.size(), 0);
            for (size_t k = 0; k < e.size(); ++k) e2[pos[k]] = e[k];
            r.terms_[e2] = c;
        }
        return r;
    }
};

inline std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t k = 0; k < vars_.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coeff;
        bool neg = false;
        if (c.is_rational()) {
            Rat q = c.rational_value();
            neg = q < 0;
            Rat a = abs(q);
            if (a != 1 || mono.empty()) coeff = a.get_str();
        } else if (c.needs_parens()) {
            coeff = "(" + c.to_string() + ")";
        } else {
            coeff = c.to_string();
        }
        std::string term = coeff;
        if (!mono.empty()) {
            if (!term.empty()) term += "*";
            term += mono;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

// Convenience for building expressions in code.
inline MPoly operator*(const AlgNum& c, const MPoly& p) { return p.scaled(c); }
inline MPoly operator+(const MPoly& p, const AlgNum& c) {
    return p + MPoly(c);
}
inline MPoly operator-(const MPoly& p, const AlgNum& c) {
    return p - MPoly(c);
}

}  // namespace minsing
