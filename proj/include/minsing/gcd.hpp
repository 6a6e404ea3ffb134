#pragma once

// Multivariate polynomial gcd (primitive pseudo-remainder sequences) and
// squarefree decomposition over the coefficient field Q(zeta12).

#include <map>
#include <stdexcept>
#include <vector>

#include "mpoly.hpp"

namespace minsing {

MPoly poly_gcd(const MPoly& a, const MPoly& b);

namespace detail {

// gcd of the coefficient list of p with respect to v (the content), in the
// remaining variables.
inline MPoly content_wrt(const MPoly& p, const std::string& v) {
    MPoly g;
    for (const auto& [d, c] : p.as_univariate(v)) {
        g = poly_gcd(g, c);
        if (!g.is_zero() && g.is_constant()) return MPoly(AlgNum(1));
    }
    return g;
}

inline MPoly primitive_part_wrt(const MPoly& p, const std::string& v) {
    if (p.is_zero()) return p;
    MPoly c = content_wrt(p, v);
    auto q = p.exact_divide(c);
    if (!q) throw std::logic_error("primitive_part: content does not divide");
    return *q;
}

// Exact pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b with respect
// to v (deg_v a >= deg_v b > 0); the exact power keeps the subresultant
// divisibility theory applicable.
inline MPoly pseudo_remainder(MPoly a, const MPoly& b, const std::string& v) {
    int db = b.degree_in(v);
    auto bu = b.as_univariate(v);
    MPoly lb = bu.rbegin()->second;
    int e = a.degree_in(v) - db + 1;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        auto au = a.as_univariate(v);
        MPoly la = au.rbegin()->second;
        a = lb * a - la * MPoly::var(v, da - db) * b;
        --e;
    }
    for (; e > 0; --e) a *= lb;
    return a;
}

}  // namespace detail

// Monic (grlex-leading coefficient 1) greatest common divisor.
inline MPoly poly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly(AlgNum(1));

    // Main variable: the last (largest-named) variable either side uses.
    std::string v = a.vars().empty() ? b.vars().back()
                                     : (b.vars().empty() || a.vars().back() >= b.vars().back()
                                            ? a.vars().back()
                                            : b.vars().back());
    if (!a.depends_on(v)) {
        // a is a coefficient w.r.t. v: gcd divides a and the content of b.
        return poly_gcd(a, detail::content_wrt(b, v));
    }
    if (!b.depends_on(v)) return poly_gcd(b, detail::content_wrt(a, v));

    MPoly ca = detail::content_wrt(a, v);
    MPoly cb = detail::content_wrt(b, v);
    MPoly cont = poly_gcd(ca, cb);
    auto pa = a.exact_divide(ca);
    auto pb = b.exact_divide(cb);
    if (!pa || !pb) throw std::logic_error("poly_gcd: content division");
    MPoly p = *pa;
    MPoly q = *pb;
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    // Subresultant remainder sequence: each pseudo-remainder is divided by
    // the predicted factor g * h^d, which bounds coefficient growth without
    // recursive content computations along the way.
    MPoly g(AlgNum(1)), h(AlgNum(1));
    while (!q.is_zero()) {
        int d = p.degree_in(v) - q.degree_in(v);
        MPoly r = detail::pseudo_remainder(p, q, v);
        p = q;
        if (r.is_zero()) {
            q = r;
            break;
        }
        MPoly divisor = g * h.pow(d);
        auto qq = r.exact_divide(divisor);
        if (!qq) throw std::logic_error("poly_gcd: subresultant division");
        q = *qq;
        g = p.as_univariate(v).rbegin()->second;
        if (d >= 1) {
            auto hh = g.pow(d).exact_divide(h.pow(d - 1));
            if (!hh) throw std::logic_error("poly_gcd: subresultant scale");
            h = *hh;
        }
    }
    return (cont * detail::primitive_part_wrt(p, v)).monic();
}

inline MPoly gcd_list(const std::vector<MPoly>& ps) {
    MPoly g;
    for (const auto& p : ps) g = poly_gcd(g, p);
    return g;
}

// gcd of p with all of its first partial derivatives: for a squarefree
// factorization p = u * prod Q_i^i this is prod Q_i^(i-1) (char 0).
inline MPoly gcd_with_partials(const MPoly& p) {
    MPoly g = p;
    for (const auto& v : p.vars()) {
        g = poly_gcd(g, p.derivative(v));
        if (g.is_constant()) return g;
    }
    return g;
}

struct SquarefreeFactor {
    MPoly factor;      // monic, squarefree
    int multiplicity;  // >= 1
};

struct SquarefreeDecomposition {
    AlgNum unit;  // p = unit * prod factor_i^multiplicity_i
    std::vector<SquarefreeFactor> factors;

    MPoly reassembled() const {
        MPoly r(unit);
        for (const auto& f : factors) r *= f.factor.pow(f.multiplicity);
        return r;
    }
};

inline SquarefreeDecomposition squarefree_decompose(const MPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decompose(0)");
    SquarefreeDecomposition out;
    out.unit = AlgNum(1);
    if (p.is_constant()) {
        out.unit = p.constant_term();
        return out;
    }
    // c[0] = p, c[k+1] = gcd(c[k], partials of c[k]); then
    // P_k = c[k-1]/c[k] is the product of factors of multiplicity >= k and
    // Q_k = P_k/P_(k+1) the factors of multiplicity exactly k.
    std::vector<MPoly> c{p.monic()};
    while (!c.back().is_constant()) c.push_back(gcd_with_partials(c.back()));
    std::vector<MPoly> bands;  // P_1, ..., P_m
    for (size_t k = 1; k < c.size(); ++k) {
        auto q = c[k - 1].exact_divide(c[k]);
        if (!q) throw std::logic_error("squarefree_decompose: band division");
        bands.push_back(*q);
    }
    for (size_t k = 0; k < bands.size(); ++k) {
        MPoly qk = bands[k];
        if (k + 1 < bands.size()) {
            auto q = qk.exact_divide(bands[k + 1]);
            if (!q)
                throw std::logic_error("squarefree_decompose: factor division");
            qk = *q;
        }
        if (!qk.is_constant())
            out.factors.push_back({qk.monic(), int(k) + 1});
    }
    // The residual constant is the unit.
    MPoly prod(AlgNum(1));
    for (const auto& f : out.factors) prod *= f.factor.pow(f.multiplicity);
    auto u = p.exact_divide(prod);
    if (!u || !u->is_constant())
        throw std::logic_error("squarefree_decompose: non-constant unit");
    out.unit = u->constant_term();
    return out;
}

// Product of the distinct irreducible factors (each taken once).
inline MPoly squarefree_part(const MPoly& p) {
    MPoly g = gcd_with_partials(p);
    auto q = p.exact_divide(g);
    if (!q) throw std::logic_error("squarefree_part: division");
    return q->monic();
}

}  // namespace minsing
