#pragma once

// Weierstrass preparation for germs regular in a distinguished variable:
// f = U * (z^d + c_{d-1} z^{d-1} + ... + c_0) with U a unit series and the
// c_j series in the remaining variables vanishing at the origin.  The
// construction is graded and forced: at each total degree the unit layer is
// read off the z-exponent >= d part (top z-exponent first), and the
// distinguished-polynomial layer is what remains.

#include <map>
#include <string>
#include <vector>

#include "jet.hpp"
#include "mpoly.hpp"

namespace minsing {

struct WeierstrassResult {
    bool ok = false;
    std::string error;
    int degree = 0;                 // d
    Jet unit;                       // U, trusted to prec - d
    std::map<int, Jet> coeffs;      // c_j for j = 0..d-1, each free of z
    MPoly distinguished;            // z^d + sum c_j z^j (truncated)

    MPoly coeff_poly(int j) const {
        auto it = coeffs.find(j);
        return it == coeffs.end() ? MPoly() : it->second.poly();
    }
};

inline WeierstrassResult weierstrass_prepare(const MPoly& f,
                                             const std::string& zvar,
                                             int prec) {
    WeierstrassResult out;
    if (f.is_zero()) {
        out.error = "zero input";
        return out;
    }
    int d = f.ord();
    auto uni = f.as_univariate(zvar);
    auto it = uni.find(d);
    if (it == uni.end() || it->second.constant_term().is_zero()) {
        out.error = "not " + zvar + "-regular of order " + std::to_string(d);
        return out;
    }
    AlgNum u0 = it->second.constant_term();
    AlgNum u0inv = u0.inverse();

    MPoly z = MPoly::var(zvar);
    MPoly W = f.leading_form().scaled(u0inv);  // z^d + lower z-degrees
    MPoly Wd = W;                              // the degree-d layer of W
    MPoly U(u0);
    for (int e = d + 1; e <= prec; ++e) {
        MPoly layer = f.homogeneous_component(e) -
                      (U * W).homogeneous_component(e);
        // Solve for the unit layer from the top z-exponent down.
        MPoly Ue;
        MPoly rz = layer;
        for (int m = e - d; m >= 0; --m) {
            auto cz = rz.as_univariate(zvar);
            auto ct = cz.find(d + m);
            if (ct == cz.end() || ct->second.is_zero()) continue;
            MPoly term = ct->second * MPoly::var(zvar, m);
            Ue += term;
            rz -= term * Wd;
        }
        // What remains is u0 times the new layer of W (z-degree < d).
        if (rz.degree_in(zvar) >= d) {
            out.error = "internal: unit extraction left high z-degrees";
            return out;
        }
        U += Ue;
        W += rz.scaled(u0inv);
    }

    out.ok = true;
    out.degree = d;
    out.unit = Jet::approximation(U, prec - d);
    auto wu = W.as_univariate(zvar);
    for (int j = 0; j < d; ++j) {
        auto cj = wu.find(j);
        MPoly c = cj == wu.end() ? MPoly() : cj->second;
        out.coeffs.emplace(j, Jet::approximation(c, prec - j));
    }
    out.distinguished = W;
    return out;
}

}  // namespace minsing
