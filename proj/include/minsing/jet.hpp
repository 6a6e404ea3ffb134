#pragma once

// Jets: polynomials trusted up to a total-degree precision, with an exactness
// flag.  An exact jet's polynomial is the whole object; an inexact jet agrees
// with the represented series on every term of total degree <= precision().
// Arithmetic keeps the exact flag only when no truncation can have discarded
// information.

#include <stdexcept>
#include <string>

#include "mpoly.hpp"

namespace minsing {

inline constexpr int kDefaultPrecision = 12;

class Jet {
public:
    Jet() : precision_(kDefaultPrecision), exact_(true) {}
    explicit Jet(const MPoly& p, int precision = kDefaultPrecision)
        : poly_(p), precision_(precision), exact_(true) {}

    static Jet exact_poly(const MPoly& p, int precision = kDefaultPrecision) {
        return Jet(p, precision);
    }
    static Jet approximation(const MPoly& p, int precision) {
        Jet j(p.truncated(precision), precision);
        j.exact_ = false;
        return j;
    }

    const MPoly& poly() const { return poly_; }
    int precision() const { return precision_; }
    bool exact() const { return exact_; }
    // Degree through which terms are trusted (kOrdInf when exact).
    int trusted_degree() const { return exact_ ? kOrdInf : precision_; }

    bool is_zero() const { return poly_.is_zero(); }
    int ord() const { return poly_.ord(); }
    bool is_unit() const { return !poly_.constant_term().is_zero(); }

    Jet truncated(int prec) const {
        if (prec >= trusted_degree()) return *this;
        Jet j(poly_.truncated(prec), prec);
        j.exact_ = false;
        return j;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        return combined(a, b, a.poly_ + b.poly_);
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        return combined(a, b, a.poly_ - b.poly_);
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        return combined(a, b, a.poly_ * b.poly_);
    }
    Jet operator-() const {
        Jet j = *this;
        j.poly_ = -j.poly_;
        return j;
    }
    Jet& operator+=(const Jet& b) { return *this = *this + b; }
    Jet& operator-=(const Jet& b) { return *this = *this - b; }
    Jet& operator*=(const Jet& b) { return *this = *this * b; }

    Jet scaled(const AlgNum& c) const {
        Jet j = *this;
        j.poly_ = j.poly_.scaled(c);
        return j;
    }

    Jet pow(int e) const {
        Jet r(MPoly(AlgNum(1)), precision_);
        Jet base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    // Multiplicative inverse of a unit, as a series to this jet's precision.
    Jet inverse() const {
        AlgNum c = poly_.constant_term();
        if (c.is_zero())
            throw std::domain_error("Jet: inverse of a non-unit");
        AlgNum cinv = c.inverse();
        MPoly g = poly_.scaled(cinv) - MPoly(AlgNum(1));  // ord >= 1
        if (g.is_zero()) {
            Jet j(MPoly(cinv), precision_);
            j.exact_ = exact_;
            return j;
        }
        MPoly acc(AlgNum(1));
        MPoly gp(AlgNum(1));
        for (int k = 1; k <= precision_; ++k) {
            gp = (gp * -g).truncated(precision_);
            if (gp.is_zero()) break;
            acc += gp;
        }
        Jet j(acc.scaled(cinv).truncated(precision_), precision_);
        j.exact_ = false;
        return j;
    }

    friend Jet operator/(const Jet& a, const Jet& b) {
        if (a.exact_ && b.exact_) {
            if (auto q = a.poly_.exact_divide(b.poly_)) {
                Jet j(*q, std::min(a.precision_, b.precision_));
                return j;
            }
        }
        return a * b.inverse();
    }

    Jet substituted(const std::map<std::string, MPoly>& bind) const {
        // Variable-to-polynomial substitution with every image of positive
        // order keeps trusted degrees trusted: unknown terms (total degree
        // > precision) land in degree > precision again.
        for (const auto& [v, img] : bind)
            if (!img.is_zero() && img.ord() < 1)
                throw std::invalid_argument(
                    "Jet: substitution image must vanish at the origin");
        Jet j = *this;
        j.poly_ = poly_.substitute(bind);
        if (!j.exact_) j.poly_ = j.poly_.truncated(precision_);
        return j;
    }

    // Agreement on all trusted terms of both sides.
    friend bool agree(const Jet& a, const Jet& b) {
        int n = std::min(a.trusted_degree(), b.trusted_degree());
        if (n == kOrdInf) return a.poly_ == b.poly_;
        return a.poly_.truncated(n) == b.poly_.truncated(n);
    }

    std::string to_string() const {
        std::string s = poly_.to_string();
        if (!exact_) s += " + O(deg " + std::to_string(precision_ + 1) + ")";
        return s;
    }

private:
    MPoly poly_;
    int precision_;
    bool exact_;

    static Jet combined(const Jet& a, const Jet& b, MPoly p) {
        Jet j;
        j.exact_ = a.exact_ && b.exact_;
        if (j.exact_) {
            j.precision_ = std::max(a.precision_, b.precision_);
            j.poly_ = std::move(p);
        } else {
            j.precision_ = std::min(a.exact_ ? b.precision_ : a.precision_,
                                    b.exact_ ? a.precision_ : b.precision_);
            j.poly_ = p.truncated(j.precision_);
        }
        return j;
    }
};

}  // namespace minsing
