#pragma once

// Exact arithmetic in the degree-4 cyclotomic field Q(zeta12).
//
// Elements are stored in the power basis {1, t, t^2, t^3} with t a primitive
// 12th root of unity (minimal polynomial t^4 - t^2 + 1).  The two constants the
// rest of the library cares about are
//
//   eps = t^2 - 1   (a primitive cube root of unity, eps^2 + eps + 1 = 0)
//   i   = t^3       (i^2 = -1)
//
// Square roots of field elements are decided exactly through the quadratic
// tower Q < Q(sqrt3) < Q(sqrt3, i) = Q(zeta12).  Cube roots are exact and
// complete for rational inputs; non-rational inputs fall back to a verified
// numeric reconstruction (see algnum_cbrt below).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace minsing {

using Rat = mpq_class;

class AlgNum {
public:
    AlgNum() : c_{} {}
    AlgNum(const Rat& r) : c_{} { c_[0] = r; }
    AlgNum(long n) : c_{} { c_[0] = n; }
    AlgNum(int n) : c_{} { c_[0] = n; }
    static AlgNum from_coords(Rat c0, Rat c1, Rat c2, Rat c3) {
        AlgNum a;
        a.c_ = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
        return a;
    }

    // t = zeta12 itself.
    static AlgNum t() { return from_coords(0, 1, 0, 0); }
    // eps = t^2 - 1, primitive cube root of unity.
    static AlgNum eps() { return from_coords(-1, 0, 1, 0); }
    // i = t^3.
    static AlgNum i() { return from_coords(0, 0, 0, 1); }

    const Rat& coord(int k) const { return c_[k]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const Rat& rational_value() const {
        if (!is_rational()) throw std::domain_error("AlgNum: not rational");
        return c_[0];
    }

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b) {
        AlgNum r;
        for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b) {
        AlgNum r;
        for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    AlgNum operator-() const {
        AlgNum r;
        for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
        return r;
    }

    friend AlgNum operator*(const AlgNum& a, const AlgNum& b) {
        std::array<Rat, 7> conv{};
        for (int p = 0; p < 4; ++p) {
            if (a.c_[p] == 0) continue;
            for (int q = 0; q < 4; ++q) {
                if (b.c_[q] == 0) continue;
                conv[p + q] += a.c_[p] * b.c_[q];
            }
        }
        // Reduce with t^4 = t^2 - 1, t^5 = t^3 - t, t^6 = -1.
        AlgNum r;
        for (int k = 0; k < 4; ++k) r.c_[k] = conv[k];
        r.c_[2] += conv[4];
        r.c_[0] -= conv[4];
        r.c_[3] += conv[5];
        r.c_[1] -= conv[5];
        r.c_[0] -= conv[6];
        return r;
    }

    AlgNum& operator+=(const AlgNum& b) { return *this = *this + b; }
    AlgNum& operator-=(const AlgNum& b) { return *this = *this - b; }
    AlgNum& operator*=(const AlgNum& b) { return *this = *this * b; }

    AlgNum inverse() const;
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) {
        return a * b.inverse();
    }

    AlgNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        AlgNum r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const AlgNum& a, const AlgNum& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) {
        return !(a == b);
    }

    // Renders in the basis {1, eps, i, i*eps}, which the expression grammar can
    // read back ("eps" and "i" are the grammar's constants).
    std::string to_string() const;
    // True when to_string() would emit a sum or a leading minus, i.e. callers
    // multiplying by a monomial should parenthesize.
    bool needs_parens() const;

private:
    std::array<Rat, 4> c_;  // coordinates on {1, t, t^2, t^3}
};

namespace detail {

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace detail

inline std::string AlgNum::to_string() const {
    // {1, eps, i, i*eps} coordinates; see header comment (t = -i*eps).
    Rat one = c_[0] + c_[2];
    Rat e = c_[2];
    Rat ii = c_[3];
    Rat ie = -c_[1];
    struct Part {
        Rat v;
        const char* sym;
    };
    std::array<Part, 4> parts{{{one, ""}, {e, "eps"}, {ii, "i"}, {ie, "i*eps"}}};
    std::string out;
    for (const auto& p : parts) {
        if (p.v == 0) continue;
        Rat a = abs(p.v);
        std::string mag;
        if (p.sym[0] == '\0')
            mag = detail::rat_str(a);
        else if (a == 1)
            mag = p.sym;
        else
            mag = detail::rat_str(a) + "*" + p.sym;
        if (out.empty())
            out = (p.v < 0 ? "-" : "") + mag;
        else
            out += (p.v < 0 ? " - " : " + ") + mag;
    }
    return out.empty() ? "0" : out;
}

inline bool AlgNum::needs_parens() const {
    std::string s = to_string();
    return s.find(' ') != std::string::npos || s[0] == '-' ||
           s.find('/') != std::string::npos;
}

inline AlgNum AlgNum::inverse() const {
    if (is_zero()) throw std::domain_error("AlgNum: division by zero");
    if (is_rational()) {
        Rat inv = 1 / c_[0];
        return AlgNum(inv);
    }
    // Solve M x = e0 where column j of M holds the coordinates of this * t^j.
    std::array<std::array<Rat, 5>, 4> m{};
    AlgNum tp(1);
    for (int j = 0; j < 4; ++j) {
        AlgNum col = *this * tp;
        for (int k = 0; k < 4; ++k) m[k][j] = col.c_[k];
        tp *= t();
    }
    m[0][4] = 1;
    // Gaussian elimination with exact pivoting.
    for (int col = 0, row = 0; col < 4 && row < 4; ++col) {
        int piv = -1;
        for (int r = row; r < 4; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rat lead = m[row][col];
        for (int j = col; j < 5; ++j) m[row][j] /= lead;
        for (int r = 0; r < 4; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = col; j < 5; ++j) m[r][j] -= f * m[row][j];
        }
        ++row;
    }
    return from_coords(m[0][4], m[1][4], m[2][4], m[3][4]);
}

// ---------------------------------------------------------------------------
// Exact square roots via the quadratic tower.

namespace detail {

inline std::optional<Rat> sqrt_rational(const Rat& q) {
    if (q == 0) return Rat(0);
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn) / Rat(rd);
}

// Elements of Q(sqrt3) as pairs (p, q) meaning p + q*sqrt3.
struct QS3 {
    Rat p, q;
};

inline std::optional<QS3> sqrt_qsqrt3(const QS3& x) {
    if (x.q == 0) {
        if (auto s = sqrt_rational(x.p)) return QS3{*s, 0};
        if (auto s = sqrt_rational(x.p / 3)) return QS3{0, *s};
        return std::nullopt;
    }
    // (u + v*sqrt3)^2 = u^2 + 3v^2 + 2uv*sqrt3 with u,v rational; the
    // discriminant p^2 - 3q^2 is forced to be (u^2 - 3v^2)^2.
    auto d = sqrt_rational(x.p * x.p - 3 * x.q * x.q);
    if (!d) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rat dd = sign ? -*d : *d;
        Rat u2 = (x.p + dd) / 2;
        auto u = sqrt_rational(u2);
        if (u && *u != 0) {
            Rat v = x.q / (2 * *u);
            if (*u * *u + 3 * v * v == x.p && 2 * *u * v == x.q)
                return QS3{*u, v};
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Exact square root in Q(zeta12); nullopt certifies no root exists in the
// field (callers surface this as a field-extension verdict).
inline std::optional<AlgNum> algnum_sqrt(const AlgNum& x) {
    using detail::QS3;
    if (x.is_zero()) return AlgNum(0);
    // Rewrite on the basis {1, sqrt3, i, i*sqrt3}: x = A + B*i, A,B in Q(sqrt3).
    const Rat& c0 = x.coord(0);
    const Rat& c1 = x.coord(1);
    const Rat& c2 = x.coord(2);
    const Rat& c3 = x.coord(3);
    QS3 A{c0 + c2 / 2, c1 / 2};
    QS3 B{c1 / 2 + c3, c2 / 2};
    auto back = [](const QS3& u, const QS3& v) {
        // (u.p + u.q*sqrt3) + (v.p + v.q*sqrt3)*i  ->  power basis.
        Rat r0 = u.p, r1 = u.q, r2 = v.p, r3 = v.q;
        return AlgNum::from_coords(r0 - r3, 2 * r1, 2 * r3, r2 - r1);
    };
    bool bzero = (B.p == 0 && B.q == 0);
    if (bzero) {
        if (auto s = detail::sqrt_qsqrt3(A)) return back(*s, QS3{0, 0});
        QS3 negA{-A.p, -A.q};
        if (auto s = detail::sqrt_qsqrt3(negA)) return back(QS3{0, 0}, *s);
        return std::nullopt;
    }
    // s = u + v*i with u,v in Q(sqrt3): u^2 - v^2 = A, 2uv = B, and
    // (u^2 + v^2)^2 = A^2 + B^2 must be a square in Q(sqrt3).
    QS3 n{A.p * A.p + 3 * A.q * A.q + B.p * B.p + 3 * B.q * B.q,
          2 * A.p * A.q + 2 * B.p * B.q};
    auto d = detail::sqrt_qsqrt3(n);
    if (!d) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        QS3 dd = sign ? QS3{-d->p, -d->q} : *d;
        QS3 u2{(A.p + dd.p) / 2, (A.q + dd.q) / 2};
        auto u = detail::sqrt_qsqrt3(u2);
        if (!u || (u->p == 0 && u->q == 0)) continue;
        // v = B / (2u) in Q(sqrt3).
        Rat den = 4 * (u->p * u->p - 3 * u->q * u->q);
        QS3 inv2u;
        if (den == 0) continue;
        // (2u)^-1 = conj(2u)/N(2u)
        inv2u.p = 2 * u->p / den;
        inv2u.q = -2 * u->q / den;
        QS3 v{B.p * inv2u.p + 3 * B.q * inv2u.q,
              B.p * inv2u.q + B.q * inv2u.p};
        AlgNum cand = back(*u, v);
        if (cand * cand == x) return cand;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cube roots.

namespace detail {

inline std::optional<Rat> cbrt_rational(const Rat& q) {
    if (q == 0) return Rat(0);
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class an = abs(num);
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), an.get_mpz_t(), 3)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3)) return std::nullopt;
    if (rn * rn * rn != an || rd * rd * rd != den) return std::nullopt;
    Rat r = Rat(rn) / Rat(rd);
    return num < 0 ? -r : r;
}

// Fixed-precision complex helper for the cube-root fallback.
struct CF {
    mpf_class re, im;
    CF() : re(0, 256), im(0, 256) {}
    CF(double r, double i) : re(r, 256), im(i, 256) {}
    CF(const mpf_class& r, const mpf_class& i) : re(r), im(i) {}
};
inline CF cf_add(const CF& a, const CF& b) { return CF(a.re + b.re, a.im + b.im); }
inline CF cf_sub(const CF& a, const CF& b) { return CF(a.re - b.re, a.im - b.im); }
inline CF cf_mul(const CF& a, const CF& b) {
    return CF(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline CF cf_div(const CF& a, const CF& b) {
    mpf_class n = b.re * b.re + b.im * b.im;
    return CF((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}
inline CF cf_scale(const CF& a, const mpf_class& s) { return CF(a.re * s, a.im * s); }

inline std::vector<CF> complex_cbrts(const CF& w) {
    mpf_class mag = w.re * w.re + w.im * w.im;
    if (mag == 0) return {CF(), CF(), CF()};
    std::complex<double> wd(w.re.get_d(), w.im.get_d());
    std::complex<double> seed0 = std::pow(wd, 1.0 / 3.0);
    std::vector<CF> out;
    for (int k = 0; k < 3; ++k) {
        std::complex<double> rot(std::cos(2 * M_PI * k / 3), std::sin(2 * M_PI * k / 3));
        std::complex<double> s = seed0 * rot;
        CF x(s.real(), s.imag());
        for (int it = 0; it < 10; ++it) {
            CF x2 = cf_mul(x, x);
            CF x3 = cf_mul(x2, x);
            // x <- x - (x^3 - w)/(3 x^2)
            x = cf_sub(x, cf_div(cf_sub(x3, w), cf_scale(x2, 3)));
        }
        out.push_back(x);
    }
    return out;
}

// Nearest rational with denominator bounded by 2^64, via continued fractions.
inline Rat reconstruct_rational(const mpf_class& x) {
    mpz_class max_den("18446744073709551616");
    mpf_class v = x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        mpf_class fl;
        mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
        mpz_class a(fl);
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        mpf_class frac = v - fl;
        if (frac < 1e-70) break;
        v = 1 / frac;
    }
    if (q1 == 0) return Rat(0);
    Rat r(p1, q1);
    r.canonicalize();
    return r;
}

}  // namespace detail

// Cube root in Q(zeta12).  Rational inputs are decided exactly (complete: a
// root of X^3 - a generates a degree-3 extension unless a is a rational cube,
// and 3 does not divide the field degree 4).  Non-rational inputs use two
// complex embeddings at 256-bit precision, rational reconstruction of the
// power-basis coordinates, and exact verification of every candidate.
inline std::optional<AlgNum> algnum_cbrt(const AlgNum& x) {
    if (x.is_zero()) return AlgNum(0);
    if (x.is_rational()) {
        if (auto r = detail::cbrt_rational(x.rational_value())) return AlgNum(*r);
        return std::nullopt;
    }
    using detail::CF;
    mpf_class s3(0, 256);
    mpf_sqrt_ui(s3.get_mpf_t(), 3);
    mpf_class half(0, 256);
    half = 0.5;
    // Powers of zeta = e^{i pi/6} and zeta^5 (the two embeddings not conjugate
    // to each other): all entries are rational combinations of sqrt3.
    std::array<CF, 4> z1, z5;
    z1[0] = CF(1.0, 0.0);
    z1[1] = CF(mpf_class(s3 * half), half);
    z1[2] = CF(half, mpf_class(s3 * half));
    z1[3] = CF(0.0, 1.0);
    z5[0] = CF(1.0, 0.0);
    z5[1] = CF(mpf_class(-s3 * half), half);
    z5[2] = CF(half, mpf_class(-s3 * half));  // zeta^10 = e^{i 5pi/3}
    z5[3] = CF(0.0, 1.0);
    auto embed = [&](const std::array<CF, 4>& z) {
        CF acc;
        for (int j = 0; j < 4; ++j) {
            mpf_class cj(0, 256);
            mpf_set_q(cj.get_mpf_t(), x.coord(j).get_mpq_t());
            acc = detail::cf_add(acc, detail::cf_scale(z[j], cj));
        }
        return acc;
    };
    CF x1 = embed(z1), x5 = embed(z5);
    auto roots1 = detail::complex_cbrts(x1);
    auto roots5 = detail::complex_cbrts(x5);
    // Solve the fixed 4x4 real system mapping power-basis coordinates to
    // (Re sigma1, Im sigma1, Re sigma5, Im sigma5).
    for (const CF& r1 : roots1) {
        for (const CF& r5 : roots5) {
            std::array<std::array<mpf_class, 5>, 4> m;
            for (auto& row : m)
                for (auto& e : row) e = mpf_class(0, 256);
            for (int j = 0; j < 4; ++j) {
                m[0][j] = z1[j].re;
                m[1][j] = z1[j].im;
                m[2][j] = z5[j].re;
                m[3][j] = z5[j].im;
            }
            m[0][4] = r1.re;
            m[1][4] = r1.im;
            m[2][4] = r5.re;
            m[3][4] = r5.im;
            bool singular = false;
            for (int col = 0, row = 0; col < 4; ++col, ++row) {
                int piv = -1;
                mpf_class best(0, 256);
                for (int r = row; r < 4; ++r) {
                    mpf_class a = abs(m[r][col]);
                    if (piv < 0 || a > best) {
                        piv = r;
                        best = a;
                    }
                }
                if (best == 0) {
                    singular = true;
                    break;
                }
                std::swap(m[piv], m[row]);
                for (int r = 0; r < 4; ++r) {
                    if (r == row) continue;
                    mpf_class f = m[r][col] / m[row][col];
                    for (int jj = col; jj < 5; ++jj) m[r][jj] -= f * m[row][jj];
                }
            }
            if (singular) continue;
            std::array<Rat, 4> coords;
            for (int k = 0; k < 4; ++k)
                coords[k] = detail::reconstruct_rational(mpf_class(m[k][4] / m[k][k]));
            AlgNum cand = AlgNum::from_coords(coords[0], coords[1], coords[2], coords[3]);
            if (cand * cand * cand == x) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace minsing
