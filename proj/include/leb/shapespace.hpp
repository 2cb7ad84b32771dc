#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "leb/errors.hpp"
#include "leb/quadval.hpp"
#include "leb/rational.hpp"

namespace leb {

enum class Region { I, II, III, IV, V, VI };

inline const char* region_name(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
        case Region::IV: return "IV";
        case Region::V: return "V";
        case Region::VI: return "VI";
    }
    return "?";
}

enum class Geodesic { None, ReHalf, AbsRoot2, AbsMinus1Root2 };

inline const char* geodesic_name(Geodesic g) {
    switch (g) {
        case Geodesic::None: return "none";
        case Geodesic::ReHalf: return "Re=1/2";
        case Geodesic::AbsRoot2: return "|z|=sqrt2/2";
        case Geodesic::AbsMinus1Root2: return "|z-1|=sqrt2/2";
    }
    return "?";
}

// A similarity class z = x + s*sqrt(d)*i in the moduli domain
// D = { Re z <= 1/2, Im z > 0, |z-1| <= 1 }.
struct ShapePoint {
    Rat x;
    Rat s;
    long d = 1;

    ShapePoint() = default;
    ShapePoint(Rat x_, Rat s_, long d_) : x(std::move(x_)), s(std::move(s_)), d(d_) {}

    // rational |z|^2 and |z-1|^2 (s^2 d is rational, so both stay in Q)
    Rat abs2() const { return x * x + s * s * d; }
    Rat abs_minus1_2() const { return (x - 1) * (x - 1) + s * s * d; }

    double re() const { return x.get_d(); }
    double im() const { return s.get_d() * std::sqrt(static_cast<double>(d)); }

    bool in_domain() const {
        if (sign(s) <= 0) return false;
        if (sign(x - make_rat(1, 2)) > 0) return false;
        return sign(abs_minus1_2() - 1) <= 0;
    }

    void require_in_domain() const {
        if (!in_domain())
            throw point_outside_d(rat_str(x) + " + " + rat_str(s) + "*sqrt(" + std::to_string(d) + ")*i");
    }

    friend bool operator==(const ShapePoint& a, const ShapePoint& b) {
        return a.d == b.d && a.x == b.x && a.s == b.s;
    }
    friend bool operator!=(const ShapePoint& a, const ShapePoint& b) { return !(a == b); }
};

inline ShapePoint zeta() { return ShapePoint(make_rat(1, 2), make_rat(1, 2), 1); }

inline std::string point_str(const ShapePoint& z) {
    return rat_str(z.x) + " + " + rat_str(z.s) + "*sqrt(" + std::to_string(z.d) + ")*i";
}

// Exact subregion classification by the geodesics Re z = 1/4, |z| = 1/2 and
// |z - 1/2| = 1/2. Boundary ownership: Re = 1/4 goes to the left-side region,
// |z - 1/2| = 1/2 to {I, III}, |z| = 1/2 to {II, IV}.
inline Region classify(const ShapePoint& z) {
    z.require_in_domain();
    Rat ss = z.s * z.s * z.d;
    int t1 = sign(z.x - make_rat(1, 4));
    int t2 = sign(z.x * z.x + ss - make_rat(1, 4));
    int t3 = sign((z.x - make_rat(1, 2)) * (z.x - make_rat(1, 2)) + ss - make_rat(1, 4));
    if (t1 <= 0) {
        if (t2 >= 0) return Region::II;
        if (t3 >= 0) return Region::III;
        return Region::V;
    }
    if (t3 >= 0) return Region::I;
    if (t2 >= 0) return Region::IV;
    return Region::VI;
}

namespace detail {

// x + s*sqrt(d)*i treated as a complex number; closed under the field ops
// because products of two sqrt(d)-imaginary parts fall back into Q.
struct QC {
    Rat x;
    Rat s;
    long d;
};

inline QC make_qc(const ShapePoint& z) { return {z.x, z.s, z.d}; }
inline QC qc_conj(const QC& z) { return {z.x, -z.s, z.d}; }
inline QC qc_add(const QC& a, const QC& b) { return {a.x + b.x, a.s + b.s, a.d}; }
inline QC qc_sub_rat(const QC& a, const Rat& r) { return {a.x - r, a.s, a.d}; }
inline QC qc_scale(const QC& a, const Rat& r) { return {a.x * r, a.s * r, a.d}; }
inline QC qc_neg(const QC& a) { return {-a.x, -a.s, a.d}; }
inline Rat qc_norm2(const QC& a) { return a.x * a.x + a.s * a.s * a.d; }

inline QC qc_mul(const QC& a, const QC& b) {
    return {a.x * b.x - a.s * b.s * b.d, a.x * b.s + a.s * b.x, a.d};
}

inline QC qc_inv(const QC& a) {
    Rat n = qc_norm2(a);
    if (n == 0) throw division_by_zero();
    return {a.x / n, -a.s / n, a.d};
}

inline QC qc_div(const QC& a, const QC& b) { return qc_mul(a, qc_inv(b)); }

inline ShapePoint to_point(const QC& z) { return ShapePoint(z.x, z.s, z.d); }

// The six L pieces and two R pieces of Table 1, applicable to any point so
// that boundary-continuity can be tested directly.
inline ShapePoint apply_L_piece(const ShapePoint& z, Region r) {
    QC w = make_qc(z);
    Rat one(1), two(2);
    switch (r) {
        case Region::I:  // 1/(2 conj z)
            return to_point(qc_inv(qc_scale(qc_conj(w), two)));
        case Region::II:  // -1/(2z - 1)
            return to_point(qc_neg(qc_inv(qc_sub_rat(qc_scale(w, two), one))));
        case Region::III: {  // 2 conj z / (2 conj z - 1)
            QC t = qc_scale(qc_conj(w), two);
            return to_point(qc_div(t, qc_sub_rat(t, one)));
        }
        case Region::IV: {  // (2z - 1)/(2z)
            QC t = qc_scale(w, two);
            return to_point(qc_div(qc_sub_rat(t, one), t));
        }
        case Region::V:  // 2z
            return to_point(qc_scale(w, two));
        case Region::VI:  // 1 - 2 conj z
            return ShapePoint(1 - 2 * z.x, 2 * z.s, z.d);
    }
    throw point_outside_d("unreachable");
}

inline ShapePoint apply_R_piece(const ShapePoint& z, Region r) {
    QC w = make_qc(z);
    Rat one(1), two(2);
    if (r == Region::I || r == Region::II || r == Region::III) {
        // -1/(2z - 2)
        return to_point(qc_neg(qc_inv(qc_sub_rat(qc_scale(w, two), two))));
    }
    // (2 conj z - 1)/(2 conj z - 2)
    QC t = qc_scale(qc_conj(w), two);
    return to_point(qc_div(qc_sub_rat(t, one), qc_sub_rat(t, two)));
}

}  // namespace detail

// Left child map of Table 1.
inline ShapePoint apply_L(const ShapePoint& z) {
    ShapePoint out = detail::apply_L_piece(z, classify(z));
    out.require_in_domain();
    return out;
}

// Right child map of Table 1.
inline ShapePoint apply_R(const ShapePoint& z) {
    ShapePoint out = detail::apply_R_piece(z, classify(z));
    out.require_in_domain();
    return out;
}

// Which of the three genericity geodesics (Prop.-style exact tests) the point
// lies on; at zeta both |z|=sqrt2/2 and Re=1/2 hold and AbsRoot2 wins.
inline Geodesic on_genericity_geodesic(const ShapePoint& z) {
    Rat ss = z.s * z.s * z.d;
    if (z.x * z.x + ss == make_rat(1, 2)) return Geodesic::AbsRoot2;
    if ((z.x - 1) * (z.x - 1) + ss == make_rat(1, 2)) return Geodesic::AbsMinus1Root2;
    if (z.x == make_rat(1, 2)) return Geodesic::ReHalf;
    return Geodesic::None;
}

// Exact membership in V-tilde = { z in V : |z - 1/3| <= 1/3 }.
inline bool in_v_tilde(const ShapePoint& z) {
    if (classify(z) != Region::V) return false;
    Rat q = (z.x - make_rat(1, 3)) * (z.x - make_rat(1, 3)) + z.s * z.s * z.d;
    return sign(q - make_rat(1, 9)) <= 0;
}

// Squared side lengths; sides themselves need not be rational.
struct SideLengths {
    Rat sq_a, sq_b, sq_c;
};

inline ShapePoint from_side_lengths(const SideLengths& sl, unsigned long factor_bound = kDefaultFactorBound) {
    if (sign(sl.sq_a) <= 0 || sign(sl.sq_b) <= 0 || sign(sl.sq_c) <= 0) throw degenerate_triangle();
    const Rat &a = sl.sq_a, &b = sl.sq_b, &c = sl.sq_c;
    // 16 * area^2 > 0 in terms of squared sides
    Rat nd = 2 * (a * b + b * c + c * a) - a * a - b * b - c * c;
    if (sign(nd) <= 0) throw degenerate_triangle();
    Rat longest = std::max({a, b, c});
    Rat p2, q2;  // the two others over the longest, p2 <= q2
    if (a == longest) {
        p2 = std::min(b, c) / longest;
        q2 = std::max(b, c) / longest;
    } else if (b == longest) {
        p2 = std::min(a, c) / longest;
        q2 = std::max(a, c) / longest;
    } else {
        p2 = std::min(a, b) / longest;
        q2 = std::max(a, b) / longest;
    }
    Rat x = (1 + p2 - q2) / 2;
    Rat y2 = p2 - x * x;
    if (sign(y2) <= 0) throw degenerate_triangle();
    auto [s, d] = rat_sqrt_decompose(y2, factor_bound);
    ShapePoint z(x, s, d);
    z.require_in_domain();
    return z;
}

// Standard upper-half-plane metric d = arcosh(1 + |z-w|^2 / (2 Im z Im w)).
inline double hyperbolic_distance(const ShapePoint& z, const ShapePoint& w) {
    double dx = z.re() - w.re();
    double dy = z.im() - w.im();
    double arg = 1.0 + (dx * dx + dy * dy) / (2.0 * z.im() * w.im());
    return std::acosh(std::max(arg, 1.0));
}

// Exact |z - zeta|^2 / Im z; constant on a set iff the set lies on a common
// hyperbolic circle centered at zeta (cosh d = 1 + invariant since Im zeta = 1/2).
inline QuadVal zeta_radius_invariant(const ShapePoint& z) {
    Rat half = make_rat(1, 2);
    // |z - zeta|^2 = (x-1/2)^2 + s^2 d - s sqrt(d) + 1/4
    QuadVal num((z.x - half) * (z.x - half) + z.s * z.s * z.d + make_rat(1, 4), -z.s, z.d);
    QuadVal im(Rat(0), z.s, z.d);  // s*sqrt(d)
    return num / im;
}

}  // namespace leb
