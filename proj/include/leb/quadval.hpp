#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <utility>

#include "leb/errors.hpp"
#include "leb/rational.hpp"

namespace leb {

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), d square-free.
// For d = 1 the sqrt folds into the rational part, so b is kept at 0.
struct QuadVal {
    Rat a;
    Rat b;
    long d = 1;

    QuadVal() = default;
    QuadVal(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (d == 1 && b != 0) {
            a += b;
            b = 0;
        }
    }
    explicit QuadVal(Rat a_, long d_ = 1) : a(std::move(a_)), d(d_) {}
    explicit QuadVal(long v, long d_ = 1) : a(v), d(d_) {}

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    double to_double() const { return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d)); }
};

inline long check_same_d(const QuadVal& u, const QuadVal& v) {
    // A pure rational is comparable with any field element.
    if (u.is_rational() && u.d != v.d) return v.d;
    if (v.is_rational() && u.d != v.d) return u.d;
    if (u.d != v.d) throw mismatched_d(u.d, v.d);
    return u.d;
}

inline QuadVal operator+(const QuadVal& u, const QuadVal& v) {
    long d = check_same_d(u, v);
    return QuadVal(u.a + v.a, u.b + v.b, d);
}

inline QuadVal operator-(const QuadVal& u, const QuadVal& v) {
    long d = check_same_d(u, v);
    return QuadVal(u.a - v.a, u.b - v.b, d);
}

inline QuadVal operator-(const QuadVal& u) { return QuadVal(-u.a, -u.b, u.d); }

inline QuadVal operator*(const QuadVal& u, const QuadVal& v) {
    long d = check_same_d(u, v);
    return QuadVal(u.a * v.a + u.b * v.b * d, u.a * v.b + u.b * v.a, d);
}

inline QuadVal conj(const QuadVal& u) { return QuadVal(u.a, -u.b, u.d); }

inline QuadVal inverse(const QuadVal& u) {
    if (u.is_zero()) throw division_by_zero();
    // norm a^2 - b^2 d is nonzero for square-free d
    Rat n = u.a * u.a - u.b * u.b * u.d;
    if (n == 0) throw division_by_zero();
    return QuadVal(u.a / n, -u.b / n, u.d);
}

inline QuadVal operator/(const QuadVal& u, const QuadVal& v) {
    check_same_d(u, v);
    return u * inverse(v);
}

inline bool operator==(const QuadVal& u, const QuadVal& v) {
    if (u.is_rational() || v.is_rational()) return u.a == v.a && u.b == v.b;
    return u.d == v.d && u.a == v.a && u.b == v.b;
}
inline bool operator!=(const QuadVal& u, const QuadVal& v) { return !(u == v); }

// Exact sign of a + b*sqrt(d).
inline int sign(const QuadVal& u) {
    int sa = sgn(u.a), sb = sgn(u.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 vs b^2 d
    int cmp = sgn(u.a * u.a - u.b * u.b * u.d);
    // |a| > |b|sqrt(d) -> sign of a, otherwise sign of b sqrt(d)
    return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

inline bool operator<(const QuadVal& u, const QuadVal& v) { return sign(u - v) < 0; }
inline bool operator<=(const QuadVal& u, const QuadVal& v) { return sign(u - v) <= 0; }
inline bool operator>(const QuadVal& u, const QuadVal& v) { return sign(u - v) > 0; }
inline bool operator>=(const QuadVal& u, const QuadVal& v) { return sign(u - v) >= 0; }

inline std::string quadval_str(const QuadVal& u) {
    return rat_str(u.a) + " + " + rat_str(u.b) + "*sqrt(" + std::to_string(u.d) + ")";
}

namespace detail {

// Splits n > 0 as s^2 * f with f square-free, by trial division up to `bound`.
// Throws when a large non-square cofactor remains.
inline void squarefree_split(Int n, unsigned long bound, Int& s, Int& f) {
    s = 1;
    f = 1;
    for (unsigned long p = 2; p <= bound && Int(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) f *= p;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Int root;
            mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
            s *= root;
        } else if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
            f *= n;
        } else {
            // composite cofactor with all prime factors above the bound: its
            // square-free part cannot be certified without factoring it
            throw factorization_limit("cofactor " + n.get_str() + " exceeds the trial-division bound");
        }
    }
}

}  // namespace detail

inline constexpr unsigned long kDefaultFactorBound = 1'000'000;

// r > 0 as s^2 * d with d square-free. Input-normalization helper only; the
// dynamics never calls this.
inline std::pair<Rat, long> rat_sqrt_decompose(const Rat& r, unsigned long bound = kDefaultFactorBound) {
    if (sign(r) <= 0) throw input_error("rat_sqrt_decompose requires a positive rational");
    Int sn, dn, sm, dm;
    detail::squarefree_split(r.get_num(), bound, sn, dn);
    detail::squarefree_split(r.get_den(), bound, sm, dm);
    // n/m = (sn/(sm*dm))^2 * dn*dm; pull squared common primes out of dn*dm
    Int g = gcd(dn, dm);
    Int d = (dn / g) * (dm / g);
    Rat s = make_rat(sn * g, sm * dm);
    if (!d.fits_slong_p()) throw factorization_limit("square-free part " + d.get_str() + " does not fit a machine word");
    return {s, d.get_si()};
}

// "p/q + r/s*sqrt(d)", also accepts a bare rational.
inline QuadVal parse_quadval(const std::string& text) {
    auto star = text.find("*sqrt(");
    if (star == std::string::npos) return QuadVal(parse_rat(text));
    auto close = text.rfind(')');
    if (close == std::string::npos || close < star) throw input_error("cannot parse quadval '" + text + "'");
    std::string dpart = text.substr(star + 6, close - star - 6);
    long d;
    try {
        d = std::stol(dpart);
    } catch (const std::exception&) {
        throw input_error("cannot parse quadval '" + text + "'");
    }
    if (d < 1) throw input_error("d must be a positive integer in '" + text + "'");
    // split "a + b*sqrt(d)" / "a - b*sqrt(d)" at the spaced separator
    std::string head = text.substr(0, star);
    std::size_t cut = head.rfind(" + ");
    int bsign = 1;
    if (auto m = head.rfind(" - "); m != std::string::npos && (cut == std::string::npos || m > cut)) {
        cut = m;
        bsign = -1;
    }
    Rat a = 0, b;
    if (cut == std::string::npos) {
        b = parse_rat(head);
    } else {
        a = parse_rat(head.substr(0, cut));
        b = parse_rat(head.substr(cut + 3));
        if (bsign < 0) b = -b;
    }
    return QuadVal(a, b, d);
}

}  // namespace leb
