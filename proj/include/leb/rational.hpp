#pragma once

#include <gmpxx.h>

#include <string>

#include "leb/errors.hpp"

namespace leb {

// Exact rational, always in lowest terms with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw division_by_zero();
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline int sign(const Rat& r) { return sgn(r); }

// "p" or "p/q"
inline Rat parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) throw input_error("cannot parse rational '" + text + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Exact rational from a decimal literal like "-12.345" or "0.5e-3".
inline Rat rat_from_decimal(const std::string& text) {
    std::string mantissa = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mantissa = text.substr(0, e);
        try {
            exp10 = std::stol(text.substr(e + 1));
        } catch (const std::exception&) {
            throw input_error("cannot parse decimal '" + text + "'");
        }
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) throw input_error("cannot parse decimal '" + text + "'");
            seen_point = true;
        } else {
            digits += c;
            if (seen_point && c != '-' && c != '+') ++frac_digits;
        }
    }
    if (digits.empty() || digits == "-" || digits == "+") throw input_error("cannot parse decimal '" + text + "'");
    Int num;
    if (num.set_str(digits, 10) != 0) throw input_error("cannot parse decimal '" + text + "'");
    Rat r(num);
    long shift = exp10 - frac_digits;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        r *= Rat(pow10);
    else
        r /= Rat(pow10);
    r.canonicalize();
    return r;
}

}  // namespace leb
