#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace winf {

using Rational = mpq_class;
using Integer = mpz_class;

/// a/b in lowest terms; mpq_class(a, b) alone is not reduced and then compares unequal.
inline Rational ratio(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

inline std::string to_string(const Integer& z) {
    return z.get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if(s.empty() || r.set_str(s, 10) != 0) {
        throw invalid_input("malformed rational: '" + s + "'");
    }
    if(r.get_den() == 0) {
        throw invalid_input("zero denominator: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational pow(const Rational& base, int e) {
    Rational r = 1;
    Rational b = (e >= 0) ? base : Rational(1) / base;
    for(int i = 0; i < (e >= 0 ? e : -e); ++i) {
        r *= b;
    }
    return r;
}

} // namespace winf
