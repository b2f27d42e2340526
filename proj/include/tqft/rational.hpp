#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tqft {

// Exact arithmetic used by the state-sum and counting modules.  Values there
// are integers and |G|-power denominators, so overflow-free bignum rationals
// turn every triangulation-invariance assertion into exact equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, int exp) {
    if (exp >= 0)
        return Rational(big_pow(numerator(base), unsigned(exp)),
                        big_pow(denominator(base), unsigned(exp)));
    return Rational(big_pow(denominator(base), unsigned(-exp)),
                    big_pow(numerator(base), unsigned(-exp)));
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace tqft
