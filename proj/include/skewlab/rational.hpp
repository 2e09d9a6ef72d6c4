#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace skewlab {

// Exact arithmetic kind. Identities that are rational (indicator convolutions,
// even-p norm powers, inner products, counting formulas) are evaluated in this
// type with zero tolerance; everything else uses doubles.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rat_pow(const Rational& base, int e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rational acc(1);
    Rational b = base;
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Serialized form is "p/q" (or "p" when q == 1).
inline std::string rat_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
    return Rational(num, den);
}

// 2^-d as an exact rational, d >= 0.
inline Rational pow2_neg(int d) {
    if (d < 0) throw std::invalid_argument("pow2_neg: d < 0");
    return Rational(BigInt(1), BigInt(1) << d);
}

}  // namespace skewlab
