#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wbs {

// Arbitrary-precision integer used for coefficients and elimination.
using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. boost keeps the canonical form we rely on:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Parses "a" or "a/b" in base 10. Throws on empty or zero denominator.
inline Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
    std::string out = rat_num(q).str();
    if (rat_den(q) != 1) out += "/" + rat_den(q).str();
    return out;
}

}  // namespace wbs
