#ifndef TEMPERLEY_RATIONAL_HPP
#define TEMPERLEY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace temperley {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Prints "p" for integers, "p/q" otherwise. Never scientific notation.
std::string rational_str(const Rational& r);

// Accepts "p", "p/q" and finite decimals like "0.25". Throws Error(ParseError).
Rational parse_rational(const std::string& s);

inline Int pow2(unsigned k) { return Int(1) << k; }

// True iff r is an integer.
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace temperley

#endif
