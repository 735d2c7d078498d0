#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace laq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rational>;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// "a/b" with b > 0, or plain "a" when b == 1
std::string to_string(const Rational& r);

// accepts "a", "-a", "a/b"; throws ParseError on anything else (including b == 0)
Rational parse_rational(const std::string& text);

}  // namespace laq
