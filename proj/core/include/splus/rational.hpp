// Exact scalar mode: arbitrary-precision rationals via boost::multiprecision.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace splus {

using Rational = boost::multiprecision::cpp_rational;

// Parses "7", "-3/4", "0.25" into an exact rational. Throws
// std::invalid_argument on anything else (including "1/0").
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);
inline double to_double(double x) { return x; }

std::string to_string(const Rational& q);

}  // namespace splus
