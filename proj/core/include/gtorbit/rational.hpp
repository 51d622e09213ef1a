#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gtorbit {

using Rational = boost::multiprecision::cpp_rational;

/// Renders q canonically as "p" (denominator 1) or "p/q" with q > 0.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

} // namespace gtorbit
