#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace sysstruct {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar with unbounded integer precision. Always kept in
/// lowest terms with positive denominator by the underlying type.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a" or "a/b" with optional leading sign. Anything else (floats,
/// whitespace, empty input) is a parse_error; b = 0 is a zero_denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "-89/6", "3", "0". parse_rational round-trips it.
std::string to_string(const Rational& q);

}  // namespace sysstruct
