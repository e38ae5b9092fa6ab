#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace icosal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always held reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "sign? digits" or "sign? digits / digits" (no whitespace), e.g. "-3/4".
/// Throws std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: "num" when the denominator is 1, else "num/den".
std::string rational_str(const Rational& value);

double rational_to_double(const Rational& value);

} // namespace icosal
