#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace freelip {

/// Exact rational scalar. All arithmetic in the library is exact; floating
/// point never appears on any computation path.
using Rational = boost::multiprecision::mpq_rational;

/// Renders in lowest terms, "p/q" or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Accepts "p", "p/q", optional leading sign on the numerator. Throws
/// ParseError on anything else (including zero denominators).
Rational parse_rational(std::string_view text);

inline Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

}  // namespace freelip
