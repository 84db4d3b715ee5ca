#include "freelip/rational.hpp"

#include <cctype>

#include "freelip/errors.hpp"

namespace freelip {

std::string format_rational(const Rational& value) {
  return value.str();  // GMP keeps canonical form: lowest terms, "p" or "p/q"
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }

  boost::multiprecision::mpz_int n{std::string(num)};
  boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) {
    throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  }
  Rational value(n, d);  // canonicalized on construction
  return negative ? Rational(-value) : value;
}

}  // namespace freelip
