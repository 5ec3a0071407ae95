#include "bggkit/rational.hpp"

#include <cctype>

#include "bggkit/error.hpp"

namespace bggkit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw InputError("not an integer literal: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  // The two-argument constructor canonicalizes (sign on numerator, gcd removed).
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

std::string to_string(const Rational& value) {
  if (is_integral(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string to_string(const Integer& value) { return value.str(); }

Integer to_integer(const Rational& value) {
  if (!is_integral(value)) {
    throw InvariantViolation("expected an integer, got " + to_string(value));
  }
  return boost::multiprecision::numerator(value);
}

Integer binomial(const Integer& m, std::int64_t k) {
  if (k < 0) return Integer(0);
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= m - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace bggkit
