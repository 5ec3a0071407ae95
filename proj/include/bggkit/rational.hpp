#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace bggkit {

/// Arbitrary-precision integer. Expression templates are disabled so that the
/// type behaves as a plain value inside Eigen containers.
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Exact rational, always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Builds num/den in canonical form. Throws InputError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (q != 0). Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

/// Returns the numerator of an integral rational; throws InvariantViolation otherwise.
Integer to_integer(const Rational& value);

/// Generalized binomial coefficient m(m-1)...(m-k+1)/k! for any integer m and
/// k >= 0; zero for k < 0.
Integer binomial(const Integer& m, std::int64_t k);

}  // namespace bggkit
