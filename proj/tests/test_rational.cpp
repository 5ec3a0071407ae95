#include <doctest.h>

#include "bggkit/error.hpp"
#include "bggkit/rational.hpp"
#include "oracles.hpp"

using namespace bggkit;

TEST_CASE("rationals are stored in lowest terms") {
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK(to_string(parse_rational("4/-8")) == "-1/2");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(parse_rational("0/7") == 0);
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1/0", "1/", "/2", "a", "1.5", " 1", "1 /2", "--1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), InputError);
  }
  CHECK_THROWS_AS(make_rational(1, 0), InputError);
}

TEST_CASE("integrality and conversion") {
  CHECK(is_integral(parse_rational("8/4")));
  CHECK_FALSE(is_integral(parse_rational("1/3")));
  CHECK(to_integer(parse_rational("-12/3")) == -4);
  CHECK_THROWS_AS(to_integer(parse_rational("1/2")), InvariantViolation);
}

TEST_CASE("binomial matches Pascal's triangle and the negative-upper identity") {
  for (std::int64_t m = 0; m <= 20; ++m) {
    for (std::int64_t k = -2; k <= 22; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(binomial(Integer(m), k) == oracle::pascal(m, k));
      if (k >= 0) {
        // C(-m, k) = (-1)^k C(m + k - 1, k)
        const Integer expected = oracle::pascal(m + k - 1, k) * (k % 2 ? -1 : 1);
        if (m > 0) CHECK(binomial(Integer(-m), k) == expected);
      }
    }
  }
  CHECK(binomial(Integer(0), 0) == 1);
}
