#include <limits>

#include "doctest.h"
#include "optnet/rational.hpp"

using namespace optnet;

TEST_CASE("parse_decimal handles integers, fractions and exponents") {
  CHECK(parse_decimal("3") == Rat(3));
  CHECK(parse_decimal("-3") == Rat(-3));
  CHECK(parse_decimal("0.5") == Rat(1, 2));
  CHECK(parse_decimal("2.75") == Rat(11, 4));
  CHECK(parse_decimal("-0.125") == Rat(-1, 8));
  CHECK(parse_decimal("1e3") == Rat(1000));
  CHECK(parse_decimal("2.5e-2") == Rat(1, 40));
  CHECK(parse_decimal("+4.0") == Rat(4));
}

TEST_CASE("parse_decimal rejects malformed input") {
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("1e"), std::invalid_argument);
}

TEST_CASE("rat_from_double is an exact lift of binary fractions") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(-3.0) == Rat(-3));
  CHECK(rat_from_double(0.1) != Rat(1, 10));  // 0.1 is not a binary fraction
  // Round trip: the lift converts back to the identical double.
  for (double x : {0.1, 1.0 / 3.0, 123.456, -9.875e-3, 7.25}) CHECK(to_double(rat_from_double(x)) == x);
  CHECK_THROWS_AS(rat_from_double(std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_double(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
}

TEST_CASE("rat_to_string prints exact values") {
  CHECK(rat_to_string(Rat(3, 2)) == "3/2");
  CHECK(rat_to_string(Rat(4)) == "4");
}
