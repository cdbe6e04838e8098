#include <doctest.h>

#include "flagcert/rational.hpp"

using namespace flagcert;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("1/3") == rat(1, 3));
  CHECK(parse_rat("-2/6") == rat(-1, 3));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat(" 12/125 ") == rat(12, 125));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK(rat_str(rat(12, 125)) == "12/125");
  CHECK(rat_str(Rat(-3)) == "-3");
}

TEST_CASE("decimal rendering: exact when terminating") {
  CHECK(decimal_string(rat(1, 32)) == "0.03125");
  CHECK(decimal_string(rat(1, 2)) == "0.5");
  CHECK(decimal_string(Rat(0)) == "0");
  CHECK(decimal_string(Rat(-7)) == "-7");
  CHECK(decimal_string(rat(-3, 40)) == "-0.075");
  CHECK(decimal_string(rat(12, 125)) == "0.096");
  CHECK(decimal_string(rat(1, 1000000)) == "0.000001");
}

TEST_CASE("decimal rendering: 17 significant digits otherwise") {
  CHECK(decimal_string(rat(1, 3)) == "0.33333333333333333");
  CHECK(decimal_string(rat(2, 3)) == "0.66666666666666667");
  CHECK(decimal_string(rat(80, 4877)) == "0.016403526758253024");
  CHECK(decimal_string(rat(-1, 7)) == "-0.14285714285714286");
  CHECK(decimal_string(rat(100, 3)) == "33.333333333333333");
}

TEST_CASE("decimal literals read back exactly") {
  CHECK(rat_from_decimal("0.5") == rat(1, 2));
  CHECK(rat_from_decimal("-0.125e2") == rat(-25, 2));
  CHECK(rat_from_decimal("3.124999e-02") == rat(3124999, 100000000));
  CHECK(rat_from_decimal("17") == Rat(17));
  CHECK_THROWS_AS(rat_from_decimal("1.2.3"), std::invalid_argument);
}

TEST_CASE("best rational approximation") {
  CHECK(best_rational(0.33333333, 100) == rat(1, 3));
  CHECK(best_rational(0.5, 10) == rat(1, 2));
  CHECK(best_rational(0.03125, 10000) == rat(1, 32));
  CHECK(best_rational(3.14159265358979, 100) == rat(311, 99));
  CHECK(best_rational(-0.33333333, 100) == rat(-1, 3));
  SUBCASE("cap 1 is integer rounding") {
    CHECK(best_rational(2.7, 1) == Rat(3));
    CHECK(best_rational(2.2, 1) == Rat(2));
    CHECK(best_rational(-2.7, 1) == Rat(-3));
  }
}

TEST_CASE("rref and nullspace") {
  RatMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  CHECK(rank(m) == 1);
  auto kernel = nullspace(m);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) {
    Rat dot(0);
    for (int c = 0; c < 3; ++c) dot += m.at(0, c) * v[c];
    CHECK(sgn(dot) == 0);
  }
}

TEST_CASE("determinant") {
  RatMatrix m(2, 2);
  m.at(0, 0) = rat(32, 192);
  m.at(0, 1) = rat(-43, 192);
  m.at(1, 0) = rat(-43, 192);
  m.at(1, 1) = rat(58, 192);
  CHECK(determinant(m) == rat(7, 36864));  // (32*58 - 43^2) / 192^2
}
