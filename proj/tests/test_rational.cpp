#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pentad/rational.hpp"

using pentad::ParseError;
using pentad::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
  Rational r(4, -8);
  CHECK(r.numerator() == -1);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("exact field arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 8) * Rational(8) == Rational(1));
  CHECK(Rational(1) / Rational(1, 8) == Rational(8));
  CHECK(-Rational(3, 4) == Rational(-3, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), pentad::ArithmeticError);
  CHECK_THROWS_AS(Rational(1, 0), pentad::ArithmeticError);
}

TEST_CASE("(a/b)+(c/d) = (ad+bc)/bd on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int t = 0; t < 300; ++t) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    CHECK(Rational(a, b) + Rational(c, d) == Rational(a * d + c * b, b * d));
  }
}

TEST_CASE("string round trip") {
  CHECK(Rational(1, 8).str() == "1/8");
  CHECK(Rational(-2).str() == "-2");
  CHECK(Rational(0).str() == "0");
  CHECK(pentad::parse_rational("1/8") == Rational(1, 8));
  CHECK(pentad::parse_rational("-2") == Rational(-2));
  CHECK(pentad::parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(pentad::parse_rational(""), ParseError);
  CHECK_THROWS_AS(pentad::parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(pentad::parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(pentad::parse_rational("a"), ParseError);
  CHECK_THROWS_AS(pentad::parse_rational("1.5"), ParseError);
}

TEST_CASE("arbitrary precision survives large products") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007L);
  Rational inv = Rational(1) / big;
  CHECK(big * inv == Rational(1));
  CHECK(big.denominator() == 1);
}
