#include "kfloer/errors.hpp"
#include "kfloer/rational.hpp"

#include <doctest.h>

#include <random>

using kfloer::ExtendedRational;
using kfloer::Rational;

TEST_CASE("rational normalizes sign and common factors") {
  const Rational r(kfloer::BigInt(6), kfloer::BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(4).fraction_str() == "4/1");
  CHECK(Rational(0).fraction_str() == "0/1");
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("14/5") == Rational(14) / 5);
  CHECK(Rational::parse("-2/6") == Rational(-1) / 3);
  CHECK(Rational::parse("7") == 7);
  CHECK_THROWS_AS(Rational::parse("1/0"), kfloer::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), kfloer::ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), kfloer::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), kfloer::ParseError);
  CHECK_THROWS_AS(Rational(1) / 0, kfloer::DomainError);
}

TEST_CASE("floor and ceil round toward the correct side") {
  CHECK(Rational::parse("7/2").floor() == 3);
  CHECK(Rational::parse("7/2").ceil() == 4);
  CHECK(Rational::parse("-7/2").floor() == -4);
  CHECK(Rational::parse("-7/2").ceil() == -3);
  CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int k = 0; k < 300; ++k) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == 0);
    if (b != 0) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.fraction_str()) == a);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("large values stay exact") {
  Rational x(1);
  for (int k = 0; k < 40; ++k) x = x * Rational(1000000007) / 3;
  for (int k = 0; k < 40; ++k) x = x * 3 / Rational(1000000007);
  CHECK(x == 1);
}

TEST_CASE("extended rationals order the infinities outside") {
  const auto lo = ExtendedRational::neg_inf();
  const auto hi = ExtendedRational::pos_inf();
  CHECK(lo < ExtendedRational(-1000000));
  CHECK(ExtendedRational(1000000) < hi);
  CHECK(lo < hi);
  CHECK(hi == ExtendedRational::pos_inf());
  CHECK(hi.str() == "+inf");
  CHECK(lo.str() == "-inf");
  CHECK_THROWS_AS(hi.value(), kfloer::DomainError);
  CHECK(ExtendedRational(Rational(3) / 4).fraction_str() == "3/4");
}
