#include <doctest.h>

#include <random>

#include "tlwb/errors.hpp"
#include "tlwb/rational.hpp"

using tlwb::Rational;

TEST_CASE("rational construction normalizes to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(5).str() == "5/1");
  CHECK_THROWS_AS(Rational(1, 0), tlwb::DomainError);
}

TEST_CASE("rational parsing accepts integers, fractions and decimals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("-1/4") == Rational(-1, 4));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("3.0") == Rational(3));
  CHECK_THROWS_AS(Rational::parse(""), tlwb::ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), tlwb::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), tlwb::ParseError);
  CHECK_THROWS_AS(Rational::parse("1//2"), tlwb::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), tlwb::ParseError);
  CHECK_THROWS_AS(Rational::parse("1 /2"), tlwb::ParseError);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(7, 2) == Rational(23, 6));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), tlwb::DomainError);
  CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("rational comparisons order by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(3, 2) > Rational(1));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("rational floor and ceiling") {
  CHECK(Rational(7, 2).floor_ll() == 3);
  CHECK(Rational(7, 2).ceil_ll() == 4);
  CHECK(Rational(-7, 2).floor_ll() == -4);
  CHECK(Rational(-7, 2).ceil_ll() == -3);
  CHECK(Rational(4).floor_ll() == 4);
  CHECK(Rational(4).ceil_ll() == 4);
  CHECK(Rational(3).is_integer());
  CHECK(!Rational(3, 2).is_integer());
}

TEST_CASE("rational str/parse round-trips on random values") {
  std::mt19937_64 rng(20240816);
  std::uniform_int_distribution<long long> num(-10000, 10000);
  std::uniform_int_distribution<long long> den(1, 9999);
  for (int i = 0; i < 2000; ++i) {
    Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("rational survives denominators beyond 64-bit products") {
  // (2n+2)^8 for n = 4 is 10^8; chained sums keep exactness regardless.
  Rational tiny(1, 100000000);
  Rational acc(0);
  for (int i = 0; i < 7; ++i) acc += tiny * tiny;
  CHECK(acc == Rational(7) * tiny * tiny);
  CHECK(acc.str() == "7/10000000000000000");
}
