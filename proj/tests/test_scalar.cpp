#include <doctest.h>

#include "tricontact/scalar.hpp"

using tricontact::Rational;
using tricontact::float_tolerance;
using tricontact::scalar_ops;

TEST_CASE("rational arithmetic is exact") {
  Rational half(1, 2);
  Rational third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half - half == Rational(0));
  CHECK(half / third == Rational(3, 2));
  CHECK(-half == Rational(-1, 2));
  CHECK((half + third) + Rational(1, 6) == half + (third + Rational(1, 6)));
}

TEST_CASE("rational parsing") {
  CHECK(*Rational::parse("1/2") == Rational(1, 2));
  CHECK(*Rational::parse("-7/4") == Rational(-7, 4));
  CHECK(*Rational::parse("3") == Rational(3));
  CHECK(*Rational::parse("-12") == Rational(-12));
  CHECK(*Rational::parse("0.25") == Rational(1, 4));
  CHECK(*Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(*Rational::parse(" 2/3 ") == Rational(2, 3));
  CHECK(!Rational::parse("").has_value());
  CHECK(!Rational::parse("a/b").has_value());
  CHECK(!Rational::parse("1/0").has_value());
  CHECK(!Rational::parse("1.2.3").has_value());
}

TEST_CASE("rational printing round-trips") {
  for (const char* text : {"1/2", "-7/4", "3", "0", "-12", "1000000000000000000000/7"}) {
    Rational x = *Rational::parse(text);
    CHECK(*Rational::parse(x.str()) == x);
    CHECK(x.str() == text);
  }
}

TEST_CASE("float backend equality uses the session tolerance") {
  const double saved = float_tolerance();
  float_tolerance() = 1e-9;
  CHECK(scalar_ops<double>::equal(1.0, 1.0 + 1e-10));
  CHECK(!scalar_ops<double>::equal(1.0, 1.0 + 1e-8));
  CHECK(scalar_ops<double>::is_zero(5e-10));
  CHECK(!scalar_ops<double>::is_zero(5e-9));
  float_tolerance() = saved;
}

TEST_CASE("float parsing accepts fractions and decimals") {
  CHECK(*scalar_ops<double>::parse("1/2") == doctest::Approx(0.5));
  CHECK(*scalar_ops<double>::parse("-0.125") == doctest::Approx(-0.125));
  CHECK(*scalar_ops<double>::parse("2e-3") == doctest::Approx(0.002));
  CHECK(!scalar_ops<double>::parse("xyz").has_value());
}
