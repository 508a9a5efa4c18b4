#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "qcurves/rational.hpp"

using qcurves::Integer;
using qcurves::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  for (;;) {
    Rational r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

}  // namespace

TEST(Rational, StoredInLowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(0, -7).denominator(), 1);
}

TEST(Rational, ZeroDenominatorAndZeroInverseThrow) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(3) / Rational(0), std::domain_error);
}

TEST(Rational, TextRoundTrip) {
  for (const char* s : {"0", "5", "-5", "3/7", "-22/3"}) EXPECT_EQ(Rational::parse(s).to_string(), s);
  EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  for (const char* bad : {"", "x", "1/", "/2", "1.5", "1/2/3"}) EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, LargeValuesStayExact) {
  Rational r(1);
  for (int i = 0; i < 40; ++i) r *= Rational(1'000'000'007L);
  EXPECT_FALSE(r.numerator().fits_slong_p());
  for (int i = 0; i < 40; ++i) r /= Rational(1'000'000'007L);
  EXPECT_EQ(r, Rational(1));
  EXPECT_THROW(Rational(Integer("123456789012345678901234567890"), Integer(1)).to_long(), std::domain_error);
}

TEST(RationalProperty, AdditiveAndMultiplicativeRoundTrips) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng, true);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a * b.inverse() * b, a);
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
    EXPECT_GT(a.denominator(), 0);
  }
}

TEST(RationalProperty, OrderingIsConsistentWithSubtraction) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    EXPECT_EQ(a < b, (a - b).sign() < 0);
    EXPECT_EQ(a == b, (a - b).is_zero());
  }
}
