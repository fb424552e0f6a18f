#include <gtest/gtest.h>

#include <limits>

#include "oracle.hpp"
#include "rbsym/polynomial.hpp"
#include "rbsym/rational.hpp"

using namespace rbsym;

TEST(Rational, NormalForm) {
  const Rational a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(4, 2).fraction_string(), "2/1");
  EXPECT_EQ(Rational(0, -7).fraction_string(), "0/1");
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(Rational, Arithmetic) {
  const Rational h(1, 2);
  const Rational t(1, 3);
  EXPECT_EQ(h + t, Rational(5, 6));
  EXPECT_EQ(h - t, Rational(1, 6));
  EXPECT_EQ(h * t, Rational(1, 6));
  EXPECT_EQ(h / t, Rational(3, 2));
  EXPECT_EQ(-h, Rational(-1, 2));
  EXPECT_TRUE(t < h);
  EXPECT_THROW((void)(h / Rational(0)), InvalidArgument);
  EXPECT_THROW((void)Rational(1, 2).to_integer(), Error);
  EXPECT_EQ(Rational(10, 5).to_integer(), 2);
}

TEST(Rational, OverflowIsDetected) {
  const Rational big(std::numeric_limits<Integer>::max());
  Rational acc = big;
  EXPECT_THROW(
      {
        for (int i = 0; i < 4; ++i) acc = acc * big;
      },
      OverflowError);
  EXPECT_THROW((void)Rational(big * big).to_integer(), OverflowError);
}

TEST(Checked, OverflowIsDetected) {
  EXPECT_THROW((void)checked::add(std::numeric_limits<Integer>::max(), Integer{1}), OverflowError);
  EXPECT_THROW((void)checked::mul(std::numeric_limits<Integer>::max(), Integer{2}), OverflowError);
  EXPECT_EQ(checked::factorial(20), 2432902008176640000);
  EXPECT_THROW((void)checked::factorial(21), OverflowError);
}

TEST(Polynomial, RenderingAndDegree) {
  EXPECT_EQ(Polynomial{}.to_string(), "0");
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_EQ((Polynomial{0, 0, 1}).to_string(), "m^2");
  EXPECT_EQ((Polynomial{0, 2, -3, 1}).to_string(), "m^3 - 3m^2 + 2m");
  EXPECT_EQ((Polynomial{-1, 0, -1}).to_string(), "-m^2 - 1");
  EXPECT_EQ((Polynomial{0, 0, 0}).degree(), -1);
  EXPECT_EQ(Polynomial(std::vector<Rational>{Rational(0), Rational(1, 2)}).to_string(), "(1/2)m");
}

TEST(Polynomial, RingOperations) {
  const Polynomial a{1, 1};
  const Polynomial b{-1, 1};
  EXPECT_EQ(a * b, (Polynomial{-1, 0, 1}));
  EXPECT_EQ(a + b, (Polynomial{0, 2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.negate_variable(), (Polynomial{1, -1}));
  EXPECT_EQ((Polynomial{0, 0, 0, 5}).negate_variable(), (Polynomial{0, 0, 0, -5}));
}

TEST(Polynomial, Evaluation) {
  const Polynomial p{3, 0, 2};
  EXPECT_EQ(p.evaluate_integer(-2), 11);
  EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(7, 2));
  EXPECT_EQ(Polynomial{}.evaluate_integer(9), 0);
}

TEST(Polynomial, FactorialBases) {
  for (int k = 0; k <= 8; ++k) {
    for (Integer m = -6; m <= 10; ++m) {
      Integer rise = 1;
      Integer fall = 1;
      for (int i = 0; i < k; ++i) {
        rise *= m + i;
        fall *= m - i;
      }
      EXPECT_EQ(rising_factorial(k).evaluate_integer(m), rise);
      EXPECT_EQ(falling_factorial(k).evaluate_integer(m), fall);
      EXPECT_EQ(binomial_polynomial(k).evaluate_integer(m), oracle::binom(m, k));
    }
  }
  EXPECT_EQ(rising_factorial(0), Polynomial{1});
}

TEST(Polynomial, IntegerCoefficients) {
  EXPECT_EQ((Polynomial{4, -2}).integer_coefficients(), (std::vector<Integer>{4, -2}));
  EXPECT_FALSE(binomial_polynomial(2).is_integral());
  EXPECT_THROW((void)binomial_polynomial(2).integer_coefficients(), Error);
}
