#include <gtest/gtest.h>

#include "altcat/exact/combinatorics.hpp"
#include "altcat/exact/mpoly.hpp"
#include "altcat/exact/poly.hpp"
#include "altcat/exact/quadratic.hpp"
#include "altcat/exact/rational.hpp"
#include "altcat/exact/series.hpp"

using namespace altcat;

TEST(Rational, MakeNormalises) {
  EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(to_string(parse_rational("5/10")), "1/2");
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, SquareRoots) {
  EXPECT_EQ(rational_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-4)).has_value());
  EXPECT_EQ(integer_root(Integer(1000), 3), 10);
  EXPECT_EQ(integer_root(Integer(999), 3), 9);
}

TEST(Rational, RootDecimalTruncates) {
  EXPECT_EQ(root_decimal(Integer(2), 2, 6), "1.414213");
  EXPECT_EQ(root_decimal(Integer(512), 5, 6), "3.482202");
  EXPECT_EQ(root_decimal(Integer(0), 3, 2), "0.00");
}

TEST(Quadratic, FieldRejectsSquares) {
  EXPECT_THROW(QuadField::make(Rational(4)), std::invalid_argument);
  EXPECT_THROW(QuadField::make(Rational(0)), std::invalid_argument);
  EXPECT_NO_THROW(QuadField::make(Rational(-3)));
}

TEST(Quadratic, Arithmetic) {
  const auto field = QuadField::make(Rational(3));
  const QuadScalar s = QuadScalar::generator(field);
  EXPECT_EQ(s * s, QuadScalar(3));
  const QuadScalar x(Rational(1), Rational(2), field);
  EXPECT_EQ(x.norm(), Rational(1 - 12));
  EXPECT_EQ(x * x.inverse(), QuadScalar(1));
  EXPECT_EQ((x + QuadScalar(1)) - x, QuadScalar(1));
  EXPECT_THROW(QuadScalar(0).inverse(), std::domain_error);
}

TEST(Quadratic, MixingFieldsThrows) {
  const QuadScalar a = QuadScalar::generator(QuadField::make(Rational(2)));
  const QuadScalar b = QuadScalar::generator(QuadField::make(Rational(3)));
  EXPECT_THROW(a + b, std::domain_error);
  EXPECT_THROW(a * b, std::domain_error);
}

TEST(Quadratic, SqrtInField) {
  const auto field = QuadField::make(Rational(3));
  const QuadScalar third(Rational(1, 3), Rational(0), field);
  const auto root = sqrt_in_field(third);
  ASSERT_TRUE(root.has_value());
  EXPECT_EQ(*root * *root, third);
  const QuadScalar y(Rational(7), Rational(4), field);  // (2 + sqrt3)^2
  const auto r2 = sqrt_in_field(y);
  ASSERT_TRUE(r2.has_value());
  EXPECT_EQ(*r2 * *r2, y);
  EXPECT_FALSE(sqrt_in_field(QuadScalar(Rational(2), Rational(0), field)).has_value());
}

TEST(Poly, DivmodAndGcd) {
  const RatPoly t = RatPoly::variable();
  const RatPoly a = (t - RatPoly::constant(1)) * (t + RatPoly::constant(2));
  const RatPoly b = (t - RatPoly::constant(1)) * (t - RatPoly::constant(5));
  EXPECT_EQ(gcd(a, b), t - RatPoly::constant(1));
  const auto [q, r] = divmod(a, t - RatPoly::constant(1));
  EXPECT_EQ(q, t + RatPoly::constant(2));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divmod(a, RatPoly()), std::domain_error);
}

TEST(Poly, SquarefreeDecomposition) {
  const RatPoly t = RatPoly::variable();
  const RatPoly p = RatPoly::constant(3) * pow(t, 2) * pow(t - RatPoly::constant(2), 2) * (t + RatPoly::constant(7));
  const auto parts = squarefree_decomposition(p);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0].multiplicity, 1U);
  EXPECT_EQ(parts[0].factor, t + RatPoly::constant(7));
  EXPECT_EQ(parts[1].multiplicity, 2U);
  EXPECT_EQ(parts[1].factor, t * (t - RatPoly::constant(2)));
  EXPECT_EQ(root_multiplicity(p, Rational(2)), 2U);
  EXPECT_EQ(root_multiplicity(p, Rational(1)), 0U);
}

TEST(Poly, Discriminant) {
  const RatPoly q({Rational(3), Rational(-7), Rational(4)});
  EXPECT_EQ(discriminant(q), Rational(49 - 48));
  EXPECT_THROW(discriminant(RatPoly::variable()), std::invalid_argument);
}

TEST(Poly, ComposeAndDerivative) {
  const RatPoly t = RatPoly::variable();
  const RatPoly p = pow(t, 3) - t;
  EXPECT_EQ(derivative(p), RatPoly::constant(3) * pow(t, 2) - RatPoly::constant(1));
  EXPECT_EQ(compose(p, t + RatPoly::constant(1)), pow(t + RatPoly::constant(1), 3) - t - RatPoly::constant(1));
}

// Multiplicative formula as the oracle for the library binomial.
TEST(Combinatorics, BinomialMatchesProductFormula) {
  for (unsigned n = 0; n <= 40; ++n) {
    Rational product = 1;
    for (unsigned k = 0; k <= n; ++k) {
      EXPECT_EQ(Rational(binom_int(n, k)), product) << n << " choose " << k;
      product = product * Rational(n - k) / Rational(k + 1);
    }
  }
}

TEST(Combinatorics, GeneralisedBinomial) {
  EXPECT_EQ(binom_gen(Rational(1, 2), 0), Rational(1));
  EXPECT_EQ(binom_gen(Rational(1, 2), 1), Rational(1, 2));
  EXPECT_EQ(binom_gen(Rational(1, 2), 2), Rational(-1, 8));
  EXPECT_EQ(binom_gen(Rational(5), 7), Rational(0));
}

TEST(Combinatorics, CatalanNumbers) {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (unsigned n = 0; n < 10; ++n) EXPECT_EQ(catalan(n), expected[n]);
  EXPECT_EQ(ipow(-2, 5), -32);
}

TEST(Series, InverseOfOneMinusW) {
  const Series f({Rational(1), Rational(-1)}, 10);
  const Series g = inverse(f);
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(g.coeff(k), 1);
  EXPECT_THROW(inverse(Series::zero(3)), std::domain_error);
}

TEST(Series, SqrtSquaresBack) {
  const Series f({Rational(1), Rational(4), Rational(-3)}, 12);
  const Series s = series_sqrt(f);
  EXPECT_EQ(s * s, f);
  EXPECT_THROW(series_sqrt(Series::constant(Rational(2), 3)), std::domain_error);
}

TEST(Series, OrderBookkeeping) {
  const Series a = Series::variable(5);
  EXPECT_EQ(a.shift(2).order(), 7U);
  EXPECT_EQ(a.derivative().order(), 4U);
  EXPECT_THROW(a.coeff(6), std::out_of_range);
  EXPECT_EQ((a * Series::variable(3)).order(), 3U);
}

// u = w / (1 - u) counts binary trees: coefficients are Catalan numbers.
TEST(Series, LagrangeInversionGivesCatalan) {
  const Series phi = inverse(Series({Rational(1), Rational(-1)}, 20));
  const Series u = lagrange_invert(phi, 20);
  for (unsigned n = 1; n <= 20; ++n) EXPECT_EQ(u.coeff(n), Rational(catalan(n - 1))) << n;
}

TEST(MPoly, DiscriminantInVariable) {
  const MPoly t = MPoly::variable(2, 0);
  const MPoly b = MPoly::variable(2, 1);
  const MPoly p = t * t - b * t + MPoly::constant(2, 1);
  EXPECT_EQ(discriminant_in(p, 0), b * b - MPoly::constant(2, 4));
  EXPECT_THROW(discriminant_in(t, 0), std::invalid_argument);
}

TEST(MPoly, SubstituteAndPartial) {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly p = pow(x, 3) * y + x;
  EXPECT_EQ(p.partial(0), MPoly::constant(2, 3) * pow(x, 2) * y + MPoly::constant(2, 1));
  EXPECT_EQ(p.substitute(1, x), pow(x, 4) + x);
  EXPECT_EQ(p.total_degree(), 4U);
  EXPECT_EQ(p.degree_in(1), 1U);
}
