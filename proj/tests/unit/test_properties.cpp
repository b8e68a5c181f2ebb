#include <gtest/gtest.h>

#include <random>

#include "altcat/covers/rational_map.hpp"
#include "altcat/covers/weierstrass.hpp"
#include "altcat/exact/poly.hpp"
#include "altcat/exact/quadratic.hpp"
#include "altcat/exact/series.hpp"
#include "altcat/schubert/schubert.hpp"

using namespace altcat;

namespace {

constexpr int kTrials = 60;

Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return make_rational(num(rng), den(rng));
}

RatPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational(rng);
  return RatPoly(c);
}

schubert::SchubertVector random_class(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<unsigned> part(0, n - 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  schubert::SchubertVector v(n);
  for (int i = 0; i < 3; ++i) {
    unsigned a = part(rng), b = part(rng);
    if (a < b) std::swap(a, b);
    v.add_term({a, b}, coeff(rng));
  }
  return v;
}

covers::WeierExpr random_weier(std::mt19937& rng) {
  using W = covers::WeierExpr;
  const W gens[] = {W::P(), W::D(), W::E1(), W::E2()};
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(1, 3);
  W acc(random_rational(rng));
  for (int i = len(rng); i > 0; --i) acc = acc * gens[pick(rng)] + W(random_rational(rng));
  return acc;
}

}  // namespace

TEST(Property, QuadraticSqrtRoundTrip) {
  std::mt19937 rng(11);
  for (long d : {2L, 3L, -3L, 5L, -7L}) {
    const auto field = QuadField::make(Rational(d));
    for (int i = 0; i < kTrials; ++i) {
      const QuadScalar x(random_rational(rng), random_rational(rng), field);
      const QuadScalar sq = x * x;
      const auto root = sqrt_in_field(sq);
      ASSERT_TRUE(root.has_value()) << to_string(sq);
      EXPECT_TRUE(*root == x || *root == -x) << to_string(x);
    }
  }
}

TEST(Property, QuadraticFieldAxioms) {
  std::mt19937 rng(12);
  const auto field = QuadField::make(Rational(-3));
  for (int i = 0; i < kTrials; ++i) {
    const QuadScalar a(random_rational(rng), random_rational(rng), field);
    const QuadScalar b(random_rational(rng), random_rational(rng), field);
    const QuadScalar c(random_rational(rng), random_rational(rng), field);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), QuadScalar(1));
  }
}

TEST(Property, PolyDivisionIdentity) {
  std::mt19937 rng(13);
  for (int i = 0; i < kTrials; ++i) {
    const RatPoly a = random_poly(rng, 6);
    const RatPoly b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    if (!r.is_zero()) EXPECT_LT(*r.degree(), *b.degree());
    const RatPoly g = gcd(a, b);
    if (!g.is_zero()) {
      EXPECT_TRUE(divmod(a, g).second.is_zero());
      EXPECT_TRUE(divmod(b, g).second.is_zero());
    }
  }
}

TEST(Property, SquarefreeReassembles) {
  std::mt19937 rng(14);
  for (int i = 0; i < kTrials; ++i) {
    RatPoly p = RatPoly::constant(1);
    std::uniform_int_distribution<int> root(-4, 4);
    std::uniform_int_distribution<unsigned> mult(1, 3);
    for (int j = 0; j < 3; ++j) p = p * pow(RatPoly::linear(Rational(root(rng))), mult(rng));
    RatPoly rebuilt = RatPoly::constant(1);
    for (const auto& [factor, m] : squarefree_decomposition(p)) rebuilt = rebuilt * pow(factor, m);
    EXPECT_EQ(rebuilt, monic(p));
  }
}

TEST(Property, SeriesInverseAndCompose) {
  std::mt19937 rng(15);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c(9);
    for (auto& x : c) x = random_rational(rng);
    if (sgn(c[0]) == 0) c[0] = 1;
    const Series f(c, 8);
    EXPECT_EQ(f * inverse(f), Series::constant(Rational(1), 8));
    c[0] = 0;
    const Series g(c, 8);
    // (f o g) with f = 1 + w is 1 + g.
    EXPECT_EQ(compose(Series({Rational(1), Rational(1)}, 8), g), Series::constant(Rational(1), 8) + g);
  }
}

TEST(Property, SchubertRingAxioms) {
  std::mt19937 rng(16);
  for (unsigned n : {4U, 5U, 6U}) {
    for (int i = 0; i < 15; ++i) {
      const auto a = random_class(rng, n);
      const auto b = random_class(rng, n);
      const auto c = random_class(rng, n);
      EXPECT_EQ(schubert::multiply(a, b), schubert::multiply(b, a));
      EXPECT_EQ(schubert::multiply(schubert::multiply(a, b), c), schubert::multiply(a, schubert::multiply(b, c)));
      EXPECT_EQ(schubert::multiply(a, b + c), schubert::multiply(a, b) + schubert::multiply(a, c));
    }
  }
}

// sigma_lambda . sigma_mu = delta(mu, complement of lambda) in top degree.
TEST(Property, SchubertDuality) {
  for (unsigned n = 3; n <= 8; ++n) {
    const unsigned box = n - 2;
    for (unsigned a = 0; a <= box; ++a) {
      for (unsigned b = 0; b <= a; ++b) {
        for (unsigned c = 0; c <= box; ++c) {
          for (unsigned d = 0; d <= c; ++d) {
            if (a + b + c + d != 2 * box) continue;
            const auto product = schubert::multiply(schubert::SchubertVector::basis(n, a, b),
                                                    schubert::SchubertVector::basis(n, c, d));
            const bool dual = c == box - b && d == box - a;
            EXPECT_EQ(schubert::top_eval(product), dual ? 1 : 0) << n << ": " << a << b << " " << c << d;
          }
        }
      }
    }
  }
}

TEST(Property, WeierstrassLeibniz) {
  std::mt19937 rng(17);
  for (int i = 0; i < kTrials; ++i) {
    const auto x = random_weier(rng);
    const auto y = random_weier(rng);
    EXPECT_EQ(covers::weier_derive(x * y), covers::weier_derive(x) * y + x * covers::weier_derive(y));
    EXPECT_LE(x.poly().degree_in(covers::WeierExpr::kD), 1U);
  }
}

TEST(Property, RiemannHurwitzAndConsistency) {
  std::mt19937 rng(18);
  std::uniform_int_distribution<int> root(-5, 5);
  int tested = 0;
  while (tested < 40) {
    RatPoly num = RatPoly::constant(random_rational(rng));
    RatPoly den = RatPoly::constant(1);
    for (int j = 0; j < 3; ++j) num = num * RatPoly::linear(Rational(root(rng)));
    for (int j = 0; j < 2; ++j) den = den * RatPoly::linear(Rational(root(rng)));
    if (num.is_zero()) continue;
    const covers::RationalMap<Rational> f(num, den);
    if (f.is_constant()) continue;
    ++tested;
    EXPECT_TRUE(covers::riemann_hurwitz_holds(f)) << covers::to_string(f);
    // A rational critical point's index equals the vanishing order at its value.
    for (const auto& p : covers::critical_points(f)) {
      if (const auto* x = std::get_if<Rational>(&p.location)) {
        EXPECT_EQ(covers::vanishing_order(f, f(*x), covers::ProjPoint<Rational>(*x)), p.index);
      }
    }
    // Every fiber profile is a partition of the degree.
    for (long v = -2; v <= 2; ++v) {
      unsigned total = 0;
      for (unsigned part : covers::fiber_profile(f, covers::ProjPoint<Rational>(Rational(v)))) total += part;
      EXPECT_EQ(total, f.degree());
    }
  }
}
