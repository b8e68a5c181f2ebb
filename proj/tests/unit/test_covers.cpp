#include <gtest/gtest.h>

#include "altcat/covers/bounds.hpp"
#include "altcat/covers/elliptic.hpp"
#include "altcat/covers/families.hpp"
#include "altcat/covers/maps.hpp"
#include "altcat/covers/rational_map.hpp"
#include "altcat/covers/tally.hpp"
#include "altcat/covers/weierstrass.hpp"

using namespace altcat;
using namespace altcat::covers;

namespace {

using RMap = RationalMap<Rational>;
using RPoint = ProjPoint<Rational>;

RatPoly t() { return RatPoly::variable(); }
RatPoly k(long value) { return RatPoly::constant(value); }

void expect_all_pass(const CheckReport& report) {
  ASSERT_FALSE(report.items.empty());
  for (const auto& item : report.items) EXPECT_TRUE(item.pass) << item.name << ": " << item.detail;
}

}  // namespace

TEST(RationalMap, ConstructionReducesAndNormalises) {
  const RMap f(k(2) * t() * (t() - k(1)), k(4) * (t() - k(1)));
  EXPECT_EQ(f.numerator(), RatPoly({Rational(0), Rational(1, 2)}));
  EXPECT_EQ(f.denominator(), k(1));
  EXPECT_EQ(f.degree(), 1U);
  EXPECT_THROW(RMap(t(), RatPoly()), std::domain_error);
}

TEST(RationalMap, Evaluation) {
  const RMap f = f1_map();
  EXPECT_EQ(f(Rational(2)), RPoint(Rational(-16)));
  EXPECT_EQ(f(Rational(1)), RPoint(Infinity{}));
  EXPECT_EQ(f.at_infinity(), RPoint(Infinity{}));
  EXPECT_EQ(RMap(k(3), t()).at_infinity(), RPoint(Rational(0)));
}

TEST(Ramification, SquareMap) {
  const RMap f = RMap::polynomial(pow(t(), 2));
  const auto scheme = ram_scheme(f);
  EXPECT_EQ(scheme.finite_part, k(2) * t());
  EXPECT_EQ(scheme.infinity_index, 2U);
  EXPECT_TRUE(riemann_hurwitz_holds(f));
  EXPECT_THROW(ram_scheme(RMap::polynomial(k(5))), std::invalid_argument);
}

TEST(Ramification, F1VanishingOrders) {
  const RMap f = f1_map();
  EXPECT_EQ(vanishing_order(f, RPoint(Rational(0)), RPoint(Rational(0))), 3U);
  EXPECT_EQ(vanishing_order(f, RPoint(Rational(0)), RPoint(Rational(4))), 1U);
  EXPECT_EQ(vanishing_order(f, RPoint(Rational(-16)), RPoint(Rational(2))), 3U);
  EXPECT_EQ(vanishing_order(f, RPoint(Rational(-16)), RPoint(Rational(-2))), 1U);
  EXPECT_EQ(vanishing_order(f, RPoint(Infinity{}), RPoint(Infinity{})), 3U);
  EXPECT_EQ(vanishing_order(f, RPoint(Rational(5)), RPoint(Rational(0))), 0U);
}

TEST(Ramification, FiberProfiles) {
  const RMap f = f1_map();
  EXPECT_EQ(fiber_profile(f, RPoint(Rational(0))), (std::vector<unsigned>{3, 1}));
  EXPECT_EQ(fiber_profile(f, RPoint(Infinity{})), (std::vector<unsigned>{3, 1}));
  // t^2 (t-1)^2 (t - 3) has a simple third zero; dividing by t - 3 instead
  // leaves a degree-4 map with profile {2,2}.
  const RMap g = RMap::polynomial(pow(t(), 2) * pow(t() - k(1), 2) * (t() - k(3)));
  EXPECT_EQ(fiber_profile(g, RPoint(Rational(0))), (std::vector<unsigned>{2, 2, 1}));
  const RMap h(pow(t(), 2) * pow(t() - k(1), 2), t() - k(3));
  EXPECT_EQ(fiber_profile(h, RPoint(Rational(0))), (std::vector<unsigned>{2, 2}));
  // Irrational fiber points are grouped by factor: t^2 = 2.
  const RMap sq = RMap::polynomial(pow(t(), 2));
  EXPECT_EQ(fiber_profile(sq, RPoint(Rational(2))), (std::vector<unsigned>{1, 1}));
}

TEST(Ramification, IrrationalCriticalPointsGrouped) {
  // t^3 - 3t has critical points +-1; t^3 - 6t has +-sqrt 2 (a pair).
  const RMap f = RMap::polynomial(pow(t(), 3) - k(6) * t());
  const auto points = critical_points(f);
  ASSERT_EQ(points.size(), 2U);
  EXPECT_TRUE(std::holds_alternative<RatPoly>(points[0].location));
  EXPECT_EQ(points[0].count(), 2U);
  EXPECT_EQ(points[0].index, 2U);
  EXPECT_TRUE(riemann_hurwitz_holds(f));
}

TEST(Ramification, DegreeFiveFamilyAtRationalB) {
  const Rational b(3);
  const RMap f = RMap::polynomial(pow(t(), 3) * (t() - k(1)) * (t() - RatPoly::constant(b)));
  const RatPoly quad({Rational(3) * b, Rational(-4) * (1 + b), Rational(5)});
  EXPECT_EQ(ram_scheme(f).finite_part, pow(t(), 2) * quad);
}

TEST(Mobius, ComposeAgreesWithPointwise) {
  const RMap f = f1_map();
  const Mobius<Rational> m{Rational(2), Rational(1), Rational(1), Rational(3)};
  const RMap g = precompose(f, m);
  for (long x = -2; x <= 3; ++x) {
    const Rational mx = Rational(2 * x + 1) / Rational(x + 3);
    EXPECT_EQ(g(Rational(x)), f(mx)) << x;
  }
}

TEST(Maps, Checks) {
  expect_all_pass(check_f1_map());
  expect_all_pass(check_node_pair_maps());
  expect_all_pass(check_deg3_maps());
}

TEST(Maps, NodePairRelationIsExact) {
  const auto [first, second] = node_pair_maps();
  EXPECT_EQ(precompose(second, node_pair_tau()), first);
  EXPECT_TRUE(riemann_hurwitz_holds(first));
  EXPECT_TRUE(riemann_hurwitz_holds(second));
}

TEST(Families, Checks) {
  expect_all_pass(family_condition_deg5_alpha1());
  expect_all_pass(family_condition_deg5_alpha2());
}

TEST(Weierstrass, Derivation) {
  using W = WeierExpr;
  EXPECT_EQ(weier_derive(W::P()), W::D());
  EXPECT_EQ(W::D() * W::D(), W::cubic());
  // d(D^2) agrees with d(cubic) after reduction.
  EXPECT_EQ(weier_derive(W::D() * W::D()), weier_derive(W::cubic()));
  const W lhs = weier_derive(W::D() * (W::P() - W::E1()));
  const W rhs = (W(6) * W::P() * W::P() - W(Rational(1, 2)) * W::g2()) * (W::P() - W::E1()) + W::cubic();
  EXPECT_EQ(lhs, rhs);
  EXPECT_TRUE(lhs.is_d_free());
  EXPECT_THROW(WeierFraction(W(1), W(0)), std::domain_error);
}

TEST(Weierstrass, SuiteChecks) {
  expect_all_pass(check_G_identities());
  expect_all_pass(check_Gtilde_identities());
  bool saw_note = false;
  for (const auto& item : check_G_identities().items) {
    if (item.name.find("[note]") != std::string::npos) {
      saw_note = true;
      EXPECT_NE(item.detail.find("7*E1^2"), std::string::npos);
    }
  }
  EXPECT_TRUE(saw_note);
}

TEST(Elliptic, JInvariant) {
  EXPECT_EQ(j_invariant(Rational(5), Rational(0)), 1728);
  EXPECT_EQ(j_invariant(Rational(0), Rational(2)), 0);
  EXPECT_EQ(j_invariant(Rational(4), Rational(1)), Rational(1728 * 64, 37));
  EXPECT_THROW(j_invariant(Rational(3), Rational(1)), std::domain_error);
}

TEST(Bounds, ChernAndVeronese) {
  EXPECT_EQ(chern_upper_bound(2, 5), 4);
  EXPECT_EQ(chern_upper_bound(0, 0), 0);
  EXPECT_EQ(chern_upper_bound(1, 7), 4 * (7 - 2));
  EXPECT_EQ(c1_dma(1, 3), 3);
  EXPECT_EQ(c1_dma(2, 4), 8);
  EXPECT_EQ(c1_dma(0, 9), 0);
  EXPECT_EQ(veronese_bound().per_spin, 4);
  EXPECT_EQ(veronese_bound().total, 16);
}

TEST(Tally, BothDegreesGiveSixteen) {
  EXPECT_EQ(admissible_tally(4), 16);
  EXPECT_EQ(admissible_tally(5), 16);
  EXPECT_EQ(contribution(tally_cases(5).front()), 4);
  for (unsigned d : {4U, 5U}) {
    for (const auto& c : tally_cases(d)) EXPECT_GT(contribution(c), 0) << c.label;
  }
  EXPECT_THROW(admissible_tally(6), std::invalid_argument);
}
