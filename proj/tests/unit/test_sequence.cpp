#include <gtest/gtest.h>

#include "altcat/exact/combinatorics.hpp"
#include "altcat/sequence/growth.hpp"
#include "altcat/sequence/identities.hpp"
#include "altcat/sequence/routes.hpp"

using namespace altcat;

namespace {

// Closed formula evaluated independently in Python.
const std::vector<Integer> kOracle{
    Integer("1"),
    Integer("0"),
    Integer("512"),
    Integer("32768"),
    Integer("3014656"),
    Integer("285212672"),
    Integer("28521267200"),
    Integer("2950642532352"),
    Integer("313455303196672"),
    Integer("33990302461067264"),
    Integer("3747096045042008064"),
};

}  // namespace

TEST(Routes, ClosedMatchesOracle) {
  for (unsigned g = 0; g < kOracle.size(); ++g) EXPECT_EQ(alt_catalan_closed(g), kOracle[g]) << g;
  EXPECT_EQ(alt_catalan_closed(20), Integer("1626544290827590133082390790624767901696"));
}

TEST(Routes, EveryRouteAgrees) {
  for (Route route : all_routes()) {
    const auto values = alt_catalan_sequence(route, 10);
    ASSERT_EQ(values.size(), 11U);
    for (unsigned g = 0; g <= 10; ++g) EXPECT_EQ(values[g], kOracle[g]) << route_name(route) << " g=" << g;
  }
}

TEST(Routes, NamesRoundTrip) {
  for (Route route : all_routes()) EXPECT_EQ(parse_route(route_name(route)), route);
  EXPECT_FALSE(parse_route("bogus").has_value());
}

TEST(Routes, GenfunIsOdd) {
  const Series s = genfun_series(15);
  for (std::size_t k = 0; k <= 15; k += 2) EXPECT_EQ(s.coeff(k), 0) << k;
  EXPECT_EQ(s.coeff(1), 1);
  EXPECT_EQ(s.coeff(5), 512);
  EXPECT_THROW(genfun_series(0), std::invalid_argument);
}

TEST(Routes, LagrangeContract) {
  const LagrangeResult r = lagrange_pipeline(40);
  EXPECT_TRUE(lagrange_contract_residual(r.u, lagrange_phi(40)).is_zero());
  EXPECT_TRUE(lagrange_relation_residual(r.u).is_zero());
  EXPECT_EQ(r.f, lagrange_f_closed_form(40));
  EXPECT_EQ(r.h, r.f.odd_part());
  EXPECT_THROW(lagrange_pipeline(0), std::invalid_argument);
}

TEST(Identities, BinomialAndCatalan) {
  for (unsigned g = 0; g <= 12; ++g) EXPECT_TRUE(binomial_identity_check(g)) << g;
  for (unsigned n = 0; n <= 20; ++n) EXPECT_TRUE(catalan_rewrite_check(n)) << n;
  for (unsigned n = 5; n <= 9; ++n) EXPECT_TRUE(sigma3_reduction_check(n)) << n;
  EXPECT_TRUE(sigma3_route_check(3));
  EXPECT_THROW(sigma3_route_check(9), std::invalid_argument);
}

TEST(Growth, FrozenWindow) {
  const GrowthReport report = growth_report(41);
  EXPECT_TRUE(report.ratios_below_128);
  EXPECT_TRUE(report.roots_increasing);
  EXPECT_TRUE(report.roots_below_limit);
  ASSERT_FALSE(report.rows.empty());
  EXPECT_EQ(report.rows.front().g, 2U);
  EXPECT_EQ(report.rows.front().root_estimate, "3.482202");
  EXPECT_EQ(report.rows.front().ratio, Rational(64));
  EXPECT_EQ(report.rows[1].ratio, Rational(92));
  EXPECT_EQ(report.rows.back().g, 40U);
  EXPECT_EQ(report.rows.back().root_estimate.substr(0, 5), "9.975");
  EXPECT_THROW(growth_report(4), std::invalid_argument);
}
