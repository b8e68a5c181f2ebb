#include <gtest/gtest.h>

#include "altcat/exact/combinatorics.hpp"
#include "altcat/schubert/schubert.hpp"
#include "altcat/sequence/routes.hpp"

using namespace altcat;
using namespace altcat::schubert;

namespace {

SchubertVector sigma(unsigned n, unsigned a, unsigned b = 0) { return SchubertVector::basis(n, a, b); }

}  // namespace

TEST(Partition, RejectsIncreasingRows) { EXPECT_THROW(Partition2(1, 2), std::invalid_argument); }

TEST(Schubert, BoxDropsOutsideClasses) {
  EXPECT_TRUE(sigma(4, 3).is_zero());
  EXPECT_FALSE(sigma(4, 2, 2).is_zero());
  EXPECT_THROW(SchubertVector(1), std::invalid_argument);
}

TEST(Schubert, PieriInG24) {
  // sigma_1^2 = sigma_2 + sigma_{1,1}
  const SchubertVector s1 = sigma(4, 1);
  EXPECT_EQ(multiply(s1, s1), sigma(4, 2) + sigma(4, 1, 1));
  EXPECT_EQ(pieri_special(sigma(4, 1, 1), 1), sigma(4, 2, 1));
}

TEST(Schubert, GiambelliExpressesTwoRowClasses) {
  EXPECT_EQ(giambelli(1, 1, 4), sigma(4, 1, 1));
  EXPECT_EQ(giambelli(3, 1, 6), sigma(6, 3, 1));
  EXPECT_THROW(giambelli(5, 0, 6), std::invalid_argument);
}

TEST(Schubert, MismatchedSpacesThrow) {
  EXPECT_THROW(multiply(sigma(4, 1), sigma(5, 1)), std::invalid_argument);
}

TEST(Schubert, TopEvalNeedsTopDegree) {
  EXPECT_EQ(top_eval(sigma(5, 3, 3)), 1);
  EXPECT_THROW(top_eval(sigma(5, 2)), std::invalid_argument);
}

// Values from the Chern-root integral -1/2 [x1^(n-1) x2^(n-1)] P (x1-x2)^2.
TEST(Schubert, ChernRootOracleValues) {
  EXPECT_EQ(top_eval(multiply(sigma(5, 2, 1), power(sigma(5, 1), 3))), 2);
  EXPECT_EQ(top_eval(power(sigma(5, 1), 6)), 5);
  EXPECT_EQ(top_eval(multiply(power(sigma(5, 2), 2), power(sigma(5, 1), 2))), 2);
  EXPECT_EQ(top_eval(power(sigma(6, 2, 2), 2)), 1);
  EXPECT_EQ(top_eval(power(sigma(6, 2), 4)), 3);
  EXPECT_EQ(top_eval(power(sigma(6, 3, 1), 2)), 1);
  EXPECT_EQ(top_eval(multiply(sigma(6, 4), sigma(6, 3, 1))), 0);
  EXPECT_EQ(top_eval(power(sigma(8, 4) + sigma(8, 3, 1), 3)), 8);
  EXPECT_EQ(alt_catalan_schubert(2, 2, 5), 29);
}

TEST(Schubert, MixedPowersMatchOracle) {
  const std::vector<std::vector<long>> expected{
      {1},
      {1, 1, 2},
      {3, 4, 6, 9, 14},
      {15, 21, 30, 43, 62, 90, 132},
      {91, 127, 178, 250, 352, 497, 704, 1001, 1430},
  };
  for (unsigned g = 0; g < expected.size(); ++g) {
    for (unsigned m = 0; m <= 2 * g; ++m) {
      EXPECT_EQ(sigma12_power(g, m), expected[g][m]) << g << "," << m;
      EXPECT_EQ(mixed_power_rhs(g, m), expected[g][m]) << g << "," << m;
    }
  }
  EXPECT_THROW(sigma12_power(2, 5), std::invalid_argument);
}

TEST(Schubert, GrassmannianDegreeIsCatalan) {
  for (unsigned n = 2; n <= 12; ++n) EXPECT_EQ(grassmannian_degree(n), catalan(n - 2)) << n;
}

TEST(Schubert, DegenerationFormula) {
  const long expected[] = {1, 0, 512, 32768, 3014656};
  for (unsigned g = 0; g < 5; ++g) EXPECT_EQ(alt_catalan_schubert(g, 16, 16), expected[g]);
  EXPECT_EQ(alt_catalan_schubert(1, 1, 0), 0);
  EXPECT_EQ(alt_catalan_schubert(2, 1, 0), 1);
}
