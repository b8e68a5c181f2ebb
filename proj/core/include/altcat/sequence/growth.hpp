#pragma once

#include <string>
#include <vector>

#include "altcat/exact/rational.hpp"

namespace altcat {

struct GrowthRow {
  unsigned g;
  Integer value;            // A_g
  Rational ratio;           // A_{g+1} / A_g
  std::string root_estimate;  // A_g^{1/(2g+1)}, truncated decimal
};

struct GrowthReport {
  std::vector<GrowthRow> rows;    // 2 <= g < G
  bool ratios_below_128 = false;  // every A_{g+1}/A_g < 128
  bool roots_increasing = false;  // A_g^{1/(2g+1)} strictly increasing over the window
  bool roots_below_limit = false; // every A_g^{1/(2g+1)} < 16/sqrt(2)
};

/// Decimal digits printed for the root estimates.
inline constexpr unsigned kRootDigits = 6;

/// Ratios and root estimates for 2 <= g < G. All comparisons are exact
/// integer comparisons; only the printed estimates are decimal.
/// Throws std::invalid_argument for G < 5.
GrowthReport growth_report(unsigned G);

}  // namespace altcat
