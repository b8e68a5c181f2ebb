#pragma once

#include <string>
#include <vector>

#include "altcat/exact/rational.hpp"

namespace altcat::covers {

/// One row of the admissible-cover count over the degenerate fiber.
struct TallyCase {
  std::string label;
  std::string citation;
  unsigned num_source_choices;
  std::vector<unsigned> node_orders;
  unsigned automorphism_order;
  Rational sym_weight;
  /// Identical mirrored cases (u and v swapped) folded into this row.
  unsigned mirror_count;
};

/// choices * sum(node_orders) * sym_weight / automorphism_order, for one
/// mirror copy.
Rational contribution(const TallyCase& c);

/// Throws std::invalid_argument unless degree is 4 or 5.
const std::vector<TallyCase>& tally_cases(unsigned degree);

Rational admissible_tally(unsigned degree);

}  // namespace altcat::covers
