#include "altcat/covers/tally.hpp"

#include <numeric>
#include <stdexcept>

namespace altcat::covers {

Rational contribution(const TallyCase& c) {
  const unsigned orders = std::accumulate(c.node_orders.begin(), c.node_orders.end(), 0U);
  Rational value = Rational(c.num_source_choices) * Rational(orders) * c.sym_weight;
  value /= Rational(c.automorphism_order);
  return value;
}

const std::vector<TallyCase>& tally_cases(unsigned degree) {
  static const std::vector<TallyCase> deg5{
      {"deg5 (i) alpha=1, mirrored alpha=3", "degree 5 case (i): 4 = 2 x 4 x 1/2, alpha = 3 identical",
       2, {3, 1}, 2, Rational(1), 2},
      {"deg5 (ii) alpha=2", "degree 5 case (ii): two choices, ramified with order 4",
       2, {2, 2}, 1, Rational(1), 1},
  };
  static const std::vector<TallyCase> deg4{
      {"deg4 (i) alpha in {1,3}", "degree 4 case (i): 4 = 2 x 4 x 1/2, simple ramification over H_{1,4}",
       2, {3, 1}, 1, Rational(1, 2), 1},
      {"deg4 (ii) alpha=2", "degree 4 case (ii): two solutions, ramified with order 4",
       2, {2, 2}, 1, Rational(1), 1},
      {"deg4 (iii) cubic on R", "degree 4 case (iii): 4 = 2 x 2",
       2, {1, 1}, 1, Rational(1), 1},
  };
  if (degree == 4) return deg4;
  if (degree == 5) return deg5;
  throw std::invalid_argument("admissible tally is defined for degree 4 or 5 only");
}

Rational admissible_tally(unsigned degree) {
  Rational total;
  for (const TallyCase& c : tally_cases(degree)) total += contribution(c) * Rational(c.mirror_count);
  return total;
}

}  // namespace altcat::covers
