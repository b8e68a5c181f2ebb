#include "altcat/sequence/growth.hpp"

#include <stdexcept>

#include "altcat/exact/combinatorics.hpp"
#include "altcat/sequence/routes.hpp"

namespace altcat {

GrowthReport growth_report(unsigned G) {
  if (G < 5) throw std::invalid_argument("growth_report needs G >= 5");
  // A_1 = 0, so the window starts at g = 2.
  const std::vector<Integer> values = alt_catalan_sequence(Route::closed, G);
  GrowthReport report;
  report.ratios_below_128 = true;
  report.roots_increasing = true;
  report.roots_below_limit = true;
  for (unsigned g = 2; g < G; ++g) {
    const Integer& a = values[g];
    const Integer& next = values[g + 1];
    GrowthRow row{g, a, make_rational(next, a), root_decimal(a, 2 * g + 1, kRootDigits)};
    row.ratio.canonicalize();
    if (!(next < 128 * a)) report.ratios_below_128 = false;
    // root_g < root_{g+1}  <=>  A_g^{2g+3} < A_{g+1}^{2g+1}
    Integer lhs;
    Integer rhs;
    mpz_pow_ui(lhs.get_mpz_t(), a.get_mpz_t(), 2 * g + 3);
    mpz_pow_ui(rhs.get_mpz_t(), next.get_mpz_t(), 2 * g + 1);
    if (!(lhs < rhs)) report.roots_increasing = false;
    // root_g < 16/sqrt(2)  <=>  A_g^2 < 128^{2g+1}
    for (const auto& [value, k] : {std::pair{a, g}, std::pair{next, g + 1}}) {
      if (!(value * value < ipow(128, 2 * k + 1))) report.roots_below_limit = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace altcat
