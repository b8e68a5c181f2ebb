#include "altcat/covers/bounds.hpp"

#include <stdexcept>

#include "altcat/exact/mpoly.hpp"

namespace altcat::covers {

long c1_dma(long m, long deg_a) { return m * deg_a; }

Integer chern_upper_bound(long c1_f, long c1_v) {
  // Variables: three Chern roots of V, then eps.
  constexpr std::size_t kRank = 3;
  constexpr std::size_t kEps = kRank;
  const MPoly eps = MPoly::variable(kRank + 1, kEps);
  MPoly product = MPoly::constant(kRank + 1, 1);
  for (std::size_t i = 0; i < kRank; ++i) {
    product = product * (MPoly::variable(kRank + 1, i) + MPoly::constant(kRank + 1, 2) * eps);
  }
  // Classes pulled back from the curve die in degree >= 2; a single root
  // against eps^2 integrates to that root's degree; eps^3 = -c1(F).
  Rational total;
  Rational linear_coeff;
  bool have_linear = false;
  for (const auto& [exps, coeff] : product.terms()) {
    unsigned from_curve = 0;
    for (std::size_t i = 0; i < kRank; ++i) from_curve += exps[i];
    if (from_curve + exps[kEps] != kRank) throw std::logic_error("top Chern class is not homogeneous");
    if (from_curve >= 2) continue;
    if (from_curve == 0) {
      total += coeff * Rational(-c1_f);
      continue;
    }
    if (have_linear && linear_coeff != coeff) throw std::logic_error("top Chern class is not symmetric in the roots");
    linear_coeff = coeff;
    have_linear = true;
  }
  total += linear_coeff * Rational(c1_v);
  if (total.get_den() != 1) throw std::logic_error("Chern number is not integral");
  return total.get_num();
}

long veronese_degree() {
  // d^n for the degree-d Veronese embedding of P^n.
  constexpr long d = 2;
  constexpr long n = 2;
  long degree = 1;
  for (long i = 0; i < n; ++i) degree *= d;
  return degree;
}

VeroneseBound veronese_bound() {
  const long per_spin = veronese_degree();
  return {per_spin, per_spin * kSpinStructures};
}

}  // namespace altcat::covers
