#include "altcat/sequence/identities.hpp"

#include <stdexcept>

#include "altcat/exact/combinatorics.hpp"
#include "altcat/schubert/schubert.hpp"
#include "altcat/sequence/routes.hpp"

namespace altcat {

bool binomial_identity_check(unsigned g) {
  for (unsigned i = 0; i <= g; ++i) {
    Integer lhs;
    for (unsigned k = 0; k <= g - i; ++k) {
      lhs += ipow(-1, k) * ipow(2, g - k) * binom_int(g, k) * binom_int(g - k, i);
    }
    if (lhs != binom_int(g, i) * ipow(2, i)) return false;
  }
  return true;
}

bool catalan_rewrite_check(unsigned n) {
  const Rational rewritten =
      Rational(ipow(-1, n) * ipow(2, 2 * n + 1)) * binom_gen(Rational(1, 2), n + 1);
  return rewritten == Rational(catalan(n));
}

bool sigma3_route_check(unsigned g) {
  if (g < 1 || g > 8) throw std::invalid_argument("sigma3_route_check covers 1 <= g <= 8");
  using schubert::SchubertVector;
  const unsigned n = 2 * g + 2;
  const SchubertVector sigma1 = SchubertVector::basis(n, 1, 0);
  const SchubertVector sigma3 = SchubertVector::basis(n, 3, 0);
  const Integer top = schubert::top_eval(schubert::power(schubert::multiply(sigma1, sigma3), g));
  return ipow(16, g) * top == alt_catalan_closed(g);
}

bool sigma3_reduction_check(unsigned n) {
  if (n < 5) throw std::invalid_argument("sigma3_reduction_check needs n >= 5");
  using schubert::SchubertVector;
  const SchubertVector sigma1 = SchubertVector::basis(n, 1, 0);
  const SchubertVector sigma2 = SchubertVector::basis(n, 2, 0);
  const SchubertVector rhs = Integer(2) * schubert::multiply(sigma1, sigma2) -
                             schubert::power(sigma1, 3);
  return schubert::giambelli(3, 0, n) == rhs;
}

}  // namespace altcat
