#include "altcat/exact/combinatorics.hpp"

namespace altcat {

Integer binom_int(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational binom_gen(const Rational& a, unsigned long k) {
  Rational out(1);
  for (unsigned long i = 0; i < k; ++i) {
    out *= (a - static_cast<long>(i));
    out /= static_cast<long>(i + 1);
  }
  return out;
}

Integer catalan(unsigned long n) {
  Integer out = binom_int(2 * n, n);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), n + 1);
  return out;
}

Integer ipow(long base, unsigned long exponent) {
  Integer b(base);
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

}  // namespace altcat
