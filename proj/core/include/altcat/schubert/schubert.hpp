#pragma once

#include <compare>
#include <map>
#include <string>

#include "altcat/exact/rational.hpp"

namespace altcat::schubert {

/// Two-row partition (a >= b >= 0) indexing the Schubert class sigma_{a,b}.
struct Partition2 {
  unsigned a = 0;
  unsigned b = 0;

  Partition2() = default;
  /// Throws std::invalid_argument unless a >= b.
  Partition2(unsigned first, unsigned second);

  unsigned size() const { return a + b; }
  auto operator<=>(const Partition2&) const = default;
};

/// Integer combination of Schubert classes in H^*(G(2,n)). Classes that do
/// not fit in the 2 x (n-2) box are dropped on insertion; zero coefficients
/// are never stored.
class SchubertVector {
 public:
  /// Throws std::invalid_argument when n < 2.
  explicit SchubertVector(unsigned n);

  /// The fundamental class sigma_{0,0}.
  static SchubertVector one(unsigned n);
  /// coeff * sigma_{a,b}; the zero vector when (a,b) falls outside the box.
  static SchubertVector basis(unsigned n, unsigned a, unsigned b, const Integer& coeff = 1);

  unsigned n() const { return n_; }
  unsigned box() const { return n_ - 2; }
  const std::map<Partition2, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Partition2& p) const;

  void add_term(const Partition2& p, const Integer& coeff);

  SchubertVector& operator+=(const SchubertVector& other);
  SchubertVector& operator-=(const SchubertVector& other);
  friend SchubertVector operator+(SchubertVector lhs, const SchubertVector& rhs) { return lhs += rhs; }
  friend SchubertVector operator-(SchubertVector lhs, const SchubertVector& rhs) { return lhs -= rhs; }
  friend SchubertVector operator*(const Integer& scalar, const SchubertVector& v);
  friend bool operator==(const SchubertVector& lhs, const SchubertVector& rhs) = default;

 private:
  void check_same_space(const SchubertVector& other) const;

  unsigned n_;
  std::map<Partition2, Integer> terms_;
};

/// v * sigma_c by the two-row Pieri rule.
SchubertVector pieri_special(const SchubertVector& v, unsigned c);

/// sigma_{a,b} evaluated as sigma_a sigma_b - sigma_{a+1} sigma_{b-1} through
/// Pieri products. Throws std::invalid_argument unless n-2 >= a >= b.
SchubertVector giambelli(unsigned a, unsigned b, unsigned n);

/// Bilinear product, reducing each sigma_{a,b} on the left to Pieri steps.
/// Throws std::invalid_argument for vectors in different Grassmannians.
SchubertVector multiply(const SchubertVector& v, const SchubertVector& w);

/// Binary powering over multiply.
SchubertVector power(const SchubertVector& v, unsigned exponent);

/// Coefficient of the point class sigma_{n-2,n-2}. Throws
/// std::invalid_argument if v has a nonzero term of any other degree.
Integer top_eval(const SchubertVector& v);

/// Top intersection of sigma_1^{2(n-2)}, the Pluecker degree of G(2,n).
Integer grassmannian_degree(unsigned n);

/// top_eval(sigma_1^{2m} sigma_2^{2g-m}) in G(2, 2g+2), 0 <= m <= 2g.
Integer sigma12_power(unsigned g, unsigned m);

/// sum_{i=0}^{2g-m} (-1)^i binom(2g-m, i) C_{2g-i}.
Integer mixed_power_rhs(unsigned g, unsigned m);

/// top_eval((n4 sigma_{4,0} + n5 sigma_{3,1})^g) in G(2, 2g+2).
Integer alt_catalan_schubert(unsigned g, const Integer& n4, const Integer& n5);

std::string to_string(const SchubertVector& v);

}  // namespace altcat::schubert
