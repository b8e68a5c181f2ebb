#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "altcat/exact/rational.hpp"

namespace altcat {

/// Sparse polynomial over Q in a fixed number of variables. Terms with zero
/// coefficient are never stored, so structural equality is polynomial
/// equality.
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& value);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(const Rational& coeff, Exponents exponents);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Highest exponent of variable `var` (0 for the zero polynomial).
  unsigned degree_in(std::size_t var) const;
  /// Total degree; 0 for constants and for zero.
  unsigned total_degree() const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MPoly coefficient_in(std::size_t var, unsigned k) const;
  /// Partial derivative.
  MPoly partial(std::size_t var) const;
  /// Substitutes `value` for variable `var`.
  MPoly substitute(std::size_t var, const MPoly& value) const;
  /// Coefficient of the exact monomial.
  Rational coefficient(const Exponents& exponents) const;

  void add_term(const Exponents& exponents, const Rational& coeff);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(const Rational& scalar, const MPoly& p);
  friend bool operator==(const MPoly& lhs, const MPoly& rhs) {
    return lhs.nvars_ == rhs.nvars_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_compatible(const MPoly& other) const;

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

/// beta^2 - 4 alpha gamma of p viewed as a quadratic in `var`.
/// Throws std::invalid_argument unless deg_var p == 2.
MPoly discriminant_in(const MPoly& p, std::size_t var);

std::string to_string(const MPoly& p, const std::vector<std::string>& names);

}  // namespace altcat
