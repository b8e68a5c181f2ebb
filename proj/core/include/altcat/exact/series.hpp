#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "altcat/exact/poly.hpp"
#include "altcat/exact/rational.hpp"

namespace altcat {

/// Truncated power series over Q, known modulo w^(order+1).
///
/// Binary operations return a series whose order is the minimum of the
/// operand orders (or whatever the operation can actually certify), so a
/// coefficient read back through coeff() is always exact. Reading past the
/// order throws std::out_of_range.
class Series {
 public:
  Series(std::vector<Rational> coefficients, std::size_t order);

  static Series zero(std::size_t order) { return Series({}, order); }
  static Series constant(const Rational& value, std::size_t order) { return Series({value}, order); }
  /// The series w.
  static Series variable(std::size_t order) { return Series({Rational(0), Rational(1)}, order); }
  static Series from_poly(const RatPoly& p, std::size_t order) { return Series(p.coefficients(), order); }

  std::size_t order() const { return c_.size() - 1; }
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Drops everything above w^order; order must not exceed the current one.
  Series truncate(std::size_t order) const;
  /// Multiplies by w^k; the result is known to order + k.
  Series shift(std::size_t k) const;
  /// d/dw, known to order - 1. Throws std::domain_error at order 0.
  Series derivative() const;
  /// f(-w).
  Series reflect() const;
  /// (f(w) - f(-w)) / 2.
  Series odd_part() const;

  Series operator-() const;
  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(const Series& lhs, const Series& rhs);
  friend Series operator*(const Rational& scalar, Series s);
  friend bool operator==(const Series& lhs, const Series& rhs);

  /// True when every known coefficient is zero.
  bool is_zero() const;

 private:
  std::vector<Rational> c_;
};

/// 1/f; throws std::domain_error when f(0) == 0.
Series inverse(const Series& f);

/// f(g(w)); throws std::domain_error unless g(0) == 0.
Series compose(const Series& f, const Series& g);

/// (1 + inner)^a modulo w^(N+1) as sum_k binom_gen(a, k) inner^k.
/// Throws std::domain_error unless inner(0) == 0.
Series binomial_series(const Rational& a, const Series& inner, std::size_t order);

/// The s with s(0) = 1 and s^2 = f; throws std::domain_error unless f(0) == 1.
Series series_sqrt(const Series& f);

/// The u with u(0) = 0 and u = w * phi(u), to the order of phi (capped at
/// `order`). Newton iteration on u - w phi(u). Throws std::domain_error
/// when phi(0) == 0.
Series lagrange_invert(const Series& phi, std::size_t order);

std::string to_string(const Series& s, const std::string& var = "w");

}  // namespace altcat
