#pragma once

#include <memory>
#include <optional>
#include <string>

#include "altcat/exact/rational.hpp"

namespace altcat {

/// The field Q(sqrt d) for a fixed non-square rational d. Contexts are
/// immutable and shared between all scalars created from them.
class QuadField {
 public:
  /// Throws std::invalid_argument when d is a rational square (including 0).
  static std::shared_ptr<const QuadField> make(const Rational& d);

  const Rational& d() const { return d_; }

 private:
  explicit QuadField(Rational d) : d_(std::move(d)) {}
  Rational d_;
};

using QuadFieldPtr = std::shared_ptr<const QuadField>;

/// a + b*sqrt(d). A scalar without a field is a plain rational and combines
/// with scalars of any context; combining two different contexts throws
/// std::domain_error.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b, QuadFieldPtr field);

  static QuadScalar generator(const QuadFieldPtr& field);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const QuadFieldPtr& field() const { return field_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// a^2 - d b^2.
  Rational norm() const;
  QuadScalar conjugate() const;
  /// Throws std::domain_error for zero.
  QuadScalar inverse() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& other);
  QuadScalar& operator-=(const QuadScalar& other);
  QuadScalar& operator*=(const QuadScalar& other);
  QuadScalar& operator/=(const QuadScalar& other);

  friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
  friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
  friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
  friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const QuadScalar& lhs, const QuadScalar& rhs);

 private:
  Rational a_;
  Rational b_;
  QuadFieldPtr field_;
};

/// Square root inside the scalar's own field, when one exists there.
std::optional<QuadScalar> sqrt_in_field(const QuadScalar& value);
std::optional<Rational> sqrt_in_field(const Rational& value);

std::string to_string(const QuadScalar& value);

}  // namespace altcat
