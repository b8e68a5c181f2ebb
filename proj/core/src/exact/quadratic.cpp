#include "altcat/exact/quadratic.hpp"

#include <stdexcept>

namespace altcat {
namespace {

QuadFieldPtr merge_fields(const QuadFieldPtr& lhs, const QuadFieldPtr& rhs) {
  if (!lhs) return rhs;
  if (!rhs || lhs == rhs) return lhs;
  if (lhs->d() == rhs->d()) return lhs;
  throw std::domain_error("arithmetic mixes Q(sqrt " + to_string(lhs->d()) +
                          ") and Q(sqrt " + to_string(rhs->d()) + ")");
}

}  // namespace

std::shared_ptr<const QuadField> QuadField::make(const Rational& d) {
  if (rational_sqrt(d).has_value()) {
    throw std::invalid_argument("Q(sqrt d) needs a non-square d, got " + to_string(d));
  }
  return std::shared_ptr<const QuadField>(new QuadField(d));
}

QuadScalar::QuadScalar(Rational a, Rational b, QuadFieldPtr field)
    : a_(std::move(a)), b_(std::move(b)), field_(std::move(field)) {
  if (!field_ && sgn(b_) != 0) {
    throw std::invalid_argument("irrational part without a quadratic field");
  }
}

QuadScalar QuadScalar::generator(const QuadFieldPtr& field) {
  return QuadScalar(Rational(0), Rational(1), field);
}

Rational QuadScalar::norm() const {
  if (!field_) return a_ * a_;
  return a_ * a_ - field_->d() * b_ * b_;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar out = *this;
  out.b_ = -b_;
  return out;
}

QuadScalar QuadScalar::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) {
    throw std::domain_error("inverse of zero in Q(sqrt d)");
  }
  QuadScalar out = conjugate();
  out.a_ /= n;
  out.b_ /= n;
  return out;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& other) {
  field_ = merge_fields(field_, other.field_);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& other) {
  field_ = merge_fields(field_, other.field_);
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& other) {
  field_ = merge_fields(field_, other.field_);
  const Rational d = field_ ? field_->d() : Rational(0);
  Rational a = a_ * other.a_ + d * b_ * other.b_;
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& other) {
  merge_fields(field_, other.field_);
  return *this *= other.inverse();
}

bool operator==(const QuadScalar& lhs, const QuadScalar& rhs) {
  merge_fields(lhs.field_, rhs.field_);
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::optional<Rational> sqrt_in_field(const Rational& value) { return rational_sqrt(value); }

std::optional<QuadScalar> sqrt_in_field(const QuadScalar& value) {
  if (value.is_rational()) {
    if (auto r = rational_sqrt(value.a())) {
      return QuadScalar(*r, Rational(0), value.field());
    }
    // a = d * q^2 gives sqrt(a) = q sqrt(d).
    if (value.field()) {
      if (auto q = rational_sqrt(value.a() / value.field()->d())) {
        return QuadScalar(Rational(0), *q, value.field());
      }
    }
    return std::nullopt;
  }
  // (p + q sqrt d)^2 = a + b sqrt d  <=>  p^2 + d q^2 = a, 2pq = b.
  // Then x = p^2 solves x^2 - a x + d b^2 / 4 = 0.
  const Rational& d = value.field()->d();
  const auto disc_root = rational_sqrt(value.norm());
  if (!disc_root) return std::nullopt;
  for (const Rational& sign : {Rational(1), Rational(-1)}) {
    const Rational x = (value.a() + sign * *disc_root) / 2;
    if (auto p = rational_sqrt(x); p && sgn(*p) != 0) {
      const Rational q = value.b() / (2 * *p);
      if (*p * *p + d * q * q == value.a()) {
        return QuadScalar(*p, q, value.field());
      }
    }
  }
  return std::nullopt;
}

std::string to_string(const QuadScalar& value) {
  if (value.is_rational()) return to_string(value.a());
  const std::string radical = "sqrt(" + to_string(value.field()->d()) + ")";
  std::string out;
  if (sgn(value.a()) != 0) out = to_string(value.a()) + (sgn(value.b()) > 0 ? "+" : "");
  if (value.b() == 1) return out + radical;
  if (value.b() == -1) return out + "-" + radical;
  return out + to_string(value.b()) + "*" + radical;
}

}  // namespace altcat
