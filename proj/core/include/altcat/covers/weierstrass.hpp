#pragma once

#include <string>

#include "altcat/exact/mpoly.hpp"

namespace altcat::covers {

/// Polynomial in P (wp), D (wp'), E1, E2 over Q with e3 = -E1 - E2 built in.
/// Every value is kept in normal form: degree at most 1 in D, using
/// D^2 = 4 (P - E1)(P - E2)(P + E1 + E2). Equality of normal forms is
/// equality in the algebra.
class WeierExpr {
 public:
  enum Var : std::size_t { kP = 0, kD = 1, kE1 = 2, kE2 = 3 };
  static constexpr std::size_t kVars = 4;

  WeierExpr() : p_(kVars) {}
  explicit WeierExpr(const MPoly& raw);
  WeierExpr(long value);  // NOLINT(google-explicit-constructor)
  WeierExpr(const Rational& value);  // NOLINT(google-explicit-constructor)

  static WeierExpr P();
  static WeierExpr D();
  static WeierExpr E1();
  static WeierExpr E2();
  static WeierExpr E3();
  /// 4 (E1^2 + E1 E2 + E2^2)
  static WeierExpr g2();
  /// 4 E1 E2 E3
  static WeierExpr g3();
  /// 4 (P - E1)(P - E2)(P - E3)
  static WeierExpr cubic();

  const MPoly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_d_free() const { return p_.degree_in(kD) == 0; }

  /// Substitutes `value` for one of the generators and renormalises.
  WeierExpr substitute(Var var, const WeierExpr& value) const;

  WeierExpr operator-() const { return WeierExpr(-p_); }
  friend WeierExpr operator+(const WeierExpr& a, const WeierExpr& b) { return WeierExpr(a.p_ + b.p_); }
  friend WeierExpr operator-(const WeierExpr& a, const WeierExpr& b) { return WeierExpr(a.p_ - b.p_); }
  friend WeierExpr operator*(const WeierExpr& a, const WeierExpr& b) { return WeierExpr(a.p_ * b.p_); }
  friend bool operator==(const WeierExpr& a, const WeierExpr& b) { return a.p_ == b.p_; }

 private:
  MPoly p_;
};

WeierExpr pow(const WeierExpr& base, unsigned exponent);

/// num / den; equality by cross multiplication.
struct WeierFraction {
  WeierExpr num;
  WeierExpr den;

  /// Throws std::domain_error for a zero denominator.
  WeierFraction(WeierExpr numerator, WeierExpr denominator);

  friend bool operator==(const WeierFraction& a, const WeierFraction& b) {
    return a.num * b.den == b.num * a.den;
  }
};

/// The derivation d/dz: P -> D, D -> 6 P^2 - g2/2, constants E1, E2.
WeierExpr weier_derive(const WeierExpr& x);
/// Quotient rule.
WeierFraction weier_derive(const WeierFraction& x);

std::string to_string(const WeierExpr& x);

}  // namespace altcat::covers
