#include "altcat/covers/weierstrass.hpp"

#include <stdexcept>

namespace altcat::covers {
namespace {

MPoly var(std::size_t index) { return MPoly::variable(WeierExpr::kVars, index); }

MPoly cubic_raw() {
  const MPoly p = var(WeierExpr::kP);
  const MPoly e1 = var(WeierExpr::kE1);
  const MPoly e2 = var(WeierExpr::kE2);
  return MPoly::constant(WeierExpr::kVars, 4) * (p - e1) * (p - e2) * (p + e1 + e2);
}

// D^(2k+r) -> cubic^k D^r, term by term.
MPoly reduce(const MPoly& raw) {
  if (raw.degree_in(WeierExpr::kD) <= 1) return raw;
  const MPoly cubic = cubic_raw();
  MPoly out(WeierExpr::kVars);
  for (const auto& [exps, coeff] : raw.terms()) {
    auto rest = exps;
    const unsigned d = rest[WeierExpr::kD];
    rest[WeierExpr::kD] = d % 2;
    out += MPoly::monomial(coeff, rest) * pow(cubic, d / 2);
  }
  return out;
}

}  // namespace

WeierExpr::WeierExpr(const MPoly& raw) : p_(reduce(raw)) {
  if (raw.nvars() != kVars) throw std::invalid_argument("Weierstrass expressions use exactly four generators");
}
WeierExpr::WeierExpr(long value) : p_(MPoly::constant(kVars, value)) {}
WeierExpr::WeierExpr(const Rational& value) : p_(MPoly::constant(kVars, value)) {}

WeierExpr WeierExpr::P() { return WeierExpr(var(kP)); }
WeierExpr WeierExpr::D() { return WeierExpr(var(kD)); }
WeierExpr WeierExpr::E1() { return WeierExpr(var(kE1)); }
WeierExpr WeierExpr::E2() { return WeierExpr(var(kE2)); }
WeierExpr WeierExpr::E3() { return -E1() - E2(); }
WeierExpr WeierExpr::g2() { return WeierExpr(4) * (E1() * E1() + E1() * E2() + E2() * E2()); }
WeierExpr WeierExpr::g3() { return WeierExpr(4) * E1() * E2() * E3(); }
WeierExpr WeierExpr::cubic() { return WeierExpr(cubic_raw()); }

WeierExpr WeierExpr::substitute(Var v, const WeierExpr& value) const {
  return WeierExpr(p_.substitute(v, value.p_));
}

WeierExpr pow(const WeierExpr& base, unsigned exponent) {
  WeierExpr result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

WeierFraction::WeierFraction(WeierExpr numerator, WeierExpr denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den.is_zero()) throw std::domain_error("Weierstrass quotient with zero denominator");
}

WeierExpr weier_derive(const WeierExpr& x) {
  // Chain rule over the two non-constant generators.
  const MPoly& p = x.poly();
  const WeierExpr dp = WeierExpr::D();
  const WeierExpr dd = WeierExpr(6) * WeierExpr::P() * WeierExpr::P() - WeierExpr(Rational(1, 2)) * WeierExpr::g2();
  return WeierExpr(p.partial(WeierExpr::kP)) * dp + WeierExpr(p.partial(WeierExpr::kD)) * dd;
}

WeierFraction weier_derive(const WeierFraction& x) {
  return WeierFraction(weier_derive(x.num) * x.den - x.num * weier_derive(x.den), x.den * x.den);
}

std::string to_string(const WeierExpr& x) {
  return to_string(x.poly(), {"P", "D", "E1", "E2"});
}

}  // namespace altcat::covers
