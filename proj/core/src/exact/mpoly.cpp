#include "altcat/exact/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace altcat {

MPoly MPoly::constant(std::size_t nvars, const Rational& value) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), value);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  MPoly p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

MPoly MPoly::monomial(const Rational& coeff, Exponents exponents) {
  MPoly p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

void MPoly::check_compatible(const MPoly& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials over different variable sets");
}

void MPoly::add_term(const Exponents& exponents, const Rational& coeff) {
  if (exponents.size() != nvars_) throw std::invalid_argument("exponent vector has the wrong length");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
  return d;
}

MPoly MPoly::coefficient_in(std::size_t var, unsigned k) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != k) continue;
    Exponents reduced = e;
    reduced[var] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

MPoly MPoly::partial(std::size_t var) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents lowered = e;
    --lowered[var];
    out.add_term(lowered, c * static_cast<long>(e[var]));
  }
  return out;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  check_compatible(value);
  MPoly out(nvars_);
  const unsigned top = degree_in(var);
  std::vector<MPoly> powers{constant(nvars_, Rational(1))};
  for (unsigned k = 1; k <= top; ++k) powers.push_back(powers.back() * value);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    out += monomial(c, rest) * powers[e[var]];
  }
  return out;
}

Rational MPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  lhs.check_compatible(rhs);
  MPoly out(lhs.nvars_);
  MPoly::Exponents e(lhs.nvars_);
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

MPoly operator*(const Rational& scalar, const MPoly& p) {
  MPoly out(p.nvars_);
  if (sgn(scalar) == 0) return out;
  out.terms_ = p.terms_;
  for (auto& [e, c] : out.terms_) c *= scalar;
  return out;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.nvars(), Rational(1));
  for (unsigned k = 0; k < exponent; ++k) result = result * base;
  return result;
}

MPoly discriminant_in(const MPoly& p, std::size_t var) {
  if (p.degree_in(var) != 2) {
    throw std::invalid_argument("discriminant_in needs degree exactly 2 in the variable");
  }
  const MPoly alpha = p.coefficient_in(var, 2);
  const MPoly beta = p.coefficient_in(var, 1);
  const MPoly gamma = p.coefficient_in(var, 0);
  return beta * beta - Rational(4) * (alpha * gamma);
}

std::string to_string(const MPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<MPoly::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.first.begin(), a.first.end(), 0U) >
           std::accumulate(b.first.begin(), b.first.end(), 0U);
  });
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string term;
    if (mono.empty()) {
      term = to_string(mag);
    } else if (mag == 1) {
      term = mono;
    } else {
      term = to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace altcat
