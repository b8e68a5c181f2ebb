#include "altcat/exact/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "altcat/exact/combinatorics.hpp"

namespace altcat {

Series::Series(std::vector<Rational> coefficients, std::size_t order)
    : c_(std::move(coefficients)) {
  c_.resize(order + 1);
}

const Rational& Series::coeff(std::size_t k) const {
  if (k >= c_.size()) {
    throw std::out_of_range("coefficient w^" + std::to_string(k) +
                            " lies beyond the known order " + std::to_string(order()));
  }
  return c_[k];
}

Series Series::truncate(std::size_t order) const {
  if (order > this->order()) {
    throw std::out_of_range("cannot extend a series beyond its known order");
  }
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order) + 1), order);
}

Series Series::shift(std::size_t k) const {
  std::vector<Rational> out(k);
  out.insert(out.end(), c_.begin(), c_.end());
  return Series(std::move(out), order() + k);
}

Series Series::derivative() const {
  if (order() == 0) throw std::domain_error("derivative of an order-0 series carries no information");
  std::vector<Rational> out(order());
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * static_cast<long>(k);
  return Series(std::move(out), order() - 1);
}

Series Series::reflect() const {
  Series out = *this;
  for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

Series Series::odd_part() const {
  Series out = *this;
  for (std::size_t k = 0; k < out.c_.size(); k += 2) out.c_[k] = 0;
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Series& Series::operator+=(const Series& other) {
  c_.resize(std::min(c_.size(), other.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += other.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  c_.resize(std::min(c_.size(), other.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= other.c_[k];
  return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
  const std::size_t n = std::min(lhs.c_.size(), rhs.c_.size());
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(lhs.c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
  }
  return Series(std::move(out), n - 1);
}

Series operator*(const Rational& scalar, Series s) {
  for (auto& c : s.c_) c *= scalar;
  return s;
}

bool operator==(const Series& lhs, const Series& rhs) {
  return lhs.c_ == rhs.c_;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Series inverse(const Series& f) {
  if (sgn(f.coeff(0)) == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  const std::size_t n = f.order();
  std::vector<Rational> g(n + 1);
  const Rational inv0 = 1 / f.coeff(0);
  g[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += f.coeff(j) * g[k - j];
    g[k] = -acc * inv0;
  }
  return Series(std::move(g), n);
}

Series compose(const Series& f, const Series& g) {
  if (sgn(g.coeff(0)) != 0) throw std::domain_error("composition needs an inner series with zero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  const Series inner = g.truncate(n);
  Series acc = Series::zero(n);
  for (std::size_t k = n + 1; k-- > 0;) {
    acc = acc * inner + Series::constant(f.coeff(k), n);
  }
  return acc;
}

Series binomial_series(const Rational& a, const Series& inner, std::size_t order) {
  if (sgn(inner.coeff(0)) != 0) throw std::domain_error("binomial series needs inner(0) == 0");
  const std::size_t n = std::min(order, inner.order());
  const Series x = inner.truncate(n);
  Series acc = Series::constant(Rational(1), n);
  Series power = Series::constant(Rational(1), n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * x;
    acc += binom_gen(a, k) * power;
  }
  return acc;
}

Series series_sqrt(const Series& f) {
  if (f.coeff(0) != 1) throw std::domain_error("series square root needs constant term 1");
  const std::size_t n = f.order();
  std::vector<Rational> s(n + 1);
  s[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = f.coeff(k);
    for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / 2;
  }
  return Series(std::move(s), n);
}

Series lagrange_invert(const Series& phi, std::size_t order) {
  if (sgn(phi.coeff(0)) == 0) throw std::domain_error("Lagrange inversion needs phi(0) != 0");
  const std::size_t n = std::min(order, phi.order());
  if (n == 0) return Series::zero(0);
  const Series dphi = phi.derivative();
  Series u = Series({Rational(0), phi.coeff(0)}, n);
  // Newton doubles the number of correct coefficients per step.
  for (std::size_t iter = 0; iter < 2 * n + 2; ++iter) {
    const Series residual = u - compose(phi, u).shift(1).truncate(n);
    if (residual.is_zero()) return u;
    const Series jacobian =
        Series::constant(Rational(1), n) - compose(dphi, u.truncate(n - 1)).shift(1);
    u = u - residual * inverse(jacobian);
  }
  throw std::logic_error("Lagrange inversion failed to converge");
}

std::string to_string(const Series& s, const std::string& var) {
  std::string out;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (sgn(s.coeff(k)) == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(s.coeff(k)) + ")";
    if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return (out.empty() ? "0" : out) + " + O(" + var + "^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace altcat
