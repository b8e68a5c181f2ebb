#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altcat/exact/quadratic.hpp"
#include "altcat/exact/rational.hpp"

namespace altcat {

inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const QuadScalar& x) { return x.is_zero(); }

/// Dense univariate polynomial over Rational or QuadScalar, lowest degree
/// first. The zero polynomial has no coefficients and no degree.
template <class S>
class Poly {
 public:
  using Scalar = S;

  Poly() = default;
  explicit Poly(std::vector<S> coefficients) : c_(std::move(coefficients)) { trim(); }
  Poly(std::initializer_list<S> coefficients) : c_(coefficients) { trim(); }

  static Poly constant(S value) { return Poly(std::vector<S>{std::move(value)}); }
  static Poly monomial(S value, std::size_t k) {
    std::vector<S> c(k + 1);
    c[k] = std::move(value);
    return Poly(std::move(c));
  }
  static Poly variable() { return monomial(S(1), 1); }
  /// t - root
  static Poly linear(const S& root) { return Poly({-root, S(1)}); }

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Degree with zero mapped to 0; only for callers that already know p != 0
  /// or treat constants and zero alike.
  std::size_t degree_or_zero() const { return c_.empty() ? 0 : c_.size() - 1; }

  const std::vector<S>& coefficients() const { return c_; }
  S coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : S(); }
  const S& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  S operator()(const S& x) const {
    S acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  Poly& operator+=(const Poly& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] = c_[i] + other.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] = c_[i] - other.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<S> out(lhs.c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (scalar_is_zero(lhs.c_[i])) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
        out[i + j] = out[i + j] + lhs.c_[i] * rhs.c_[j];
      }
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const S& scalar, Poly p) {
    for (auto& c : p.c_) c = scalar * c;
    p.trim();
    return p;
  }
  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    if (lhs.c_.size() != rhs.c_.size()) return false;
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (!(lhs.c_[i] == rhs.c_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

using RatPoly = Poly<Rational>;
using QuadPoly = Poly<QuadScalar>;

template <class S>
Poly<S> pow(const Poly<S>& base, unsigned exponent) {
  Poly<S> result = Poly<S>::constant(S(1));
  Poly<S> square = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent != 0) square = square * square;
  }
  return result;
}

/// Quotient and remainder; throws std::domain_error for a zero divisor.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& dividend, const Poly<S>& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::size_t dd = *divisor.degree();
  std::vector<S> rem = dividend.coefficients();
  if (rem.size() <= dd) return {Poly<S>(), dividend};
  std::vector<S> quot(rem.size() - dd);
  const S lead_inv = S(1) / divisor.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    S q = rem[k] * lead_inv;
    if (scalar_is_zero(q)) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[k - dd + j] = rem[k - dd + j] - q * divisor.coefficient(j);
    }
    quot[k - dd] = std::move(q);
  }
  rem.resize(dd);
  return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

template <class S>
Poly<S> monic(const Poly<S>& p) {
  if (p.is_zero()) return p;
  return (S(1) / p.leading()) * p;
}

/// Monic gcd via Euclid with monic normalisation at every step; gcd(0, 0) = 0.
template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  while (!b.is_zero()) {
    Poly<S> r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

template <class S>
Poly<S> derivative(const Poly<S>& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return Poly<S>();
  std::vector<S> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) {
    out[k - 1] = S(static_cast<long>(k)) * c[k];
  }
  return Poly<S>(std::move(out));
}

/// p(q(t)).
template <class S>
Poly<S> compose(const Poly<S>& p, const Poly<S>& q) {
  Poly<S> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * q + Poly<S>::constant(*it);
  }
  return acc;
}

/// beta^2 - 4 alpha gamma for p = alpha t^2 + beta t + gamma.
/// Throws std::invalid_argument unless deg p == 2.
template <class S>
S discriminant(const Poly<S>& p) {
  if (p.degree() != std::optional<std::size_t>(2)) {
    throw std::invalid_argument("discriminant needs a polynomial of degree exactly 2");
  }
  const S& gamma = p.coefficients()[0];
  const S& beta = p.coefficients()[1];
  const S& alpha = p.coefficients()[2];
  return beta * beta - S(4) * alpha * gamma;
}

/// Multiplicity of `root` as a zero of p (0 when p(root) != 0, or p == 0).
template <class S>
unsigned root_multiplicity(Poly<S> p, const S& root) {
  if (p.is_zero()) return 0;
  const Poly<S> lin = Poly<S>::linear(root);
  unsigned m = 0;
  for (;;) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero()) return m;
    p = std::move(q);
    ++m;
  }
}

template <class S>
struct SquarefreeFactor {
  Poly<S> factor;  // monic, squarefree, degree >= 1
  unsigned multiplicity;
};

/// Yun's squarefree decomposition: p = lc * prod factor^multiplicity.
template <class S>
std::vector<SquarefreeFactor<S>> squarefree_decomposition(const Poly<S>& p) {
  std::vector<SquarefreeFactor<S>> out;
  if (p.is_zero() || p.degree() == std::optional<std::size_t>(0)) return out;
  const Poly<S> f = monic(p);
  const Poly<S> df = derivative(f);
  const Poly<S> a0 = gcd(f, df);
  Poly<S> b = divmod(f, a0).first;
  Poly<S> c = divmod(df, a0).first;
  Poly<S> d = c - derivative(b);
  for (unsigned i = 1; b.degree().value_or(0) > 0; ++i) {
    const Poly<S> a = gcd(b, d);
    if (a.degree().value_or(0) > 0) out.push_back({a, i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - derivative(b);
  }
  return out;
}

template <class S>
std::string to_string(const Poly<S>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (scalar_is_zero(c[k])) continue;
    if (!out.empty()) out += " + ";
    const std::string coeff = to_string(c[k]);
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (!(c[k] == S(1))) out += "(" + coeff + ")*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace altcat
