#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "altcat/exact/poly.hpp"

namespace altcat::covers {

using altcat::to_string;

struct Infinity {
  bool operator==(const Infinity&) const = default;
};

/// A point of P^1 over the scalar field.
template <class S>
using ProjPoint = std::variant<S, Infinity>;

/// t -> (a t + b) / (c t + d)
template <class S>
struct Mobius {
  S a, b, c, d;
};

/// p/q with gcd(p, q) = 1 and q monic.
template <class S>
class RationalMap {
 public:
  /// Throws std::domain_error when the denominator is zero.
  RationalMap(Poly<S> numerator, Poly<S> denominator) {
    if (denominator.is_zero()) throw std::domain_error("rational map with zero denominator");
    const Poly<S> common = gcd(numerator, denominator);
    if (common.degree().value_or(0) > 0) {
      numerator = divmod(numerator, common).first;
      denominator = divmod(denominator, common).first;
    }
    const S scale = S(1) / denominator.leading();
    num_ = scale * std::move(numerator);
    den_ = scale * std::move(denominator);
  }

  static RationalMap polynomial(Poly<S> p) {
    return RationalMap(std::move(p), Poly<S>::constant(S(1)));
  }

  const Poly<S>& numerator() const { return num_; }
  const Poly<S>& denominator() const { return den_; }

  std::size_t degree() const { return std::max(num_.degree_or_zero(), den_.degree_or_zero()); }
  bool is_constant() const { return degree() == 0; }

  ProjPoint<S> operator()(const S& t) const {
    const S q = den_(t);
    if (scalar_is_zero(q)) return Infinity{};
    return S(num_(t) / q);
  }

  ProjPoint<S> at_infinity() const {
    const std::size_t dn = num_.degree_or_zero();
    const std::size_t dd = den_.degree_or_zero();
    if (num_.is_zero() || dn < dd) return S();
    if (dn > dd) return Infinity{};
    return S(num_.leading() / den_.leading());
  }

  friend bool operator==(const RationalMap& lhs, const RationalMap& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

 private:
  Poly<S> num_;
  Poly<S> den_;
};

namespace detail {

template <class S>
Poly<S> homogenised(const Poly<S>& p, std::size_t total, const Poly<S>& top, const Poly<S>& bottom) {
  Poly<S> acc;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (scalar_is_zero(p.coefficients()[i])) continue;
    acc += p.coefficients()[i] *
           (pow(top, static_cast<unsigned>(i)) * pow(bottom, static_cast<unsigned>(total - i)));
  }
  return acc;
}

}  // namespace detail

/// f(m(t)).
template <class S>
RationalMap<S> precompose(const RationalMap<S>& f, const Mobius<S>& m) {
  const Poly<S> top({m.b, m.a});
  const Poly<S> bottom({m.d, m.c});
  const std::size_t total = f.degree();
  return RationalMap<S>(detail::homogenised(f.numerator(), total, top, bottom),
                        detail::homogenised(f.denominator(), total, top, bottom));
}

/// m(f(t)).
template <class S>
RationalMap<S> postcompose(const Mobius<S>& m, const RationalMap<S>& f) {
  return RationalMap<S>(m.a * f.numerator() + m.b * f.denominator(),
                        m.c * f.numerator() + m.d * f.denominator());
}

/// f(1/s), the chart at infinity.
template <class S>
RationalMap<S> flip(const RationalMap<S>& f) {
  return precompose(f, Mobius<S>{S(0), S(1), S(1), S(0)});
}

template <class S>
void require_nonconstant(const RationalMap<S>& f) {
  if (f.is_constant()) throw std::invalid_argument("ramification of a constant map");
}

/// Order of vanishing of f - value at point; the pole order when value is
/// infinity. Zero when f(point) != value.
template <class S>
unsigned vanishing_order(const RationalMap<S>& f, const ProjPoint<S>& value, const ProjPoint<S>& point) {
  require_nonconstant(f);
  if (std::holds_alternative<Infinity>(point)) return vanishing_order(flip(f), value, ProjPoint<S>(S(0)));
  const S& t = std::get<S>(point);
  if (std::holds_alternative<Infinity>(value)) return root_multiplicity(f.denominator(), t);
  const S& c = std::get<S>(value);
  return root_multiplicity(f.numerator() - c * f.denominator(), t);
}

template <class S>
struct RamScheme {
  Poly<S> finite_part;        // p'q - pq': finite critical points, multiplicity index - 1
  unsigned infinity_index;    // ramification index of f at t = infinity
};

/// Throws std::invalid_argument for constant maps.
template <class S>
RamScheme<S> ram_scheme(const RationalMap<S>& f) {
  require_nonconstant(f);
  const Poly<S>& p = f.numerator();
  const Poly<S>& q = f.denominator();
  Poly<S> wronskian = derivative(p) * q - p * derivative(q);
  const unsigned at_inf = vanishing_order(f, f.at_infinity(), ProjPoint<S>(Infinity{}));
  return {std::move(wronskian), at_inf};
}

/// Multiplicities in the fiber over `value`, largest first. Points that are
/// not defined over the scalar field still contribute their multiplicity,
/// once per conjugate.
template <class S>
std::vector<unsigned> fiber_profile(const RationalMap<S>& f, const ProjPoint<S>& value) {
  require_nonconstant(f);
  const Poly<S> h = std::holds_alternative<Infinity>(value)
                        ? f.denominator()
                        : f.numerator() - std::get<S>(value) * f.denominator();
  std::vector<unsigned> parts;
  for (const auto& [factor, m] : squarefree_decomposition(h)) {
    parts.insert(parts.end(), *factor.degree(), m);
  }
  const std::size_t at_inf = f.degree() - h.degree_or_zero();
  if (at_inf > 0) parts.push_back(static_cast<unsigned>(at_inf));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

namespace detail {

inline std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Rational roots by the rational root test; skipped for very large
// coefficients, where the caller keeps the factor as a conjugate group.
inline std::vector<Rational> rational_roots(const RatPoly& p) {
  std::vector<Rational> roots;
  if (p.degree().value_or(0) == 0) return roots;
  Integer lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Integer> ints;
  for (const auto& c : p.coefficients()) {
    const Rational scaled = c * Rational(lcm_den);
    ints.push_back(scaled.get_num());
  }
  std::size_t shift = 0;
  while (ints[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  const Integer& low = ints[shift];
  const Integer& high = ints.back();
  const Integer limit("1000000000000");
  if (abs(low) > limit || abs(high) > limit) return roots;
  for (const Integer& num : divisors(low)) {
    for (const Integer& den : divisors(high)) {
      for (const Integer& signed_num : {Integer(num), Integer(-num)}) {
        const Rational candidate = make_rational(signed_num, den);
        if (scalar_is_zero(p(candidate)) &&
            std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
          roots.push_back(candidate);
        }
      }
    }
  }
  return roots;
}

inline std::vector<QuadScalar> rational_roots(const QuadPoly&) { return {}; }

}  // namespace detail

/// Roots of a squarefree polynomial that lie in the scalar field, plus the
/// monic cofactor carrying the remaining (conjugate) roots.
template <class S>
std::pair<std::vector<S>, Poly<S>> split_roots(const Poly<S>& squarefree) {
  std::vector<S> roots;
  Poly<S> rest = monic(squarefree);
  for (const S& r : detail::rational_roots(rest)) {
    roots.push_back(r);
    rest = divmod(rest, Poly<S>::linear(r)).first;
  }
  if (rest.degree() == std::optional<std::size_t>(1)) {
    roots.push_back(-rest.coefficient(0));
    rest = Poly<S>::constant(S(1));
  } else if (rest.degree() == std::optional<std::size_t>(2)) {
    if (auto root = sqrt_in_field(discriminant(rest))) {
      const S b = rest.coefficient(1);
      roots.push_back((-b + *root) / S(2));
      roots.push_back((-b - *root) / S(2));
      rest = Poly<S>::constant(S(1));
    }
  }
  return {std::move(roots), std::move(rest)};
}

/// A critical point of index >= 2: a field point, infinity, or every root of
/// a monic factor with no roots in the field.
template <class S>
struct RamPoint {
  std::variant<S, Infinity, Poly<S>> location;
  unsigned index;

  /// Number of geometric points represented.
  std::size_t count() const {
    if (const auto* group = std::get_if<Poly<S>>(&location)) return *group->degree();
    return 1;
  }
};

template <class S>
std::vector<RamPoint<S>> critical_points(const RationalMap<S>& f) {
  const RamScheme<S> scheme = ram_scheme(f);
  std::vector<RamPoint<S>> out;
  for (const auto& [factor, m] : squarefree_decomposition(scheme.finite_part)) {
    auto [roots, rest] = split_roots(factor);
    for (S& r : roots) out.push_back({std::move(r), m + 1});
    if (rest.degree().value_or(0) > 0) out.push_back({std::move(rest), m + 1});
  }
  if (scheme.infinity_index >= 2) out.push_back({Infinity{}, scheme.infinity_index});
  return out;
}

/// sum (index - 1) over all critical points, conjugates counted.
template <class S>
std::size_t ramification_total(const RationalMap<S>& f) {
  std::size_t total = 0;
  for (const auto& p : critical_points(f)) total += (p.index - 1) * p.count();
  return total;
}

/// Genus-zero Riemann-Hurwitz: total ramification equals 2 deg f - 2.
template <class S>
bool riemann_hurwitz_holds(const RationalMap<S>& f) {
  return ramification_total(f) == 2 * f.degree() - 2;
}

template <class S>
std::string to_string(const RationalMap<S>& f, const std::string& var = "t") {
  return "(" + to_string(f.numerator(), var) + ") / (" + to_string(f.denominator(), var) + ")";
}

template <class S>
std::string to_string(const ProjPoint<S>& p) {
  if (std::holds_alternative<Infinity>(p)) return "inf";
  return to_string(std::get<S>(p));
}

inline std::string profile_string(const std::vector<unsigned>& parts) {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? "," : "") + std::to_string(parts[i]);
  }
  return out + "}";
}

}  // namespace altcat::covers
