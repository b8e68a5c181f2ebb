#include "altcat/sequence/routes.hpp"

#include <stdexcept>

#include "altcat/exact/combinatorics.hpp"
#include "altcat/schubert/schubert.hpp"

namespace altcat {

std::string_view route_name(Route route) {
  switch (route) {
    case Route::closed: return "closed";
    case Route::coeff_form: return "coeff_form";
    case Route::schubert: return "schubert";
    case Route::genfun: return "genfun";
    case Route::lagrange: return "lagrange";
  }
  return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : all_routes()) {
    if (route_name(r) == name) return r;
  }
  return std::nullopt;
}

const std::vector<Route>& all_routes() {
  static const std::vector<Route> routes{Route::closed, Route::coeff_form, Route::schubert,
                                         Route::genfun, Route::lagrange};
  return routes;
}

Integer alt_catalan_closed(unsigned g) {
  Integer sum;
  for (unsigned i = 0; i <= g; ++i) {
    sum += ipow(-2, i) * binom_int(g, i) * catalan(2 * g - i);
  }
  return ipow(16, g) * sum;
}

Integer alt_catalan_coeff_form(unsigned g) {
  const std::size_t order = 2 * g + 1;
  const Series z = Series::variable(order);
  std::vector<Rational> half_z_power(g + 1);
  // (1 + z/2)^g is a polynomial; expand it exactly.
  for (unsigned k = 0; k <= g; ++k) {
    half_z_power[k] = Rational(binom_int(g, k)) / Rational(ipow(2, k));
  }
  const Series left(std::move(half_z_power), order);
  const Series right = binomial_series(Rational(1, 2), z, order);
  const Rational coefficient = Rational(ipow(2, 8 * g + 1)) * (left * right).coeff(order);
  if (coefficient.get_den() != 1) {
    throw std::logic_error("coefficient extraction produced a non-integer");
  }
  return coefficient.get_num();
}

namespace {

Series sqrt_16w2_plus_1(std::size_t order) {
  return series_sqrt(Series({Rational(1), Rational(0), Rational(16)}, order));
}

}  // namespace

Series genfun_series(std::size_t order) {
  if (order == 0) throw std::invalid_argument("genfun_series needs order >= 1");
  const Series root = sqrt_16w2_plus_1(order);
  const Series base({Rational(1), Rational(0), Rational(64)}, order);
  const Series cross = Rational(16) * root.shift(1).truncate(order);
  const Series denom = series_sqrt(base + cross) + series_sqrt(base - cross);
  return (Rational(2) * inverse(denom)).shift(1).truncate(order);
}

Series lagrange_phi(std::size_t order) {
  const Series half_z = Rational(1, 2) * Series::variable(order);
  return Rational(16) * binomial_series(Rational(1, 2), half_z, order);
}

Series lagrange_psi(std::size_t order) {
  const Series z = Series::variable(order);
  const Series half_z = Rational(1, 2) * z;
  return Rational(1, 8) * (binomial_series(Rational(1, 2), z, order) *
                           binomial_series(Rational(-1, 2), half_z, order));
}

LagrangeResult lagrange_pipeline(std::size_t order) {
  if (order == 0) throw std::invalid_argument("lagrange_pipeline needs order >= 1");
  const Series phi = lagrange_phi(order);
  const Series psi = lagrange_psi(order);
  Series u = lagrange_invert(phi, order);
  const Series w_dphi = compose(phi.derivative(), u.truncate(order - 1)).shift(1);
  Series f = compose(psi, u) * inverse(Series::constant(Rational(1), order) - w_dphi);
  Series h = f.odd_part();
  return {std::move(u), std::move(f), std::move(h)};
}

Series lagrange_f_closed_form(std::size_t order) {
  const Series root = sqrt_16w2_plus_1(order);
  const Series inner = Series({Rational(1), Rational(0), Rational(64)}, order) +
                       Rational(16) * root.shift(1).truncate(order);
  return series_sqrt(inner) * (Rational(1, 8) * inverse(root));
}

Series lagrange_relation_residual(const Series& u) {
  const std::size_t order = u.order();
  const Series one_plus_half_u = Series::constant(Rational(1), order) + Rational(1, 2) * u;
  return (Rational(256) * one_plus_half_u).shift(2).truncate(order) - u * u;
}

Series lagrange_contract_residual(const Series& u, const Series& phi) {
  return u - compose(phi, u).shift(1).truncate(std::min(u.order(), phi.order()));
}

std::vector<Integer> odd_coefficients_as_integers(const Series& s, unsigned max_g) {
  std::vector<Integer> out;
  out.reserve(max_g + 1);
  for (unsigned g = 0; g <= max_g; ++g) {
    const Rational& c = s.coeff(2 * g + 1);
    if (c.get_den() != 1) throw std::logic_error("non-integral odd coefficient at g=" + std::to_string(g));
    out.push_back(c.get_num());
  }
  return out;
}

std::vector<Integer> alt_catalan_sequence(Route route, unsigned max_g, const Integer& n4,
                                          const Integer& n5) {
  const std::size_t order = 2 * static_cast<std::size_t>(max_g) + 1;
  switch (route) {
    case Route::genfun:
      return odd_coefficients_as_integers(genfun_series(order), max_g);
    case Route::lagrange:
      return odd_coefficients_as_integers(lagrange_pipeline(order).h, max_g);
    default:
      break;
  }
  std::vector<Integer> out;
  out.reserve(max_g + 1);
  for (unsigned g = 0; g <= max_g; ++g) {
    switch (route) {
      case Route::closed: out.push_back(alt_catalan_closed(g)); break;
      case Route::coeff_form: out.push_back(alt_catalan_coeff_form(g)); break;
      case Route::schubert: out.push_back(schubert::alt_catalan_schubert(g, n4, n5)); break;
      default: break;
    }
  }
  return out;
}

}  // namespace altcat
