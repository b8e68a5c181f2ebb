#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altcat/exact/rational.hpp"
#include "altcat/exact/series.hpp"

namespace altcat {

/// The independent ways of computing A_g.
enum class Route { closed, coeff_form, schubert, genfun, lagrange };

std::string_view route_name(Route route);
std::optional<Route> parse_route(std::string_view name);
const std::vector<Route>& all_routes();

struct AltCatalanRecord {
  unsigned g;
  Integer value;
  Route route;
};

/// 16^g sum_{i=0}^g (-2)^i binom(g,i) C_{2g-i}.
Integer alt_catalan_closed(unsigned g);

/// [z^{2g+1}] 2^{8g+1} (1 + z/2)^g (1 + z)^{1/2}.
Integer alt_catalan_coeff_form(unsigned g);

/// 2w / (sqrt(1 + 64w^2 + 16w sqrt(16w^2+1)) + sqrt(1 + 64w^2 - 16w sqrt(16w^2+1)))
/// expanded modulo w^(order+1). Throws std::invalid_argument for order 0.
Series genfun_series(std::size_t order);

struct LagrangeResult {
  Series u;  // u = w phi(u)
  Series f;  // psi(u) / (1 - w phi'(u))
  Series h;  // odd part of f
};

/// phi(z) = 16 (1 + z/2)^{1/2}, psi(z) = (1/8)(1 + z)^{1/2}(1 + z/2)^{-1/2}.
Series lagrange_phi(std::size_t order);
Series lagrange_psi(std::size_t order);

/// Lagrange inversion route. Throws std::invalid_argument for order 0.
LagrangeResult lagrange_pipeline(std::size_t order);

/// Closed form of f expanded directly:
/// sqrt(64w^2 + 1 + 16w sqrt(16w^2+1)) / (8 sqrt(16w^2+1)).
Series lagrange_f_closed_form(std::size_t order);

/// 256 w^2 (1 + u/2) - u^2, which vanishes for the inverted u.
Series lagrange_relation_residual(const Series& u);

/// u - w phi(u).
Series lagrange_contract_residual(const Series& u, const Series& phi);

/// A_0 .. A_max_g by one route. n4/n5 only affect the Schubert route.
std::vector<Integer> alt_catalan_sequence(Route route, unsigned max_g,
                                          const Integer& n4 = 16, const Integer& n5 = 16);

/// The A_g coefficients sitting at w^{2g+1} of an odd series.
std::vector<Integer> odd_coefficients_as_integers(const Series& s, unsigned max_g);

}  // namespace altcat
