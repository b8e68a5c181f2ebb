#include <algorithm>
#include <future>
#include <map>

#include "altcat/exact/combinatorics.hpp"
#include "altcat/schubert/schubert.hpp"
#include "altcat_cli/cli.hpp"

namespace altcat::cli {
namespace {

bool per_g_route(Route route) {
  return route == Route::closed || route == Route::coeff_form || route == Route::schubert;
}

Integer evaluate(Route route, unsigned g, const RunConfig& config) {
  switch (route) {
    case Route::closed: return alt_catalan_closed(g);
    case Route::coeff_form: return alt_catalan_coeff_form(g);
    case Route::schubert: return schubert::alt_catalan_schubert(g, config.n4, config.n5);
    default: break;
  }
  throw std::logic_error("route is not evaluated per g");
}

void check_schubert_cap(unsigned g, const RunConfig& config) {
  if (g > config.schubert_cap) {
    throw ResourceCapError("schubert route limited to g <= " + std::to_string(config.schubert_cap) +
                           " (got " + std::to_string(g) + "); raise --schubert-cap to allow it");
  }
}

}  // namespace

int Emission::status() const {
  const bool rows_ok = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.agree; });
  const bool checks_ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  return rows_ok && checks_ok ? kOk : kVerificationFailure;
}

Emission cmd_table(const RunConfig& config) {
  if (std::find(config.routes.begin(), config.routes.end(), Route::schubert) != config.routes.end()) {
    check_schubert_cap(config.max_g, config);
  }
  // Each (route, g) cell is independent; whole-series routes run once.
  std::map<Route, std::vector<std::future<Integer>>> cells;
  std::map<Route, std::future<std::vector<Integer>>> sequences;
  for (Route route : config.routes) {
    if (cells.count(route) || sequences.count(route)) continue;
    if (per_g_route(route)) {
      auto& jobs = cells[route];
      for (unsigned g = 0; g <= config.max_g; ++g) {
        jobs.push_back(std::async(std::launch::async, evaluate, route, g, std::cref(config)));
      }
    } else {
      sequences[route] = std::async(std::launch::async, [route, &config] {
        return alt_catalan_sequence(route, config.max_g, config.n4, config.n5);
      });
    }
  }
  std::map<Route, std::vector<Integer>> values;
  for (auto& [route, jobs] : cells) {
    for (auto& job : jobs) values[route].push_back(job.get());
  }
  for (auto& [route, job] : sequences) values[route] = job.get();

  Emission e;
  e.command = "table";
  e.header.push_back("A_g by route; agree is true when all requested routes coincide");
  for (unsigned g = 0; g <= config.max_g; ++g) {
    Row row;
    row.g = g;
    std::vector<std::string> seen;
    for (Route route : config.routes) {
      const std::string name(route_name(route));
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
      seen.push_back(name);
      row.values.emplace_back(name, to_string(values[route][g]));
    }
    for (const auto& [name, value] : row.values) row.agree = row.agree && value == row.values.front().second;
    e.rows.push_back(std::move(row));
  }
  return e;
}

Emission cmd_series(const RunConfig& config) {
  const std::size_t order = std::max<std::size_t>(config.order, 1);
  std::vector<std::pair<std::string, Series>> series;
  for (Route route : config.routes) {
    if (route == Route::genfun) series.emplace_back("genfun", genfun_series(order));
    else if (route == Route::lagrange) series.emplace_back("lagrange", lagrange_pipeline(order).h);
    else throw std::invalid_argument("series supports the genfun and lagrange routes only");
  }
  Emission e;
  e.command = "series";
  e.header.push_back("index k is the coefficient of w^k; A_g sits at k = 2g+1, even k must be 0");
  for (std::size_t k = 0; k <= config.order; ++k) {
    Row row;
    row.index = k;
    if (k % 2 == 1) row.g = static_cast<unsigned>((k - 1) / 2);
    for (const auto& [name, s] : series) row.values.emplace_back(name, to_string(s.coeff(k)));
    for (const auto& [name, value] : row.values) {
      row.agree = row.agree && value == row.values.front().second && (k % 2 == 1 || value == "0");
    }
    e.rows.push_back(std::move(row));
  }
  return e;
}

Emission cmd_verify(const RunConfig& config) {
  Emission e;
  e.command = "verify";
  e.header.push_back("suite " + std::string(suite_name(config.suite)) + ", max g " + std::to_string(config.max_g));
  e.checks = run_suite(config.suite, config.max_g).items;
  return e;
}

Emission cmd_schubert(const RunConfig& config) {
  const unsigned g = config.max_g;
  check_schubert_cap(g, config);
  Emission e;
  e.command = "schubert";
  e.header.push_back("mk is sigma1^(2k) sigma2^(2g-k) in G(2,2g+2); degeneration is (n4 sigma4 + n5 sigma31)^g");
  Row row;
  row.g = g;
  std::vector<std::future<Integer>> jobs;
  for (unsigned m = 0; m <= 2 * g; ++m) {
    jobs.push_back(std::async(std::launch::async, schubert::sigma12_power, g, m));
  }
  for (unsigned m = 0; m <= 2 * g; ++m) {
    const Integer value = jobs[m].get();
    row.agree = row.agree && value == schubert::mixed_power_rhs(g, m);
    row.values.emplace_back("m" + std::to_string(m), to_string(value));
  }
  const Integer degeneration = schubert::alt_catalan_schubert(g, config.n4, config.n5);
  row.values.emplace_back("degeneration", to_string(degeneration));
  if (config.n4 == 16 && config.n5 == 16) {
    const Integer closed = alt_catalan_closed(g);
    row.values.emplace_back("closed", to_string(closed));
    row.agree = row.agree && closed == degeneration;
  }
  e.rows.push_back(std::move(row));
  return e;
}

}  // namespace altcat::cli
