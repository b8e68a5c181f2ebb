#include "altcat/verify/suites.hpp"

#include <algorithm>
#include <future>
#include <vector>

#include "altcat/covers/bounds.hpp"
#include "altcat/covers/elliptic.hpp"
#include "altcat/covers/families.hpp"
#include "altcat/covers/maps.hpp"
#include "altcat/covers/tally.hpp"
#include "altcat/exact/combinatorics.hpp"
#include "altcat/schubert/schubert.hpp"
#include "altcat/sequence/identities.hpp"
#include "altcat/sequence/routes.hpp"

namespace altcat {
namespace {

using covers::CheckReport;

std::string first_failure(const std::vector<unsigned>& failures, const std::string& what) {
  if (failures.empty()) return "all " + what + " hold";
  return "first failure at " + what + " " + std::to_string(failures.front());
}

CheckReport bounds_report() {
  CheckReport report;
  const Integer chern = covers::chern_upper_bound(2, 5);
  const Integer chern_total = chern * covers::kSpinStructures;
  report.add("c1(F) = 2, c1(G) = 3, c1(U) = 8, c1(V) = 5", "first Chern classes of D_{m,A}",
             covers::c1_dma(1, 2) == 2 && covers::c1_dma(1, 3) == 3 && covers::c1_dma(2, 4) == 8 &&
                 covers::c1_dma(2, 4) - covers::c1_dma(1, 3) == 5);
  report.add("c3(q*V(2)) = 4 per spin structure", "degree-4 upper bound, Chern route", chern == 4,
             "c3 = " + to_string(chern) + ", x4 spin structures = " + to_string(chern_total));
  const auto veronese = covers::veronese_bound();
  report.add("Veronese surface degree 4 per spin structure, 16 total", "degree-5 upper bound, Veronese route",
             veronese.per_spin == 4 && veronese.total == 16,
             "per spin " + std::to_string(veronese.per_spin) + ", total " + std::to_string(veronese.total));
  for (unsigned degree : {4U, 5U}) {
    std::string detail;
    for (const auto& c : covers::tally_cases(degree)) {
      if (!detail.empty()) detail += " + ";
      detail += to_string(covers::contribution(c) * Rational(c.mirror_count));
    }
    const Rational total = covers::admissible_tally(degree);
    report.add("admissible tally, degree " + std::to_string(degree) + " = 16",
               "length of the degenerate fiber, degree " + std::to_string(degree), total == 16,
               detail + " = " + to_string(total));
  }
  const bool agree = chern_total == 16 && veronese.total == 16 && covers::admissible_tally(4) == 16 &&
                     covers::admissible_tally(5) == 16;
  report.add("Chern, Veronese and tally routes agree on 16", "N4 = N5 = 16", agree);
  return report;
}

CheckReport covers_report() {
  CheckReport report;
  report.append(covers::family_condition_deg5_alpha1());
  report.append(covers::family_condition_deg5_alpha2());
  report.append(covers::check_f1_map());
  report.append(covers::check_node_pair_maps());
  report.append(covers::check_deg3_maps());
  report.append(bounds_report());
  return report;
}

CheckReport weierstrass_report() {
  CheckReport report;
  report.append(covers::check_G_identities());
  report.append(covers::check_Gtilde_identities());
  return report;
}

CheckReport identities_report(unsigned max_g) {
  CheckReport report;
  std::vector<unsigned> failures;
  for (unsigned g = 0; g <= max_g; ++g) {
    if (!binomial_identity_check(g)) failures.push_back(g);
  }
  report.add("binomial identity for g <= " + std::to_string(max_g), "coefficient-extraction identity",
             failures.empty(), first_failure(failures, "g"));

  failures.clear();
  const unsigned max_n = 2 * max_g;
  for (unsigned n = 0; n <= max_n; ++n) {
    if (!catalan_rewrite_check(n)) failures.push_back(n);
  }
  report.add("Catalan half-binomial rewrite for n <= " + std::to_string(max_n),
             "C_n = (-1)^n 2^(2n+1) binom(1/2, n+1)", failures.empty(), first_failure(failures, "n"));

  const auto closed = alt_catalan_sequence(Route::closed, max_g);
  for (Route route : {Route::coeff_form, Route::genfun, Route::lagrange}) {
    const auto other = alt_catalan_sequence(route, max_g);
    failures.clear();
    for (unsigned g = 0; g <= max_g; ++g) {
      if (other[g] != closed[g]) failures.push_back(g);
    }
    report.add(std::string(route_name(route)) + " route matches closed formula for g <= " + std::to_string(max_g),
               "closed formula vs generating series", failures.empty(), first_failure(failures, "g"));
  }

  const std::size_t order = 2 * static_cast<std::size_t>(max_g) + 2;
  const LagrangeResult lag = lagrange_pipeline(order);
  report.add("u = w phi(u) to order " + std::to_string(order), "Lagrange inversion",
             lagrange_contract_residual(lag.u, lagrange_phi(order)).is_zero());
  report.add("256 w^2 (1 + u/2) = u^2 to order " + std::to_string(order), "Lagrange inversion",
             lagrange_relation_residual(lag.u).is_zero());
  report.add("f matches its closed form to order " + std::to_string(order), "Lagrange inversion",
             lag.f == lagrange_f_closed_form(order));
  return report;
}

CheckReport schubert_report(unsigned max_g) {
  CheckReport report;
  const unsigned cap = std::min(max_g, kSchubertSuiteMaxG);
  std::vector<unsigned> failures;
  for (unsigned g = 0; g <= cap; ++g) {
    for (unsigned m = 0; m <= 2 * g; ++m) {
      if (schubert::sigma12_power(g, m) != schubert::mixed_power_rhs(g, m)) failures.push_back(g);
    }
  }
  report.add("sigma1^(2m) sigma2^(2g-m) = alternating Catalan sum, g <= " + std::to_string(cap),
             "mixed sigma1/sigma2 intersection numbers", failures.empty(), first_failure(failures, "g"));

  failures.clear();
  for (unsigned n = 2; n <= 12; ++n) {
    if (schubert::grassmannian_degree(n) != catalan(n - 2)) failures.push_back(n);
  }
  report.add("deg G(2,n) = C_{n-2} for n <= 12", "degree of the Grassmannian", failures.empty(),
             first_failure(failures, "n"));

  failures.clear();
  for (unsigned g = 0; g <= cap; ++g) {
    if (schubert::alt_catalan_schubert(g, 16, 16) != alt_catalan_closed(g)) failures.push_back(g);
  }
  report.add("(16 sigma4 + 16 sigma31)^g matches closed formula, g <= " + std::to_string(cap),
             "degeneration formula with N4 = N5 = 16", failures.empty(), first_failure(failures, "g"));

  failures.clear();
  for (unsigned g = 1; g <= cap; ++g) {
    if (!sigma3_route_check(g)) failures.push_back(g);
  }
  report.add("16^g (sigma1 sigma3)^g matches closed formula, 1 <= g <= " + std::to_string(cap),
             "sigma4 + sigma31 = sigma1 sigma3", failures.empty(), first_failure(failures, "g"));
  return report;
}

CheckReport run_single(Suite suite, unsigned max_g) {
  switch (suite) {
    case Suite::covers: return covers_report();
    case Suite::weierstrass: return weierstrass_report();
    case Suite::identities: return identities_report(max_g);
    case Suite::schubert: return schubert_report(max_g);
    case Suite::all: break;
  }
  throw std::logic_error("run_single called with Suite::all");
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::all, Suite::covers, Suite::weierstrass, Suite::identities, Suite::schubert}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::covers: return "covers";
    case Suite::weierstrass: return "weierstrass";
    case Suite::identities: return "identities";
    case Suite::schubert: return "schubert";
  }
  return "unknown";
}

CheckReport run_suite(Suite suite, unsigned max_g) {
  if (suite != Suite::all) return run_single(suite, max_g);
  std::vector<std::future<CheckReport>> jobs;
  for (Suite s : {Suite::covers, Suite::weierstrass, Suite::identities, Suite::schubert}) {
    jobs.push_back(std::async(std::launch::async, run_single, s, max_g));
  }
  CheckReport report;
  for (auto& job : jobs) report.append(job.get());
  return report;
}

}  // namespace altcat
