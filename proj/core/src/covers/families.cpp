#include "altcat/covers/families.hpp"

#include "altcat/exact/mpoly.hpp"

namespace altcat::covers {
namespace {

constexpr std::size_t kT = 0;
constexpr std::size_t kB = 1;
const std::vector<std::string> kNames{"t", "b"};

MPoly t() { return MPoly::variable(2, kT); }
MPoly b() { return MPoly::variable(2, kB); }
MPoly c(long value) { return MPoly::constant(2, value); }

std::string residual(const MPoly& lhs, const MPoly& rhs) {
  const MPoly diff = lhs - rhs;
  return diff.is_zero() ? "residual 0" : "residual " + to_string(diff, kNames);
}

// Two distinct roots in b: degree 2 in b with nonzero discriminant.
void add_root_count(CheckReport& report, const std::string& prefix, const MPoly& condition,
                    const std::string& citation) {
  const MPoly disc = discriminant_in(condition, kB);
  const Rational value = disc.coefficient({0, 0});
  const bool distinct = disc.total_degree() == 0 && sgn(value) != 0;
  report.add(prefix + ": two distinct b-solutions", citation, distinct && condition.degree_in(kB) == 2,
             "discriminant in b = " + to_string(value) + (sgn(value) < 0 ? " (roots non-real)" : " (roots real)"));
}

}  // namespace

CheckReport family_condition_deg5_alpha1() {
  const std::string cite = "degree-5 family, alpha in {1,3}";
  CheckReport report;
  const MPoly f = pow(t(), 3) * (t() - c(1)) * (t() - b());
  const MPoly quad = c(5) * pow(t(), 2) - c(4) * (c(1) + b()) * t() + c(3) * b();
  const MPoly df = f.partial(kT);
  report.add("alpha1: critical factor t^2(5t^2-4(1+b)t+3b)", cite, df == pow(t(), 2) * quad,
             residual(df, pow(t(), 2) * quad));
  const MPoly condition = c(4) * pow(b(), 2) - c(7) * b() + c(4);
  const MPoly disc = discriminant_in(quad, kT);
  report.add("alpha1: discriminant = 4(4b^2-7b+4)", cite, disc == c(4) * condition,
             residual(disc, c(4) * condition));
  add_root_count(report, "alpha1", condition, cite);
  return report;
}

CheckReport family_condition_deg5_alpha2() {
  const std::string cite = "degree-5 family, alpha = 2";
  CheckReport report;
  const MPoly base = pow(t(), 2) - t();
  const MPoly f = pow(base, 2) * (t() - b());
  const MPoly quad = c(5) * pow(t(), 2) - (c(3) + c(4) * b()) * t() + c(2) * b();
  const MPoly df = f.partial(kT);
  report.add("alpha2: critical factor (t^2-t)(5t^2-(3+4b)t+2b)", cite, df == base * quad,
             residual(df, base * quad));
  const MPoly condition = c(16) * pow(b(), 2) - c(16) * b() + c(9);
  const MPoly disc = discriminant_in(quad, kT);
  report.add("alpha2: double-root condition 16b^2-16b+9", cite, disc == condition, residual(disc, condition));
  add_root_count(report, "alpha2", condition, cite);
  return report;
}

}  // namespace altcat::covers
