#include "altcat/covers/maps.hpp"

namespace altcat::covers {
namespace {

using QScalar = QuadScalar;
using QMap = RationalMap<QScalar>;

QuadFieldPtr sqrt3_field() {
  static const QuadFieldPtr field = QuadField::make(Rational(3));
  return field;
}

QuadFieldPtr sqrt_minus3_field() {
  static const QuadFieldPtr field = QuadField::make(Rational(-3));
  return field;
}

QScalar in_sqrt3(const Rational& a, const Rational& b) { return QScalar(a, b, sqrt3_field()); }
QScalar in_sqrt_minus3(const Rational& a, const Rational& b) { return QScalar(a, b, sqrt_minus3_field()); }

template <class S>
std::string critical_summary(const RationalMap<S>& f) {
  std::string out;
  for (const auto& p : critical_points(f)) {
    if (!out.empty()) out += ", ";
    if (std::holds_alternative<Infinity>(p.location)) {
      out += "inf";
    } else if (const auto* group = std::get_if<Poly<S>>(&p.location)) {
      out += "roots of " + to_string(*group);
    } else {
      out += to_string(std::get<S>(p.location));
    }
    out += " (index " + std::to_string(p.index) + ")";
  }
  return out;
}

template <class S>
void add_riemann_hurwitz(CheckReport& report, const std::string& label, const RationalMap<S>& f,
                         const std::string& cite) {
  const std::size_t total = ramification_total(f);
  report.add(label + ": Riemann-Hurwitz", cite, total == 2 * f.degree() - 2,
             "sum(index-1) = " + std::to_string(total) + ", 2d-2 = " + std::to_string(2 * f.degree() - 2));
}

template <class S>
void add_profile(CheckReport& report, const std::string& label, const RationalMap<S>& f, const ProjPoint<S>& value,
                 const std::vector<unsigned>& expected, const std::string& cite) {
  const auto profile = fiber_profile(f, value);
  report.add(label + ": fiber over " + to_string(value) + " is " + profile_string(expected), cite,
             profile == expected, "found " + profile_string(profile));
}

// Critical points away from the marked points U, V, counted by index.
struct IndexCount {
  std::size_t simple = 0;
  std::size_t triple = 0;
  std::size_t other = 0;
};

IndexCount count_outside(const QMap& f, const std::vector<QScalar>& marked) {
  IndexCount counts;
  for (const auto& p : critical_points(f)) {
    if (const auto* point = std::get_if<QScalar>(&p.location)) {
      if (std::find(marked.begin(), marked.end(), *point) != marked.end()) continue;
    }
    const std::size_t n = p.count();
    if (p.index == 2) counts.simple += n;
    else if (p.index == 3) counts.triple += n;
    else counts.other += n;
  }
  return counts;
}

}  // namespace

RationalMap<Rational> f1_map() {
  const RatPoly t = RatPoly::variable();
  return RationalMap<Rational>(pow(t, 3) * (t - RatPoly::constant(4)), t - RatPoly::constant(1));
}

std::pair<QMap, QMap> node_pair_maps() {
  const QuadPoly t = QuadPoly::variable();
  const QScalar s = QScalar::generator(sqrt3_field());
  const QuadPoly zeros = pow(t, 2) * pow(t - QuadPoly::constant(1), 2);
  const QuadPoly first_den =
      QuadPoly({QScalar(1) + s, QScalar(-2)}) * pow(QuadPoly({s - QScalar(3), QScalar(6)}), 3);
  QMap first(QScalar(48) * s * zeros, first_den);
  QMap second(zeros, QuadPoly::linear(in_sqrt3(Rational(1, 2), Rational(1, 4))));
  return {std::move(first), std::move(second)};
}

Mobius<QScalar> node_pair_tau() {
  const QScalar beta = in_sqrt3(Rational(1, 2), Rational(-1, 6));
  return {QScalar(1) - beta, QScalar(0), QScalar(1), -beta};
}

std::pair<QMap, QMap> deg3_maps() {
  const QScalar r = in_sqrt_minus3(Rational(1, 2), Rational(-1, 6));
  const QScalar r_bar = r.conjugate();
  QMap f = QMap::polynomial(pow(QuadPoly::linear(r), 3));
  QMap f_tilde = QMap::polynomial(QScalar(-1) * pow(QuadPoly::linear(r_bar), 3));
  return {std::move(f), std::move(f_tilde)};
}

CheckReport check_f1_map() {
  const std::string cite = "f1(t) = t^3(t-4)/(t-1), degree-4 case (i)";
  CheckReport report;
  const auto f = f1_map();
  const RatPoly t = RatPoly::variable();

  const auto scheme = ram_scheme(f);
  const RatPoly expected = RatPoly::constant(3) * pow(t, 2) * pow(t - RatPoly::constant(2), 2);
  report.add("critical scheme 3t^2(t-2)^2", cite, scheme.finite_part == expected,
             "p'q - pq' = " + to_string(scheme.finite_part));
  report.add("triple point at infinity", cite, scheme.infinity_index == 3,
             "index " + std::to_string(scheme.infinity_index));

  const auto points = critical_points(f);
  bool only_triples = points.size() == 3;
  for (const auto& p : points) only_triples = only_triples && p.index == 3;
  report.add("finite critical points exactly {0, 2}, both triple", cite, only_triples, critical_summary(f));

  add_profile(report, "f1", f, ProjPoint<Rational>(Rational(0)), {3, 1}, cite);
  add_profile(report, "f1", f, ProjPoint<Rational>(Rational(-16)), {3, 1}, cite);
  add_profile(report, "f1", f, ProjPoint<Rational>(Infinity{}), {3, 1}, cite);

  const RatPoly fiber = f.numerator() + RatPoly::constant(16) * f.denominator();
  const RatPoly cube = pow(t - RatPoly::constant(2), 3) * (t + RatPoly::constant(2));
  const RatPoly quartic({Rational(-16), Rational(16), Rational(0), Rational(-4), Rational(1)});
  report.add("(t-2)^3(t+2) = t^4-4t^3+16t-16 = num + 16 den", cite, cube == quartic && fiber == quartic,
             "num + 16 den = " + to_string(fiber));

  const auto lhs = precompose(f, Mobius<Rational>{Rational(-1), Rational(2), Rational(0), Rational(1)});
  const auto rhs = postcompose(Mobius<Rational>{Rational(-1), Rational(-16), Rational(0), Rational(1)}, f);
  report.add("f1(2-t) = -f1(t) - 16", cite, lhs == rhs, "f1(2-t) = " + to_string(lhs));

  add_riemann_hurwitz(report, "f1", f, cite);
  return report;
}

CheckReport check_node_pair_maps() {
  const std::string cite = "degree-4 case (ii): the two maps with f^*(B) = 2U + 2V";
  CheckReport report;
  const auto [first, second] = node_pair_maps();
  const QScalar zero(0), one(1);
  const QScalar beta = in_sqrt3(Rational(1, 2), Rational(-1, 6));
  const std::vector<QScalar> marked{zero, one};

  for (const auto* entry : {&first, &second}) {
    const QMap& f = *entry;
    const std::string label = entry == &first ? "pair f1" : "pair f1~";
    add_profile(report, label, f, ProjPoint<QScalar>(zero), {2, 2}, cite);
    const unsigned at0 = vanishing_order(f, ProjPoint<QScalar>(zero), ProjPoint<QScalar>(zero));
    const unsigned at1 = vanishing_order(f, ProjPoint<QScalar>(zero), ProjPoint<QScalar>(one));
    report.add(label + ": double zeros at 0 and 1", cite, at0 == 2 && at1 == 2,
               "orders " + std::to_string(at0) + ", " + std::to_string(at1));

    const ProjPoint<QScalar> pole = entry == &first ? ProjPoint<QScalar>(beta) : ProjPoint<QScalar>(Infinity{});
    const unsigned pole_order = vanishing_order(f, ProjPoint<QScalar>(Infinity{}), pole);
    report.add(label + ": triple pole at " + to_string(pole), cite, pole_order == 3,
               "pole order " + std::to_string(pole_order));

    const IndexCount counts = count_outside(f, marked);
    report.add(label + ": one further triple point, no simple ramification", cite,
               counts.simple == 0 && counts.other == 0 && counts.triple == 2, critical_summary(f));
    add_riemann_hurwitz(report, label, f, cite);
  }

  const Mobius<QScalar> tau = node_pair_tau();
  const QMap tau_map(QuadPoly({tau.b, tau.a}), QuadPoly({tau.d, tau.c}));
  const bool tau_ok = tau_map(zero) == ProjPoint<QScalar>(zero) && tau_map(one) == ProjPoint<QScalar>(one) &&
                      tau_map.at_infinity() == ProjPoint<QScalar>(in_sqrt3(Rational(1, 2), Rational(1, 6))) &&
                      tau_map(beta) == ProjPoint<QScalar>(Infinity{});
  report.add("tau fixes 0, 1 and swaps the designated points", cite, tau_ok,
             "tau(t) = " + to_string(tau_map));

  const QMap composed = precompose(second, tau);
  std::string relation;
  bool found = false;
  if (composed == first) {
    relation = "f1~ o tau = f1 exactly";
    found = true;
  } else {
    // Look for a constant correction c with f1 = c * (f1~ o tau).
    const auto ratio = divmod(first.numerator() * composed.denominator(),
                              first.denominator() * composed.numerator());
    if (ratio.second.is_zero() && ratio.first.degree() == std::optional<std::size_t>(0)) {
      relation = "f1 = (" + to_string(ratio.first.leading()) + ") * (f1~ o tau)";
      found = true;
    } else {
      relation = "no constant relation; f1~ o tau = " + to_string(composed);
    }
  }
  report.add("relation between f1~ o tau and f1", cite, found, relation);
  return report;
}

CheckReport check_deg3_maps() {
  const std::string cite = "degree-4 case (iii): cubic maps on R over Q(sqrt -3)";
  CheckReport report;
  const auto [f, f_tilde] = deg3_maps();
  const QScalar zero(0), one(1);

  for (const auto* entry : {&f, &f_tilde}) {
    const QMap& g = *entry;
    const std::string label = entry == &f ? "fR" : "fR~";
    report.add(label + ": U = 0 and V = 1 share a fiber", cite, g(one) == g(zero),
               "f(0) = " + to_string(g(zero)) + ", f(1) = " + to_string(g(one)));
    const auto points = critical_points(g);
    bool shape = points.size() == 2;
    std::size_t finite_triples = 0;
    for (const auto& p : points) {
      shape = shape && p.index == 3;
      if (std::holds_alternative<QScalar>(p.location)) ++finite_triples;
    }
    report.add(label + ": one finite triple point plus total ramification at infinity", cite,
               shape && finite_triples == 1, critical_summary(g));
    add_riemann_hurwitz(report, label, g, cite);
  }

  const QMap reflected = precompose(f, Mobius<QScalar>{QScalar(-1), QScalar(1), QScalar(0), QScalar(1)});
  report.add("fR(1-t) = fR~(t)", cite, reflected == f_tilde, "fR(1-t) = " + to_string(reflected));
  return report;
}

}  // namespace altcat::covers
