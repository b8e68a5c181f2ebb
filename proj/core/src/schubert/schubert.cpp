#include "altcat/schubert/schubert.hpp"

#include <stdexcept>

#include "altcat/exact/combinatorics.hpp"

namespace altcat::schubert {

Partition2::Partition2(unsigned first, unsigned second) : a(first), b(second) {
  if (first < second) throw std::invalid_argument("partition rows must be non-increasing");
}

SchubertVector::SchubertVector(unsigned n) : n_(n) {
  if (n < 2) throw std::invalid_argument("G(2,n) needs n >= 2");
}

SchubertVector SchubertVector::one(unsigned n) { return basis(n, 0, 0); }

SchubertVector SchubertVector::basis(unsigned n, unsigned a, unsigned b, const Integer& coeff) {
  SchubertVector v(n);
  v.add_term(Partition2(a, b), coeff);
  return v;
}

Integer SchubertVector::coefficient(const Partition2& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchubertVector::add_term(const Partition2& p, const Integer& coeff) {
  if (p.a > box() || coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void SchubertVector::check_same_space(const SchubertVector& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("classes live in G(2," + std::to_string(n_) + ") and G(2," +
                                std::to_string(other.n_) + ")");
  }
}

SchubertVector& SchubertVector::operator+=(const SchubertVector& other) {
  check_same_space(other);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SchubertVector& SchubertVector::operator-=(const SchubertVector& other) {
  check_same_space(other);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SchubertVector operator*(const Integer& scalar, const SchubertVector& v) {
  SchubertVector out(v.n_);
  for (const auto& [p, c] : v.terms_) out.add_term(p, scalar * c);
  return out;
}

SchubertVector pieri_special(const SchubertVector& v, unsigned c) {
  SchubertVector out(v.n());
  for (const auto& [p, coeff] : v.terms()) {
    // Horizontal strips: b' = b + j stays under the old first row.
    for (unsigned j = 0; j <= c && p.b + j <= p.a; ++j) {
      const unsigned a_new = p.a + c - j;
      if (a_new > v.box()) continue;
      out.add_term(Partition2(a_new, p.b + j), coeff);
    }
  }
  return out;
}

SchubertVector giambelli(unsigned a, unsigned b, unsigned n) {
  if (a < b) throw std::invalid_argument("giambelli needs a >= b");
  if (n < 2 || a > n - 2) {
    throw std::invalid_argument("sigma_{" + std::to_string(a) + "," + std::to_string(b) +
                                "} does not fit in G(2," + std::to_string(n) + ")");
  }
  const SchubertVector one = SchubertVector::one(n);
  SchubertVector out = pieri_special(pieri_special(one, a), b);
  if (b > 0) out -= pieri_special(pieri_special(one, a + 1), b - 1);
  return out;
}

namespace {

// sigma_{a,b} * x = sigma_b (sigma_a x) - sigma_{b-1} (sigma_{a+1} x).
SchubertVector multiply_basis(const Partition2& p, const SchubertVector& x) {
  SchubertVector out = pieri_special(pieri_special(x, p.a), p.b);
  if (p.b > 0) out -= pieri_special(pieri_special(x, p.a + 1), p.b - 1);
  return out;
}

}  // namespace

SchubertVector multiply(const SchubertVector& v, const SchubertVector& w) {
  if (v.n() != w.n()) {
    throw std::invalid_argument("multiply: classes live in different Grassmannians");
  }
  SchubertVector out(v.n());
  for (const auto& [p, c] : v.terms()) out += c * multiply_basis(p, w);
  return out;
}

SchubertVector power(const SchubertVector& v, unsigned exponent) {
  SchubertVector result = SchubertVector::one(v.n());
  SchubertVector square = v;
  while (exponent != 0) {
    if (exponent & 1U) result = multiply(result, square);
    exponent >>= 1U;
    if (exponent != 0) square = multiply(square, square);
  }
  return result;
}

Integer top_eval(const SchubertVector& v) {
  const unsigned top = v.box();
  for (const auto& [p, c] : v.terms()) {
    if (p.size() != 2 * top) {
      throw std::invalid_argument("top_eval of a class with a term of degree " +
                                  std::to_string(p.size()) + " (top degree is " +
                                  std::to_string(2 * top) + ")");
    }
  }
  return v.coefficient(Partition2(top, top));
}

Integer grassmannian_degree(unsigned n) {
  const SchubertVector sigma1 = SchubertVector::basis(n, 1, 0);
  return top_eval(power(sigma1, 2 * (n - 2)));
}

Integer sigma12_power(unsigned g, unsigned m) {
  if (m > 2 * g) throw std::invalid_argument("sigma12_power needs m <= 2g");
  const unsigned n = 2 * g + 2;
  const SchubertVector sigma1 = SchubertVector::basis(n, 1, 0);
  const SchubertVector sigma2 = SchubertVector::basis(n, 2, 0);
  return top_eval(multiply(power(sigma1, 2 * m), power(sigma2, 2 * g - m)));
}

Integer mixed_power_rhs(unsigned g, unsigned m) {
  if (m > 2 * g) throw std::invalid_argument("mixed_power_rhs needs m <= 2g");
  const unsigned top = 2 * g - m;
  Integer sum;
  for (unsigned i = 0; i <= top; ++i) {
    const Integer term = binom_int(top, i) * catalan(2 * g - i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer alt_catalan_schubert(unsigned g, const Integer& n4, const Integer& n5) {
  const unsigned n = 2 * g + 2;
  const SchubertVector base =
      SchubertVector::basis(n, 4, 0, n4) + SchubertVector::basis(n, 3, 1, n5);
  return top_eval(power(base, g));
}

std::string to_string(const SchubertVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    const auto& [p, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Integer mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += "s(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  }
  return out;
}

}  // namespace altcat::schubert
