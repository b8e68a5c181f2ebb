#include "altcat/exact/rational.hpp"

#include <stdexcept>

namespace altcat {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    return make_rational(Integer(std::string(text.substr(0, slash))),
                         Integer(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (sgn(value) < 0) {
    return std::nullopt;
  }
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer num_root;
  Integer den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  return make_rational(num_root, den_root);
}

Integer integer_root(const Integer& value, unsigned long k) {
  if (sgn(value) < 0 || k == 0) {
    throw std::domain_error("integer_root needs value >= 0 and k >= 1");
  }
  Integer root;
  mpz_root(root.get_mpz_t(), value.get_mpz_t(), k);
  return root;
}

std::string root_decimal(const Integer& value, unsigned long k, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits) * k);
  const Integer scaled_root = integer_root(value * scale, k);
  std::string text = scaled_root.get_str();
  if (digits == 0) {
    return text;
  }
  if (text.size() <= digits) {
    text.insert(0, digits + 1 - text.size(), '0');
  }
  text.insert(text.size() - digits, ".");
  return text;
}

}  // namespace altcat
