#include "dowling/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace dowling {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  if (negative) p = -p;
  Rational value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational power(const Rational& base, std::size_t exponent, ZeroPow convention) {
  if (exponent == 0) {
    if (base == 0 && convention == ZeroPow::zero) return Rational(0);
    return Rational(1);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // a^n / b^n stays in lowest terms with a positive denominator
  return out;
}

Integer factorial(std::size_t k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational falling_factorial(const Rational& x, std::size_t k) {
  Rational out(1);
  Rational factor = x;
  for (std::size_t i = 0; i < k; ++i) {
    out *= factor;
    factor -= 1;
  }
  return out;
}

Rational rising_factorial(const Rational& a, std::size_t k) {
  Rational out(1);
  Rational factor = a;
  for (std::size_t i = 0; i < k; ++i) {
    out *= factor;
    factor += 1;
  }
  return out;
}

Rational binomial_general(const Rational& x, std::size_t k) {
  Rational out = falling_factorial(x, k);
  out /= Rational(factorial(k));
  return out;
}

std::vector<Rational> binomial_invert(std::span<const Rational> seq,
                                      InversionDirection direction) {
  if (seq.empty()) throw std::invalid_argument("binomial_invert: empty sequence");
  const bool alternate = direction == InversionDirection::backward;
  std::vector<Rational> out(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational acc(0);
    for (std::size_t j = 0; j <= n; ++j) {
      Rational term = Rational(binomial(n, j)) * seq[j];
      if (alternate && (n - j) % 2 == 1) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    out[n] = acc;
  }
  return out;
}

}  // namespace dowling
