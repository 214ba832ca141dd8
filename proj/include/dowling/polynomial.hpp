#pragma once

#include "dowling/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace dowling {

/// Dense univariate polynomial over Rational. coeffs()[i] multiplies t^i.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * t^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Coefficient of t^i, zero past the end.
  Rational operator[](std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }
  /// Index of the lowest nonzero coefficient. Requires a nonzero polynomial.
  std::size_t valuation() const;

  Rational eval(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                                  const Polynomial& den);
  /// Monic greatest common divisor (zero when both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, std::size_t exponent);

}  // namespace dowling
