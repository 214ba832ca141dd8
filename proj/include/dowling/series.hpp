#pragma once

// Truncated formal power series, rational functions in t, and the generating
// function checks built on them: the exponential generating function of
// D_{m,r}(n;x,y), its two-variable form, and the terminating 2F1 ordinary
// generating function with a partial-fraction cross-check.

#include "dowling/exact.hpp"
#include "dowling/polynomial.hpp"
#include "dowling/triangles.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dowling {

/// sum_{n=0}^{N} a_n t^n + O(t^(N+1)).
class TruncatedSeries {
 public:
  /// Zero series of order N.
  explicit TruncatedSeries(std::size_t order);
  /// Takes ownership of coefficients; order is coeffs.size() - 1 (must be nonempty).
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// e^{ct}
  static TruncatedSeries exp_linear(const Rational& c, std::size_t order);
  /// 1/(1 - ct)
  static TruncatedSeries geometric(const Rational& c, std::size_t order);
  /// Expansion of a polynomial, truncated.
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries reciprocal() const;

  // Binary operations truncate to the smaller order.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries pow(const TruncatedSeries& base, std::size_t exponent);

enum class SeriesOp { add, mul, int_pow, exp_linear };

/// Dispatcher over the elementary series operations.
///  add, mul:    uses a and b
///  int_pow:     uses a and exponent
///  exp_linear:  uses scalar and order
struct SeriesOperands {
  std::optional<TruncatedSeries> a;
  std::optional<TruncatedSeries> b;
  std::size_t exponent = 0;
  Rational scalar = 0;
  std::size_t order = 0;
};
TruncatedSeries series_arith(SeriesOp op, const SeriesOperands& operands);

/// num/den over Rational, reduced by the polynomial gcd and scaled so the
/// lowest nonzero coefficient of the denominator is 1.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Rational& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator does not vanish at t = 0.
  bool expandable() const { return den_[0] != 0; }
  /// Power series at t = 0; throws std::domain_error when not expandable().
  TruncatedSeries expand(std::size_t order) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rational& c);
  friend RationalFunction operator+(const RationalFunction& a, const Rational& c);

  /// Cross-multiplied polynomial identity.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// {"num": [...], "den": [...]} with "p/q" strings, lowest degree first.
  std::string to_json() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// f (f+1) ... (f+k-1); the constant 1 when k = 0.
RationalFunction rf_pochhammer(const RationalFunction& f, std::size_t k);

/// sum_{k=0}^{xdeg} <a>_k <-xdeg>_k / <c>_k * z^k / k!, reduced to a single
/// rational function. Throws std::domain_error if some <c>_k it needs is
/// identically zero.
RationalFunction hyp2f1_terminating(const RationalFunction& a, std::size_t xdeg,
                                    const RationalFunction& c, const Rational& z);

/// Scalar form: 2F1(a, -xdeg; c | z).
Rational hyp2f1_terminating(const Rational& a, std::size_t xdeg, const Rational& c,
                            const Rational& z);

/// Outcome of comparing two coefficient sequences.
struct SeriesVerdict {
  bool holds = true;
  std::vector<Rational> expected;
  std::vector<Rational> actual;
  std::optional<std::size_t> first_mismatch;
};

/// The t^n coefficient of e^{rt}[1 + y(e^{mt}-1)/m]^x (built by the finite
/// binomial expansion) against D_{m,r}(n;x,y)/n!, for n <= order.
TruncatedSeries dowling_egf_series(const WhitneyParams& params, const Rational& x,
                                   const Rational& y, std::size_t order);
SeriesVerdict egf_check(const WhitneyParams& params, const Rational& x, const Rational& y,
                        std::size_t order);

/// Coefficients of u^a v^b, a <= A, b <= B.
class BiSeries {
 public:
  BiSeries(std::size_t order_u, std::size_t order_v);

  /// f(u+v) from the single-variable series f(t); needs f.order() >= A + B.
  static BiSeries substitute_sum(const TruncatedSeries& f, std::size_t order_u,
                                 std::size_t order_v);

  std::size_t order_u() const { return order_u_; }
  std::size_t order_v() const { return order_v_; }
  const Rational& at(std::size_t a, std::size_t b) const;
  Rational& at(std::size_t a, std::size_t b);

 private:
  std::size_t order_u_;
  std::size_t order_v_;
  std::vector<Rational> cells_;
};

struct BiSeriesVerdict {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

/// u^a v^b coefficient of e^{r(u+v)}[1 + y(e^{m(u+v)}-1)/m]^x against
/// D_{m,r}(a+b;x,y)/(a! b!).
BiSeriesVerdict egf_two_variable_check(const WhitneyParams& params, const Rational& x,
                                       const Rational& y, std::size_t order_u,
                                       std::size_t order_v);

/// 1/(1-rt) ((m-y)/m)^x 2F1((rt-1)/(mt), -x; ((m+r)t-1)/(mt) | y/(y-m)), reduced.
/// Requires y != m and x a nonnegative integer.
RationalFunction ogf_hypergeometric_rf(const WhitneyParams& params, const Rational& x,
                                       const Rational& y);
TruncatedSeries ogf_hypergeometric(const WhitneyParams& params, const Rational& x,
                                   const Rational& y, std::size_t order);

/// sum_i C(x,i) (y/m)^i (1-y/m)^(x-i) / (1 - (mi+r)t), expanded.
TruncatedSeries ogf_partial_fractions(const WhitneyParams& params, const Rational& x,
                                      const Rational& y, std::size_t order);

/// 1/(m^k (1-rt)) * (-1)^k / <((m+r)t-1)/(mt)>_k, the ordinary generating
/// function of column k of the W_{m,r} triangle.
RationalFunction whitney_ogf_rf(const WhitneyParams& params, std::size_t k);
TruncatedSeries whitney_ogf(const WhitneyParams& params, std::size_t k, std::size_t order);

/// ["p/q", ...]
std::string series_to_json(const TruncatedSeries& s);

}  // namespace dowling
