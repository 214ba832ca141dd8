#pragma once

// Bivariate r-Dowling polynomials D_{m,r}(n;x,y) = sum_k W_{m,r}(n,k) (x)_k y^k
// and the Bell / r-Bell / univariate Dowling families they specialise to.

#include "dowling/exact.hpp"
#include "dowling/polynomial.hpp"
#include "dowling/triangles.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dowling {

/// D_{m,r}(n;x,y) on the basis {(x)_k y^k}; coeffs()[k] = W_{m,r}(n,k).
/// Never expanded to monomials in x.
class DowlingPoly {
 public:
  DowlingPoly(WhitneyParams params, std::vector<Rational> coeffs);

  const WhitneyParams& params() const { return params_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x, const Rational& y) const;

  /// {"m": "p/q", "r": "p/q", "n": n, "coeffs": ["p/q", ...]}
  std::string to_json() const;

 private:
  WhitneyParams params_;
  std::vector<Rational> coeffs_;
};

/// Polynomial in u = 1/x used to take x -> infinity limits exactly.
using UPoly = Polynomial;

DowlingPoly dowling_bivariate(const WhitneyParams& params, std::size_t n);
DowlingPoly dowling_bivariate(WhitneyCache& cache, const WhitneyParams& params,
                              std::size_t n);

/// sum_k c_k (x)_k y^k
Rational eval_poly(const DowlingPoly& p, const Rational& x, const Rational& y);

/// sum_k W_{m,r}(n,k)
Rational dowling_number(const WhitneyParams& params, std::size_t n);

enum class Specialization {
  bell_number,
  bell_poly,
  bell_bivariate,
  rbell_number,
  rbell_poly,
  rbell_bivariate,
  dowling_univariate,
};

/// Accepts the kebab-case names ("bell-number", ...). Throws on unknown names.
Specialization parse_specialization(std::string_view name);

struct SpecializeArgs {
  std::size_t n = 0;
  Rational m = 1;  // dowling-univariate only
  Rational r = 0;  // r-Bell and dowling-univariate
  Rational x = 1;  // polynomial variable (or first bivariate variable)
  Rational y = 1;  // second bivariate variable
};

Rational specialize(Specialization variant, const SpecializeArgs& args);

/// sum_{i=0}^{x} C(x,i) (mi+r)^n (y/m)^i (1-y/m)^(x-i).
/// Throws std::invalid_argument unless x is a nonnegative integer.
Rational explicit_eval(const WhitneyParams& params, std::size_t n, const Rational& x,
                       const Rational& y);

enum class ShiftDirection { up, down };

/// up:   sum_j C(n,j) D_{m,r}(j;x,y)            (equals D_{m,r+1}(n;x,y))
/// down: sum_j (-1)^(n-j) C(n,j) D_{m,r+1}(j;x,y) (equals D_{m,r}(n;x,y))
Rational shift_r(const WhitneyParams& params, std::size_t n, const Rational& x,
                 const Rational& y, ShiftDirection direction);

/// Coefficientwise form of shift_r: the basis coefficients of the shifted sum.
DowlingPoly shift_r_poly(const WhitneyParams& params, std::size_t n,
                         ShiftDirection direction);

/// Decides p == q by comparing stored coefficients and, independently, by
/// evaluating both at degree+1 distinct x values for the given y.
bool same_polynomial(const DowlingPoly& p, const DowlingPoly& q, const Rational& y);

struct ConvexityVerdict {
  bool holds = true;
  /// D(0..nmax; x, y)
  std::vector<Rational> values;
  /// Smallest n with D(n+1) > (D(n) + D(n+2))/2, if any.
  std::optional<std::size_t> first_violation;
};

/// Checks D(n+1) <= (D(n) + D(n+2))/2 for n = 0..nmax-2.
/// Requires m > 0, r >= 0, 0 <= y <= m and x a nonnegative integer;
/// throws std::invalid_argument outside that domain.
ConvexityVerdict convexity_check(const WhitneyParams& params, const Rational& x,
                                 const Rational& y, std::size_t nmax);

/// D(n; x, y/x) with x = 1/u: sum_k W(n,k) y^k prod_{i=1}^{k-1} (1 - i u).
/// The constant term is the univariate value D_{m,r}(n; y).
UPoly limit_reduction(const WhitneyParams& params, std::size_t n, const Rational& y);

/// prod_{i=shift}^{shift+k-1} (1 - i u): the u-form of (x-shift)_k / x^k.
UPoly falling_ratio_in_u(std::size_t shift, std::size_t k);

}  // namespace dowling
