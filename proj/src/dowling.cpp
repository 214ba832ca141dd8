#include "dowling/dowling.hpp"

#include "json.hpp"

#include <stdexcept>

namespace dowling {

namespace {

std::size_t require_natural(const Rational& x, const char* what) {
  if (!is_integer(x) || x < 0 || !x.get_num().fits_ulong_p()) {
    throw std::invalid_argument(std::string(what) +
                                " must be a nonnegative integer, got " + to_string(x));
  }
  return x.get_num().get_ui();
}

// sum_k c_k (x)_k y^k with the basis element built incrementally.
Rational eval_on_basis(const std::vector<Rational>& coeffs, const Rational& x,
                       const Rational& y) {
  Rational acc(0);
  Rational basis(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) basis *= (x - (k - 1)) * y;
    if (basis == 0) break;  // (x)_k vanishes from here on, or y = 0
    acc += coeffs[k] * basis;
  }
  return acc;
}

}  // namespace

DowlingPoly::DowlingPoly(WhitneyParams params, std::vector<Rational> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("DowlingPoly needs at least one coefficient");
}

Rational DowlingPoly::eval(const Rational& x, const Rational& y) const {
  return eval_on_basis(coeffs_, x, y);
}

std::string DowlingPoly::to_json() const {
  nlohmann::ordered_json out;
  out["m"] = to_string(params_.m());
  out["r"] = to_string(params_.r());
  out["n"] = degree();
  auto& coeffs = out["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) coeffs.push_back(to_string(c));
  return out.dump();
}

DowlingPoly dowling_bivariate(const WhitneyParams& params, std::size_t n) {
  const WhitneyTable table(params, n);
  return DowlingPoly(params, table.row(n));
}

DowlingPoly dowling_bivariate(WhitneyCache& cache, const WhitneyParams& params,
                              std::size_t n) {
  return DowlingPoly(params, cache.table(params, n).row(n));
}

Rational eval_poly(const DowlingPoly& p, const Rational& x, const Rational& y) {
  return p.eval(x, y);
}

Rational dowling_number(const WhitneyParams& params, std::size_t n) {
  const WhitneyTable table(params, n);
  Rational sum(0);
  for (const auto& w : table.row(n)) sum += w;
  return sum;
}

Specialization parse_specialization(std::string_view name) {
  if (name == "bell-number") return Specialization::bell_number;
  if (name == "bell-poly") return Specialization::bell_poly;
  if (name == "bell-bivariate") return Specialization::bell_bivariate;
  if (name == "rbell-number") return Specialization::rbell_number;
  if (name == "rbell-poly") return Specialization::rbell_poly;
  if (name == "rbell-bivariate") return Specialization::rbell_bivariate;
  if (name == "dowling-univariate") return Specialization::dowling_univariate;
  throw std::invalid_argument("unknown specialization '" + std::string(name) + "'");
}

Rational specialize(Specialization variant, const SpecializeArgs& args) {
  // power-basis sum sum_k W(n,k) x^k
  auto univariate = [&](const WhitneyParams& params, const Rational& x) {
    const WhitneyTable table(params, args.n);
    Rational acc(0);
    Rational xk(1);
    for (const auto& w : table.row(args.n)) {
      acc += w * xk;
      xk *= x;
    }
    return acc;
  };
  switch (variant) {
    case Specialization::bell_number:
      return univariate(WhitneyParams(1, 0), 1);
    case Specialization::bell_poly:
      return univariate(WhitneyParams(1, 0), args.x);
    case Specialization::bell_bivariate:
      return dowling_bivariate(WhitneyParams(1, 0), args.n).eval(args.x, args.y);
    case Specialization::rbell_number:
      return univariate(WhitneyParams(1, args.r), 1);
    case Specialization::rbell_poly:
      return univariate(WhitneyParams(1, args.r), args.x);
    case Specialization::rbell_bivariate:
      return dowling_bivariate(WhitneyParams(1, args.r), args.n).eval(args.x, args.y);
    case Specialization::dowling_univariate:
      return univariate(WhitneyParams(args.m, args.r), args.x);
  }
  throw std::invalid_argument("unknown specialization");
}

Rational explicit_eval(const WhitneyParams& params, std::size_t n, const Rational& x,
                       const Rational& y) {
  const std::size_t count = require_natural(x, "x");
  const Rational p = y / params.m();
  const Rational q = 1 - p;
  Rational sum(0);
  for (std::size_t i = 0; i <= count; ++i) {
    sum += Rational(binomial(count, i)) * power(params.m() * i + params.r(), n) *
           power(p, i) * power(q, count - i);
  }
  return sum;
}

Rational shift_r(const WhitneyParams& params, std::size_t n, const Rational& x,
                 const Rational& y, ShiftDirection direction) {
  const WhitneyParams source = direction == ShiftDirection::up ? params : params.shifted(1);
  const WhitneyTable table(source, n);
  Rational sum(0);
  for (std::size_t j = 0; j <= n; ++j) {
    Rational term = Rational(binomial(n, j)) * eval_on_basis(table.row(j), x, y);
    if (direction == ShiftDirection::down && (n - j) % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

DowlingPoly shift_r_poly(const WhitneyParams& params, std::size_t n,
                         ShiftDirection direction) {
  const WhitneyParams source = direction == ShiftDirection::up ? params : params.shifted(1);
  const WhitneyParams target = direction == ShiftDirection::up ? params.shifted(1) : params;
  const WhitneyTable table(source, n);
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const bool negate = direction == ShiftDirection::down && (n - j) % 2 == 1;
    const Rational weight = negate ? Rational(-binomial(n, j)) : Rational(binomial(n, j));
    for (std::size_t k = 0; k <= j; ++k) coeffs[k] += weight * table.at(j, k);
  }
  return DowlingPoly(target, std::move(coeffs));
}

bool same_polynomial(const DowlingPoly& p, const DowlingPoly& q, const Rational& y) {
  const bool coefficientwise = p.coeffs() == q.coeffs();
  const std::size_t points = std::max(p.degree(), q.degree()) + 1;
  bool pointwise = true;
  for (std::size_t i = 0; i < points && pointwise; ++i) {
    // non-integer nodes so the falling factorials do not collapse
    const Rational x = Rational(2 * i + 1, 2);
    pointwise = p.eval(x, y) == q.eval(x, y);
  }
  return coefficientwise && pointwise;
}

ConvexityVerdict convexity_check(const WhitneyParams& params, const Rational& x,
                                 const Rational& y, std::size_t nmax) {
  if (params.m() <= 0) throw std::invalid_argument("convexity_check requires m > 0");
  if (params.r() < 0) throw std::invalid_argument("convexity_check requires r >= 0");
  if (y < 0 || y > params.m()) {
    throw std::invalid_argument("convexity_check requires 0 <= y <= m");
  }
  require_natural(x, "x");

  ConvexityVerdict verdict;
  const WhitneyTable table(params, nmax);
  verdict.values.reserve(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    verdict.values.push_back(eval_on_basis(table.row(n), x, y));
  }
  for (std::size_t n = 0; n + 2 <= nmax; ++n) {
    const auto& v = verdict.values;
    if (2 * v[n + 1] > v[n] + v[n + 2]) {
      verdict.holds = false;
      verdict.first_violation = n;
      break;
    }
  }
  return verdict;
}

UPoly falling_ratio_in_u(std::size_t shift, std::size_t k) {
  UPoly out = UPoly::constant(1);
  for (std::size_t i = shift; i < shift + k; ++i) {
    if (i == 0) continue;
    out = out * UPoly{Rational(1), Rational(-static_cast<long>(i))};
  }
  return out;
}

UPoly limit_reduction(const WhitneyParams& params, std::size_t n, const Rational& y) {
  const WhitneyTable table(params, n);
  UPoly out;
  Rational yk(1);
  for (std::size_t k = 0; k <= n; ++k) {
    out += falling_ratio_in_u(0, k) * (table.at(n, k) * yk);
    yk *= y;
  }
  return out;
}

}  // namespace dowling
