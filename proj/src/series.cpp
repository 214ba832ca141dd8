#include "dowling/series.hpp"

#include "dowling/dowling.hpp"
#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace dowling {

namespace {

std::size_t require_natural(const Rational& x) {
  if (!is_integer(x) || x < 0 || !x.get_num().fits_ulong_p()) {
    throw std::invalid_argument("x must be a nonnegative integer, got " + to_string(x));
  }
  return x.get_num().get_ui();
}

nlohmann::ordered_json rational_array(const std::vector<Rational>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs order >= 0");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries out(order);
  out.coeffs_[0] = c;
  return out;
}

TruncatedSeries TruncatedSeries::exp_linear(const Rational& c, std::size_t order) {
  TruncatedSeries out(order);
  Rational term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    out.coeffs_[n] = term;
    term *= c;
    term /= n + 1;
  }
  return out;
}

TruncatedSeries TruncatedSeries::geometric(const Rational& c, std::size_t order) {
  TruncatedSeries out(order);
  Rational term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    out.coeffs_[n] = term;
    term *= c;
  }
  return out;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  TruncatedSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) out.coeffs_[n] = p[n];
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw std::domain_error("series reciprocal needs a nonzero constant term");
  TruncatedSeries out(order());
  const Rational inv = 1 / coeffs_[0];
  out.coeffs_[0] = inv;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc(0);
    for (std::size_t j = 1; j <= n; ++j) acc += coeffs_[j] * out.coeffs_[n - j];
    out.coeffs_[n] = -acc * inv;
  }
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

TruncatedSeries pow(const TruncatedSeries& base, std::size_t exponent) {
  TruncatedSeries out = TruncatedSeries::constant(1, base.order());
  for (std::size_t i = 0; i < exponent; ++i) out = out * base;
  return out;
}

TruncatedSeries series_arith(SeriesOp op, const SeriesOperands& operands) {
  auto need = [](const std::optional<TruncatedSeries>& s, const char* name) -> const TruncatedSeries& {
    if (!s) throw std::invalid_argument(std::string("series_arith: missing operand ") + name);
    return *s;
  };
  switch (op) {
    case SeriesOp::add:
      return need(operands.a, "a") + need(operands.b, "b");
    case SeriesOp::mul:
      return need(operands.a, "a") * need(operands.b, "b");
    case SeriesOp::int_pow:
      return pow(need(operands.a, "a"), operands.exponent);
    case SeriesOp::exp_linear:
      return TruncatedSeries::exp_linear(operands.scalar, operands.order);
  }
  throw std::invalid_argument("series_arith: unknown op");
}

std::string series_to_json(const TruncatedSeries& s) {
  return rational_array(s.coeffs()).dump();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  const Rational scale = 1 / den_[den_.valuation()];
  num_ *= scale;
  den_ *= scale;
}

TruncatedSeries RationalFunction::expand(std::size_t order) const {
  if (!expandable()) throw std::domain_error("rational function has a pole at t = 0");
  return TruncatedSeries::from_polynomial(num_, order) *
         TruncatedSeries::from_polynomial(den_, order).reciprocal();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction operator*(const RationalFunction& a, const Rational& c) {
  return {a.num_ * c, a.den_};
}

RationalFunction operator+(const RationalFunction& a, const Rational& c) {
  return {a.num_ + a.den_ * c, a.den_};
}

std::string RationalFunction::to_json() const {
  nlohmann::ordered_json out;
  out["num"] = rational_array(num_.coeffs());
  out["den"] = rational_array(den_.coeffs());
  return out.dump();
}

RationalFunction rf_pochhammer(const RationalFunction& f, std::size_t k) {
  RationalFunction out(1);
  for (std::size_t i = 0; i < k; ++i) out = out * (f + Rational(i));
  return out;
}

RationalFunction hyp2f1_terminating(const RationalFunction& a, std::size_t xdeg,
                                    const RationalFunction& c, const Rational& z) {
  RationalFunction sum(1);
  RationalFunction term(1);
  const Rational minus_x = -Rational(xdeg);
  for (std::size_t k = 1; k <= xdeg; ++k) {
    const RationalFunction c_factor = c + Rational(k - 1);
    if (c_factor.is_zero()) {
      throw std::domain_error("2F1 lower parameter hits a nonpositive integer");
    }
    term = term * (a + Rational(k - 1)) / c_factor * ((minus_x + (k - 1)) * z / k);
    sum = sum + term;
  }
  return sum;
}

Rational hyp2f1_terminating(const Rational& a, std::size_t xdeg, const Rational& c,
                            const Rational& z) {
  Rational sum(1);
  Rational term(1);
  const Rational minus_x = -Rational(xdeg);
  for (std::size_t k = 1; k <= xdeg; ++k) {
    const Rational c_factor = c + (k - 1);
    if (c_factor == 0) throw std::domain_error("2F1 lower parameter hits a nonpositive integer");
    term *= (a + (k - 1)) * (minus_x + (k - 1)) * z / (c_factor * k);
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Exponential generating functions

TruncatedSeries dowling_egf_series(const WhitneyParams& params, const Rational& x,
                                   const Rational& y, std::size_t order) {
  const std::size_t count = require_natural(x);
  const TruncatedSeries bracket =
      TruncatedSeries::exp_linear(params.m(), order) - TruncatedSeries::constant(1, order);
  const Rational scale = y / params.m();
  // e^{rt} sum_k C(x,k) (y/m)^k (e^{mt}-1)^k
  TruncatedSeries sum(order);
  TruncatedSeries bracket_power = TruncatedSeries::constant(1, order);
  Rational scale_power(1);
  for (std::size_t k = 0; k <= count; ++k) {
    sum = sum + bracket_power * (Rational(binomial(count, k)) * scale_power);
    bracket_power = bracket_power * bracket;
    scale_power *= scale;
  }
  return TruncatedSeries::exp_linear(params.r(), order) * sum;
}

SeriesVerdict egf_check(const WhitneyParams& params, const Rational& x, const Rational& y,
                        std::size_t order) {
  SeriesVerdict verdict;
  verdict.actual = dowling_egf_series(params, x, y, order).coeffs();
  const WhitneyTable table(params, order);
  for (std::size_t n = 0; n <= order; ++n) {
    const DowlingPoly d(params, table.row(n));
    verdict.expected.push_back(d.eval(x, y) / Rational(factorial(n)));
    if (verdict.holds && verdict.expected[n] != verdict.actual[n]) {
      verdict.holds = false;
      verdict.first_mismatch = n;
    }
  }
  return verdict;
}

BiSeries::BiSeries(std::size_t order_u, std::size_t order_v)
    : order_u_(order_u), order_v_(order_v), cells_((order_u + 1) * (order_v + 1)) {}

const Rational& BiSeries::at(std::size_t a, std::size_t b) const {
  if (a > order_u_ || b > order_v_) throw std::out_of_range("BiSeries index");
  return cells_[a * (order_v_ + 1) + b];
}

Rational& BiSeries::at(std::size_t a, std::size_t b) {
  if (a > order_u_ || b > order_v_) throw std::out_of_range("BiSeries index");
  return cells_[a * (order_v_ + 1) + b];
}

BiSeries BiSeries::substitute_sum(const TruncatedSeries& f, std::size_t order_u,
                                  std::size_t order_v) {
  if (f.order() < order_u + order_v) {
    throw std::invalid_argument("substitute_sum: series order below A + B");
  }
  // c_n (u+v)^n contributes c_n C(n,a) to u^a v^(n-a)
  BiSeries out(order_u, order_v);
  for (std::size_t a = 0; a <= order_u; ++a) {
    for (std::size_t b = 0; b <= order_v; ++b) {
      out.at(a, b) = f[a + b] * Rational(binomial(a + b, a));
    }
  }
  return out;
}

BiSeriesVerdict egf_two_variable_check(const WhitneyParams& params, const Rational& x,
                                       const Rational& y, std::size_t order_u,
                                       std::size_t order_v) {
  const std::size_t total = order_u + order_v;
  const BiSeries expanded =
      BiSeries::substitute_sum(dowling_egf_series(params, x, y, total), order_u, order_v);
  const WhitneyTable table(params, total);
  BiSeriesVerdict verdict;
  for (std::size_t a = 0; a <= order_u && verdict.holds; ++a) {
    for (std::size_t b = 0; b <= order_v; ++b) {
      const DowlingPoly d(params, table.row(a + b));
      const Rational expected = d.eval(x, y) / Rational(factorial(a) * factorial(b));
      if (expanded.at(a, b) != expected) {
        verdict.holds = false;
        verdict.first_mismatch = std::make_pair(a, b);
        break;
      }
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Ordinary generating functions

namespace {

// ((m+r)t - 1)/(mt)
RationalFunction lower_parameter(const WhitneyParams& params) {
  return {Polynomial{Rational(-1), params.m() + params.r()}, Polynomial{Rational(0), params.m()}};
}

// 1/(1 - rt)
RationalFunction geometric_rf(const Rational& r) {
  return {Polynomial::constant(1), Polynomial{Rational(1), -r}};
}

}  // namespace

RationalFunction ogf_hypergeometric_rf(const WhitneyParams& params, const Rational& x,
                                       const Rational& y) {
  const std::size_t count = require_natural(x);
  if (y == params.m()) {
    throw std::invalid_argument("2F1 generating function needs y != m");
  }
  const RationalFunction a(Polynomial{Rational(-1), params.r()},
                           Polynomial{Rational(0), params.m()});
  const RationalFunction c = lower_parameter(params);
  const Rational z = y / (y - params.m());
  const RationalFunction f = hyp2f1_terminating(a, count, c, z);
  return geometric_rf(params.r()) * f * power((params.m() - y) / params.m(), count);
}

TruncatedSeries ogf_hypergeometric(const WhitneyParams& params, const Rational& x,
                                   const Rational& y, std::size_t order) {
  const RationalFunction f = ogf_hypergeometric_rf(params, x, y);
  if (!f.expandable()) {
    throw std::logic_error("reduced 2F1 generating function kept a pole at t = 0");
  }
  return f.expand(order);
}

TruncatedSeries ogf_partial_fractions(const WhitneyParams& params, const Rational& x,
                                      const Rational& y, std::size_t order) {
  const std::size_t count = require_natural(x);
  const Rational p = y / params.m();
  const Rational q = 1 - p;
  TruncatedSeries sum(order);
  for (std::size_t i = 0; i <= count; ++i) {
    const Rational weight = Rational(binomial(count, i)) * power(p, i) * power(q, count - i);
    if (weight == 0) continue;
    sum = sum + TruncatedSeries::geometric(params.m() * i + params.r(), order) * weight;
  }
  return sum;
}

RationalFunction whitney_ogf_rf(const WhitneyParams& params, std::size_t k) {
  const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
  const RationalFunction poch = rf_pochhammer(lower_parameter(params), k);
  return geometric_rf(params.r()) * (sign / power(params.m(), k)) / poch;
}

TruncatedSeries whitney_ogf(const WhitneyParams& params, std::size_t k, std::size_t order) {
  return whitney_ogf_rf(params, k).expand(order);
}

}  // namespace dowling
