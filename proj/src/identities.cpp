#include "dowling/identities.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dowling {

namespace {

constexpr std::array kCatalog = {
    CatalogEntry{"spivey-first", "first-form generalized Spivey, bivariate", Scope::general,
                 Shape::spivey_bivariate},
    CatalogEntry{"spivey-first-numbers", "first-form generalized Spivey, r-Dowling numbers",
                 Scope::general, Shape::spivey_numbers},
    CatalogEntry{"spivey-second", "second-form generalized Spivey, bivariate", Scope::general,
                 Shape::spivey_bivariate, 0,
                 "inner term carries m^i: B_i(x-k,y/m) is the coefficient of (mv)^i/i!"},
    CatalogEntry{"spivey-second-numbers", "second-form generalized Spivey, r-Dowling numbers",
                 Scope::general, Shape::spivey_numbers, 0,
                 "inner term carries m^i, i.e. m^i B_i(1/m)"},
    CatalogEntry{"spivey-classic", "Spivey's Bell number recurrence", Scope::bell,
                 Shape::spivey_numbers},
    CatalogEntry{"bell-sum", "Bell numbers as sums of Stirling numbers vs enumeration",
                 Scope::bell, Shape::index_n},
    CatalogEntry{"bell-rec", "B_{n+1} = sum_k C(n,k) B_k", Scope::bell, Shape::index_n, 1},
    CatalogEntry{"gould-quaintance", "Spivey formula for Bell polynomials", Scope::bell,
                 Shape::spivey_univariate, 0, "trailing factor read as x^k"},
    CatalogEntry{"zheng-li-bivariate", "Spivey formula for bivariate Bell polynomials",
                 Scope::bell, Shape::spivey_bivariate},
    CatalogEntry{"zheng-li-r1", "first-form Spivey for bivariate r-Bell polynomials",
                 Scope::r_bell, Shape::spivey_bivariate},
    CatalogEntry{"zheng-li-r2", "second-form Spivey for bivariate r-Bell polynomials",
                 Scope::r_bell, Shape::spivey_bivariate},
    CatalogEntry{"mezo-r1", "first-form Spivey for r-Bell numbers", Scope::r_bell,
                 Shape::spivey_numbers},
    CatalogEntry{"mezo-r2", "second-form Spivey for r-Bell numbers", Scope::r_bell,
                 Shape::spivey_numbers},
    CatalogEntry{"mangontarum-univariate", "first-form Spivey for r-Dowling polynomials",
                 Scope::general, Shape::spivey_univariate, 0, "Whitney factor read as W(l,k)"},
    CatalogEntry{"conclusion-defining", "first form at n = 0 is the defining sum",
                 Scope::general, Shape::bivariate_ell, 0, "Whitney factor read as W(l,k)"},
    CatalogEntry{"conclusion-recurrence", "first form at l = 1", Scope::general,
                 Shape::bivariate_n, 1,
                 "keeps the k = 0 term r D(n;x,y), which the printed recurrence drops "
                 "(it vanishes only at r = 0)"},
    CatalogEntry{"conclusion-bell-bivariate", "B_{n+1}(x,y) = sum_i C(n,i) B_i(x-1,y) xy",
                 Scope::bell, Shape::bivariate_n, 1, "B_i(x-1) read as B_i(x-1,y)"},
    CatalogEntry{"shift-up", "D_{m,r+1}(n) = sum_j C(n,j) D_{m,r}(j)", Scope::general,
                 Shape::bivariate_n},
    CatalogEntry{"shift-down", "D_{m,r}(n) = sum_j (-1)^(n-j) C(n,j) D_{m,r+1}(j)",
                 Scope::general, Shape::bivariate_n},
    CatalogEntry{"rbell-shift", "r-shift recurrences for bivariate r-Bell polynomials",
                 Scope::r_bell, Shape::bivariate_n},
    CatalogEntry{"explicit-dowling", "binomial-weight explicit formula for D_{m,r}(n;x,y)",
                 Scope::general, Shape::bivariate_n},
    CatalogEntry{"explicit-rbell", "explicit formula for bivariate r-Bell polynomials",
                 Scope::r_bell, Shape::bivariate_n},
    CatalogEntry{"explicit-bell", "explicit formula for bivariate Bell polynomials", Scope::bell,
                 Shape::bivariate_n},
    CatalogEntry{"egf", "exponential generating function", Scope::general,
                 Shape::series_point},
    CatalogEntry{"ogf-2f1", "terminating 2F1 ordinary generating function", Scope::general,
                 Shape::series_point, 0, "defined for y != m only"},
    CatalogEntry{"whitney-ogf", "ordinary generating function of a W_{m,r} column",
                 Scope::general, Shape::column},
    CatalogEntry{"limit-first", "x -> oo limit of the first form (constant term in u = 1/x)",
                 Scope::general, Shape::spivey_univariate},
    CatalogEntry{"limit-second", "x -> oo limit of the second form (constant term in u = 1/x)",
                 Scope::general, Shape::spivey_univariate},
};

template <typename T>
const T& need(const std::optional<T>& value, const char* name, std::string_view id) {
  if (!value) {
    throw std::invalid_argument(std::string(id) + ": missing binding '" + name + "'");
  }
  return *value;
}

std::size_t natural(const Rational& x, std::string_view id) {
  if (!is_integer(x) || x < 0 || !x.get_num().fits_ulong_p()) {
    throw std::invalid_argument(std::string(id) + ": x must be a nonnegative integer");
  }
  return x.get_num().get_ui();
}

Rational sign(std::size_t exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

nlohmann::ordered_json instance_json(const IdentityInstance& inst) {
  nlohmann::ordered_json out;
  out["id"] = inst.id;
  out["bindings"] = inst.bindings.to_string();
  out["lhs"] = to_string(inst.lhs);
  out["rhs"] = to_string(inst.rhs);
  out["verdict"] = inst.passed() ? "pass" : "fail";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Bindings::to_string() const {
  std::ostringstream os;
  const char* sep = "";
  auto put = [&](const char* name, const std::string& value) {
    os << sep << name << '=' << value;
    sep = " ";
  };
  if (m) put("m", dowling::to_string(*m));
  if (r) put("r", dowling::to_string(*r));
  if (ell) put("l", std::to_string(*ell));
  if (n) put("n", std::to_string(*n));
  if (k) put("k", std::to_string(*k));
  if (x) put("x", dowling::to_string(*x));
  if (y) put("y", dowling::to_string(*y));
  if (variant) put("variant", *variant);
  return os.str();
}

IdentityInstance::IdentityInstance(std::string id_, Bindings bindings_, Rational lhs_,
                                   Rational rhs_)
    : id(std::move(id_)),
      bindings(std::move(bindings_)),
      lhs(std::move(lhs_)),
      rhs(std::move(rhs_)),
      verdict(lhs == rhs ? Verdict::pass : Verdict::fail) {}

std::span<const CatalogEntry> catalog() { return kCatalog; }

const CatalogEntry* find_entry(std::string_view id) {
  for (const auto& entry : kCatalog) {
    if (entry.id == id) return &entry;
  }
  return nullptr;
}

std::vector<std::string> all_identity_ids() {
  std::vector<std::string> ids;
  for (const auto& entry : kCatalog) ids.emplace_back(entry.id);
  return ids;
}

// ---------------------------------------------------------------------------
// IdentitySuite: the two evaluation routes

IdentitySuite::IdentitySuite(SuiteOptions options) : options_(options) {}

Rational IdentitySuite::display_pow(const Rational& base, std::size_t exponent) const {
  return power(base, exponent, options_.zero_pow);
}

Rational IdentitySuite::lhs_dowling(const WhitneyParams& params, std::size_t n,
                                    const Rational& x, const Rational& y) {
  return dowling_bivariate(lhs_tables_, params, n).eval(x, y);
}

Rational IdentitySuite::lhs_dowling_number(const WhitneyParams& params, std::size_t n) {
  Rational sum(0);
  for (const auto& w : lhs_tables_.table(params, n).row(n)) sum += w;
  return sum;
}

Rational IdentitySuite::lhs_univariate(const WhitneyParams& params, std::size_t n,
                                       const Rational& y) {
  Rational sum(0);
  Rational yk(1);
  for (const auto& w : lhs_tables_.table(params, n).row(n)) {
    sum += w * yk;
    yk *= y;
  }
  return sum;
}

const Rational& IdentitySuite::rhs_w(const WhitneyParams& params, std::size_t n,
                                     std::size_t k) {
  static const Rational zero(0);
  if (k > n) return zero;
  auto& rows = explicit_memo_[params];
  while (rows.size() <= n) {
    const std::size_t row = rows.size();
    std::vector<Rational> values(row + 1);
    for (std::size_t j = 0; j <= row; ++j) values[j] = whitney_explicit(params, row, j);
    rows.push_back(std::move(values));
  }
  return rows[n][k];
}

Rational IdentitySuite::rhs_dowling(const WhitneyParams& params, std::size_t n,
                                    const Rational& x, const Rational& y) {
  Rational sum(0);
  for (std::size_t k = 0; k <= n; ++k) {
    sum += rhs_w(params, n, k) * falling_factorial(x, k) * power(y, k);
  }
  return sum;
}

Rational IdentitySuite::rhs_dowling_number(const WhitneyParams& params, std::size_t n) {
  Rational sum(0);
  for (std::size_t k = 0; k <= n; ++k) sum += rhs_w(params, n, k);
  return sum;
}

Rational IdentitySuite::rhs_univariate(const WhitneyParams& params, std::size_t n,
                                       const Rational& y) {
  Rational sum(0);
  for (std::size_t k = 0; k <= n; ++k) sum += rhs_w(params, n, k) * power(y, k);
  return sum;
}

// ---------------------------------------------------------------------------
// Spivey forms

IdentityInstance IdentitySuite::check_spivey_first(const WhitneyParams& params,
                                                   std::size_t ell, std::size_t n,
                                                   const Rational& x, const Rational& y,
                                                   SpiveyMode mode) {
  const Rational& m = params.m();
  Bindings b{params.m(), params.r(), ell, n, std::nullopt, std::nullopt, std::nullopt, {}};
  Rational rhs(0);
  if (mode == SpiveyMode::bivariate) {
    b.x = x;
    b.y = y;
    for (std::size_t k = 0; k <= ell; ++k) {
      const Rational outer = rhs_w(params, ell, k) * falling_factorial(x, k) * power(y, k);
      if (outer == 0) continue;
      for (std::size_t i = 0; i <= n; ++i) {
        rhs += display_pow(m * k, n - i) * Rational(binomial(n, i)) * outer *
               rhs_dowling(params, i, x - k, y);
      }
    }
    return {"spivey-first", b, lhs_dowling(params, ell + n, x, y), rhs};
  }
  for (std::size_t k = 0; k <= ell; ++k) {
    const Rational& w = rhs_w(params, ell, k);
    for (std::size_t i = 0; i <= n; ++i) {
      rhs += display_pow(m * k, n - i) * Rational(binomial(n, i)) * w *
             rhs_dowling_number(params, i);
    }
  }
  return {"spivey-first-numbers", b, lhs_dowling_number(params, ell + n), rhs};
}

IdentityInstance IdentitySuite::check_spivey_second(const WhitneyParams& params,
                                                    std::size_t ell, std::size_t n,
                                                    const Rational& x, const Rational& y,
                                                    SpiveyMode mode) {
  const Rational& m = params.m();
  const Rational& r = params.r();
  const WhitneyParams bell(1, 0);
  Bindings b{params.m(), params.r(), ell, n, std::nullopt, std::nullopt, std::nullopt, {}};
  Rational rhs(0);
  if (mode == SpiveyMode::bivariate) {
    b.x = x;
    b.y = y;
    const Rational y_over_m = y / m;
    for (std::size_t k = 0; k <= ell; ++k) {
      const Rational outer = rhs_w(params, ell, k) * falling_factorial(x, k) * power(y, k);
      if (outer == 0) continue;
      for (std::size_t i = 0; i <= n; ++i) {
        rhs += display_pow(m * k + r, n - i) * Rational(binomial(n, i)) * outer *
               power(m, i) * rhs_dowling(bell, i, x - k, y_over_m);
      }
    }
    return {"spivey-second", b, lhs_dowling(params, ell + n, x, y), rhs};
  }
  const Rational inv_m = 1 / m;
  for (std::size_t k = 0; k <= ell; ++k) {
    const Rational& w = rhs_w(params, ell, k);
    for (std::size_t i = 0; i <= n; ++i) {
      rhs += display_pow(m * k + r, n - i) * Rational(binomial(n, i)) * w * power(m, i) *
             rhs_univariate(bell, i, inv_m);
    }
  }
  return {"spivey-second-numbers", b, lhs_dowling_number(params, ell + n), rhs};
}

UPoly IdentitySuite::spivey_first_rhs_in_u(const WhitneyParams& params, std::size_t ell,
                                           std::size_t n, const Rational& y) {
  // (x-k)_j (y/x)^j = y^j prod_{s=k}^{k+j-1} (1 - s u)
  UPoly out;
  for (std::size_t k = 0; k <= ell; ++k) {
    const Rational& w = rhs_w(params, ell, k);
    if (w == 0) continue;
    const UPoly outer = falling_ratio_in_u(0, k) * (w * power(y, k));
    for (std::size_t i = 0; i <= n; ++i) {
      UPoly inner;
      for (std::size_t j = 0; j <= i; ++j) {
        inner += falling_ratio_in_u(k, j) * (rhs_w(params, i, j) * power(y, j));
      }
      const Rational scalar = display_pow(params.m() * k, n - i) * Rational(binomial(n, i));
      out += outer * inner * scalar;
    }
  }
  return out;
}

UPoly IdentitySuite::spivey_second_rhs_in_u(const WhitneyParams& params, std::size_t ell,
                                            std::size_t n, const Rational& y) {
  const WhitneyParams bell(1, 0);
  const Rational y_over_m = y / params.m();
  UPoly out;
  for (std::size_t k = 0; k <= ell; ++k) {
    const Rational& w = rhs_w(params, ell, k);
    if (w == 0) continue;
    const UPoly outer = falling_ratio_in_u(0, k) * (w * power(y, k));
    for (std::size_t i = 0; i <= n; ++i) {
      UPoly inner;
      for (std::size_t j = 0; j <= i; ++j) {
        inner += falling_ratio_in_u(k, j) * (rhs_w(bell, i, j) * power(y_over_m, j));
      }
      const Rational scalar = display_pow(params.m() * k + params.r(), n - i) *
                              Rational(binomial(n, i)) * power(params.m(), i);
      out += outer * inner * scalar;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series memo

const TruncatedSeries& IdentitySuite::egf_series(const WhitneyParams& params,
                                                 const Rational& x, const Rational& y,
                                                 std::size_t order) {
  std::ostringstream key;
  key << "egf " << params << " x=" << to_string(x) << " y=" << to_string(y) << " N=" << order;
  auto it = series_memo_.find(key.str());
  if (it == series_memo_.end()) {
    it = series_memo_.emplace(key.str(), dowling_egf_series(params, x, y, order)).first;
  }
  return it->second;
}

const TruncatedSeries& IdentitySuite::ogf_series(const WhitneyParams& params,
                                                 const Rational& x, const Rational& y,
                                                 std::size_t order) {
  std::ostringstream key;
  key << "ogf " << params << " x=" << to_string(x) << " y=" << to_string(y) << " N=" << order;
  auto it = series_memo_.find(key.str());
  if (it == series_memo_.end()) {
    it = series_memo_.emplace(key.str(), ogf_hypergeometric(params, x, y, order)).first;
  }
  return it->second;
}

const TruncatedSeries& IdentitySuite::column_series(const WhitneyParams& params,
                                                    std::size_t k, std::size_t order) {
  std::ostringstream key;
  key << "col " << params << " k=" << k << " N=" << order;
  auto it = series_memo_.find(key.str());
  if (it == series_memo_.end()) {
    it = series_memo_.emplace(key.str(), whitney_ogf(params, k, order)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Catalog dispatch

IdentityInstance IdentitySuite::check_catalog(std::string_view id, const Bindings& b) {
  const CatalogEntry* entry = find_entry(id);
  if (entry == nullptr) throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");

  // Scope fixes (m, r) where the display does.
  Rational m = 1;
  Rational r = 0;
  switch (entry->scope) {
    case Scope::general:
      m = need(b.m, "m", id);
      r = need(b.r, "r", id);
      break;
    case Scope::r_bell:
      r = need(b.r, "r", id);
      break;
    case Scope::bell:
      break;
  }
  const WhitneyParams params(m, r);
  const WhitneyParams bell(1, 0);
  Bindings bound = b;
  bound.m = m;
  bound.r = r;
  auto make = [&](Rational lhs, Rational rhs) {
    return IdentityInstance(std::string(id), bound, std::move(lhs), std::move(rhs));
  };

  if (id == "spivey-first" || id == "spivey-second") {
    const auto mode = SpiveyMode::bivariate;
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    return id == "spivey-first"
               ? check_spivey_first(params, ell, n, need(b.x, "x", id), need(b.y, "y", id), mode)
               : check_spivey_second(params, ell, n, need(b.x, "x", id), need(b.y, "y", id), mode);
  }
  if (id == "spivey-first-numbers" || id == "spivey-second-numbers") {
    const auto mode = SpiveyMode::numbers;
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    return id == "spivey-first-numbers" ? check_spivey_first(params, ell, n, 0, 0, mode)
                                        : check_spivey_second(params, ell, n, 0, 0, mode);
  }

  // Spivey-type double sums over k <= l, i <= n for the Bell and r-Bell
  // specialisations. `weight(k)` is the base of the (.)^(n-i) factor,
  // `inner(k, i)` the lower-order polynomial, `outer(k)` the (x)_k y^k part.
  auto spivey_sum = [&](std::size_t ell, std::size_t n, const WhitneyParams& triangle,
                        auto weight, auto inner, auto outer) {
    Rational sum(0);
    for (std::size_t k = 0; k <= ell; ++k) {
      const Rational w = rhs_w(triangle, ell, k) * outer(k);
      if (w == 0) continue;
      for (std::size_t i = 0; i <= n; ++i) {
        sum += display_pow(weight(k), n - i) * Rational(binomial(n, i)) * w * inner(k, i);
      }
    }
    return sum;
  };
  auto one = [](std::size_t) -> Rational { return Rational(1); };

  if (id == "spivey-classic") {
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    const Rational rhs = spivey_sum(
        ell, n, bell, [](std::size_t k) -> Rational { return Rational(k); },
        [&](std::size_t, std::size_t i) -> Rational { return rhs_dowling_number(bell, i); }, one);
    return make(lhs_dowling_number(bell, ell + n), rhs);
  }
  if (id == "bell-sum") {
    const auto n = need(b.n, "n", id);
    Rational rhs(0);
    for (std::size_t k = 0; k <= n; ++k) rhs += Rational(partition_oracle(n, k, 0));
    return make(lhs_dowling_number(bell, n), rhs);
  }
  if (id == "bell-rec") {
    const auto n = need(b.n, "n", id);
    Rational rhs(0);
    for (std::size_t k = 0; k <= n; ++k) {
      rhs += Rational(binomial(n, k)) * rhs_dowling_number(bell, k);
    }
    return make(lhs_dowling_number(bell, n + 1), rhs);
  }
  if (id == "gould-quaintance") {
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    const Rational& v = need(b.y, "y", id);
    const Rational rhs = spivey_sum(
        ell, n, bell, [](std::size_t k) -> Rational { return Rational(k); },
        [&](std::size_t, std::size_t i) -> Rational { return rhs_univariate(bell, i, v); },
        [&](std::size_t k) -> Rational { return power(v, k); });
    return make(lhs_univariate(bell, ell + n, v), rhs);
  }
  if (id == "zheng-li-bivariate" || id == "zheng-li-r1" || id == "zheng-li-r2") {
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    // zheng-li-r2 pairs (k+r) with plain Bell polynomials; the others use k
    // with polynomials of the same family as the left side.
    const bool second = id == "zheng-li-r2";
    const WhitneyParams& lower = second ? bell : params;
    const Rational rhs = spivey_sum(
        ell, n, params,
        [&](std::size_t k) -> Rational { return second ? Rational(k + r) : Rational(k); },
        [&](std::size_t k, std::size_t i) -> Rational { return rhs_dowling(lower, i, x - k, y); },
        [&](std::size_t k) -> Rational { return falling_factorial(x, k) * power(y, k); });
    return make(lhs_dowling(params, ell + n, x, y), rhs);
  }
  if (id == "mezo-r1" || id == "mezo-r2") {
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    const bool second = id == "mezo-r2";
    const WhitneyParams& lower = second ? bell : params;
    const Rational rhs = spivey_sum(
        ell, n, params,
        [&](std::size_t k) -> Rational { return second ? Rational(k + r) : Rational(k); },
        [&](std::size_t, std::size_t i) -> Rational { return rhs_dowling_number(lower, i); }, one);
    return make(lhs_dowling_number(params, ell + n), rhs);
  }
  if (id == "mangontarum-univariate") {
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    const Rational& v = need(b.y, "y", id);
    const Rational rhs = spivey_sum(
        ell, n, params, [&](std::size_t k) -> Rational { return Rational(m * k); },
        [&](std::size_t, std::size_t i) -> Rational { return rhs_univariate(params, i, v); },
        [&](std::size_t k) -> Rational { return power(v, k); });
    return make(lhs_univariate(params, ell + n, v), rhs);
  }
  if (id == "conclusion-defining") {
    const auto ell = need(b.ell, "l", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    bound.n = 0;
    const Rational rhs = spivey_sum(
        ell, 0, params, [&](std::size_t k) -> Rational { return Rational(m * k); },
        [&](std::size_t k, std::size_t i) -> Rational { return rhs_dowling(params, i, x - k, y); },
        [&](std::size_t k) -> Rational { return falling_factorial(x, k) * power(y, k); });
    return make(lhs_dowling(params, ell, x, y), rhs);
  }
  if (id == "conclusion-recurrence") {
    const auto n = need(b.n, "n", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    bound.ell = 1;
    const Rational rhs = spivey_sum(
        1, n, params, [&](std::size_t k) -> Rational { return Rational(m * k); },
        [&](std::size_t k, std::size_t i) -> Rational { return rhs_dowling(params, i, x - k, y); },
        [&](std::size_t k) -> Rational { return falling_factorial(x, k) * power(y, k); });
    return make(lhs_dowling(params, n + 1, x, y), rhs);
  }
  if (id == "conclusion-bell-bivariate") {
    const auto n = need(b.n, "n", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    Rational rhs(0);
    for (std::size_t i = 0; i <= n; ++i) {
      rhs += Rational(binomial(n, i)) * rhs_dowling(bell, i, x - 1, y) * x * y;
    }
    return make(lhs_dowling(bell, n + 1, x, y), rhs);
  }
  if (id == "shift-up" || id == "shift-down" || id == "rbell-shift") {
    const auto n = need(b.n, "n", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    bool up = id == "shift-up";
    if (id == "rbell-shift") {
      const std::string variant = b.variant.value_or("up");
      if (variant != "up" && variant != "down") {
        throw std::invalid_argument("rbell-shift: variant must be 'up' or 'down'");
      }
      up = variant == "up";
      bound.variant = variant;
    }
    Rational rhs(0);
    if (up) {
      for (std::size_t j = 0; j <= n; ++j) {
        rhs += Rational(binomial(n, j)) * rhs_dowling(params, j, x, y);
      }
      return make(lhs_dowling(params.shifted(1), n, x, y), rhs);
    }
    for (std::size_t j = 0; j <= n; ++j) {
      rhs += sign(n - j) * Rational(binomial(n, j)) * rhs_dowling(params.shifted(1), j, x, y);
    }
    return make(lhs_dowling(params, n, x, y), rhs);
  }
  if (id == "explicit-dowling" || id == "explicit-rbell" || id == "explicit-bell") {
    const auto n = need(b.n, "n", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    const std::size_t count = natural(x, id);
    const Rational p = y / m;
    Rational rhs(0);
    for (std::size_t i = 0; i <= count; ++i) {
      rhs += Rational(binomial(count, i)) * display_pow(m * i + r, n) * power(p, i) *
             power(1 - p, count - i);
    }
    return make(lhs_dowling(params, n, x, y), rhs);
  }
  if (id == "egf") {
    const auto n = need(b.n, "n", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    const Rational lhs = lhs_dowling(params, n, x, y) / Rational(factorial(n));
    return make(lhs, egf_series(params, x, y, std::max<std::size_t>(n, 10))[n]);
  }
  if (id == "ogf-2f1") {
    const auto n = need(b.n, "n", id);
    const Rational& x = need(b.x, "x", id);
    const Rational& y = need(b.y, "y", id);
    return make(lhs_dowling(params, n, x, y),
                ogf_series(params, x, y, std::max<std::size_t>(n, 10))[n]);
  }
  if (id == "whitney-ogf") {
    const auto n = need(b.n, "n", id);
    const auto k = need(b.k, "k", id);
    return make(lhs_tables_.at(params, n, k),
                column_series(params, k, std::max<std::size_t>(n, 10))[n]);
  }
  if (id == "limit-first" || id == "limit-second") {
    const auto ell = need(b.ell, "l", id);
    const auto n = need(b.n, "n", id);
    const Rational& y = need(b.y, "y", id);
    const UPoly lhs = limit_reduction(params, ell + n, y);
    const UPoly rhs = id == "limit-first" ? spivey_first_rhs_in_u(params, ell, n, y)
                                          : spivey_second_rhs_in_u(params, ell, n, y);
    return make(lhs[0], rhs[0]);
  }
  throw std::logic_error("catalog entry without an evaluator: " + std::string(id));
}

// ---------------------------------------------------------------------------
// Grid configuration

void ParamGrid::validate() const {
  if (m_list.empty() || r_list.empty() || y_list.empty()) {
    throw std::invalid_argument("grid lists must be nonempty");
  }
  for (const auto& m : m_list) {
    if (m == 0) throw std::invalid_argument("grid m-list must exclude 0");
  }
}

ParamGrid default_grid() {
  ParamGrid grid;
  grid.m_list = {1, 2, 3, Rational(1, 2)};
  grid.r_list = {0, 1, 2, Rational(1, 2)};
  grid.sum_budget = 8;
  grid.x_max = 6;
  grid.y_list = {Rational(1, 2), 1, 2, 3};
  grid.series_order = 10;
  return grid;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Rational> parse_list(const std::string& value) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) out.push_back(parse_rational(trim(item)));
  return out;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  const Rational v = parse_rational(value);
  if (!is_integer(v) || v < 0 || !v.get_num().fits_ulong_p()) {
    throw std::invalid_argument(key + " must be a nonnegative integer");
  }
  return v.get_num().get_ui();
}

}  // namespace

ParamGrid parse_grid_config(std::istream& in) {
  ParamGrid grid = default_grid();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    try {
      if (key == "m-list") {
        grid.m_list = parse_list(value);
      } else if (key == "r-list") {
        grid.r_list = parse_list(value);
      } else if (key == "y-list") {
        grid.y_list = parse_list(value);
      } else if (key == "sum-budget") {
        grid.sum_budget = parse_count(key, value);
      } else if (key == "x-max") {
        grid.x_max = parse_count(key, value);
      } else if (key == "series-order") {
        grid.series_order = parse_count(key, value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  grid.validate();
  return grid;
}

ParamGrid load_grid_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read grid config '" + path + "'");
  return parse_grid_config(in);
}

// ---------------------------------------------------------------------------
// Grid runs

std::size_t IdentityReport::instances() const {
  std::size_t total = 0;
  for (const auto& t : tallies) total += t.instances;
  return total;
}

std::size_t IdentityReport::failures() const {
  std::size_t total = 0;
  for (const auto& t : tallies) total += t.failures;
  return total;
}

std::string IdentityReport::to_json(bool with_timing) const {
  nlohmann::ordered_json out;
  out["instances"] = instances();
  out["failures"] = failures();
  out["all_pass"] = all_pass();
  if (with_timing) out["wall_seconds"] = wall_seconds;
  auto& list = out["identities"] = nlohmann::ordered_json::array();
  for (const auto& t : tallies) {
    nlohmann::ordered_json item;
    item["id"] = t.id;
    item["instances"] = t.instances;
    item["passes"] = t.passes;
    item["failures"] = t.failures;
    if (!t.note.empty()) item["note"] = t.note;
    item["first_failure"] = t.first_failure ? instance_json(*t.first_failure) : nullptr;
    if (with_timing) item["wall_seconds"] = t.wall_seconds;
    list.push_back(std::move(item));
  }
  return out.dump(2);
}

std::string IdentityReport::to_table(bool with_timing) const {
  std::ostringstream os;
  os << std::left << std::setw(28) << "identity" << std::right << std::setw(10) << "instances"
     << std::setw(10) << "passes" << std::setw(10) << "failures";
  if (with_timing) os << std::setw(10) << "seconds";
  os << '\n';
  for (const auto& t : tallies) {
    os << std::left << std::setw(28) << t.id << std::right << std::setw(10) << t.instances
       << std::setw(10) << t.passes << std::setw(10) << t.failures;
    if (with_timing) os << std::setw(10) << std::fixed << std::setprecision(2) << t.wall_seconds;
    os << '\n';
  }
  os << std::left << std::setw(28) << "total" << std::right << std::setw(10) << instances()
     << std::setw(10) << instances() - failures() << std::setw(10) << failures();
  if (with_timing) os << std::setw(10) << std::fixed << std::setprecision(2) << wall_seconds;
  os << '\n';
  for (const auto& t : tallies) {
    if (t.first_failure) {
      const auto& f = *t.first_failure;
      os << "first failure " << t.id << ": " << f.bindings.to_string()
         << " lhs=" << to_string(f.lhs) << " rhs=" << to_string(f.rhs) << '\n';
    }
  }
  for (const auto& t : tallies) {
    if (!t.note.empty() && t.instances > 0) os << "note " << t.id << ": " << t.note << '\n';
  }
  return os.str();
}

namespace {

std::vector<WhitneyParams> scoped_params(const ParamGrid& grid, Scope scope) {
  const bool has_m1 = std::find(grid.m_list.begin(), grid.m_list.end(), 1) != grid.m_list.end();
  const bool has_r0 = std::find(grid.r_list.begin(), grid.r_list.end(), 0) != grid.r_list.end();
  std::vector<WhitneyParams> out;
  switch (scope) {
    case Scope::general:
      for (const auto& m : grid.m_list) {
        for (const auto& r : grid.r_list) out.emplace_back(m, r);
      }
      break;
    case Scope::r_bell:
      if (has_m1) {
        for (const auto& r : grid.r_list) out.emplace_back(1, r);
      }
      break;
    case Scope::bell:
      if (has_m1 && has_r0) out.emplace_back(1, 0);
      break;
  }
  return out;
}

}  // namespace

IdentityReport run_grid(const ParamGrid& grid, std::span<const std::string> ids,
                        SuiteOptions options) {
  grid.validate();
  for (const auto& id : ids) {
    if (find_entry(id) == nullptr) throw std::invalid_argument("unknown identity id '" + id + "'");
  }
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  IdentitySuite suite(options);
  IdentityReport report;
  std::vector<Rational> xs;
  for (std::size_t x = 0; x <= grid.x_max; ++x) xs.emplace_back(x);

  for (const auto& id : ids) {
    const CatalogEntry& entry = *find_entry(id);
    const auto id_start = Clock::now();
    IdentityTally tally;
    tally.id = id;
    tally.note = std::string(entry.note);
    auto record = [&](const Bindings& b) {
      IdentityInstance inst = suite.check_catalog(id, b);
      ++tally.instances;
      if (inst.passed()) {
        ++tally.passes;
      } else {
        ++tally.failures;
        if (!tally.first_failure) tally.first_failure = std::move(inst);
      }
    };

    for (const auto& params : scoped_params(grid, entry.scope)) {
      Bindings base;
      base.m = params.m();
      base.r = params.r();
      const std::size_t budget =
          grid.sum_budget >= entry.index_offset ? grid.sum_budget - entry.index_offset : 0;
      const bool budget_ok = grid.sum_budget >= entry.index_offset;
      switch (entry.shape) {
        case Shape::spivey_bivariate:
        case Shape::spivey_numbers:
        case Shape::spivey_univariate:
          for (std::size_t total = 0; total <= grid.sum_budget; ++total) {
            for (std::size_t ell = 0; ell <= total; ++ell) {
              Bindings b = base;
              b.ell = ell;
              b.n = total - ell;
              if (entry.shape == Shape::spivey_numbers) {
                record(b);
              } else if (entry.shape == Shape::spivey_univariate) {
                for (const auto& y : grid.y_list) {
                  b.y = y;
                  record(b);
                }
              } else {
                for (const auto& x : xs) {
                  for (const auto& y : grid.y_list) {
                    b.x = x;
                    b.y = y;
                    record(b);
                  }
                }
              }
            }
          }
          break;
        case Shape::index_n: {
          if (!budget_ok) break;
          const std::size_t top = id == "bell-sum" ? std::min(budget, kOracleGuard) : budget;
          for (std::size_t n = 0; n <= top; ++n) {
            Bindings b = base;
            b.n = n;
            record(b);
          }
          break;
        }
        case Shape::bivariate_n:
        case Shape::bivariate_ell:
          if (!budget_ok) break;
          for (std::size_t idx = 0; idx <= budget; ++idx) {
            for (const auto& x : xs) {
              for (const auto& y : grid.y_list) {
                Bindings b = base;
                if (entry.shape == Shape::bivariate_n) {
                  b.n = idx;
                } else {
                  b.ell = idx;
                }
                b.x = x;
                b.y = y;
                if (id == "rbell-shift") {
                  for (const char* variant : {"up", "down"}) {
                    b.variant = variant;
                    record(b);
                  }
                } else {
                  record(b);
                }
              }
            }
          }
          break;
        case Shape::series_point:
          for (const auto& x : xs) {
            for (const auto& y : grid.y_list) {
              if (id == "ogf-2f1" && y == params.m()) continue;
              for (std::size_t n = 0; n <= grid.series_order; ++n) {
                Bindings b = base;
                b.n = n;
                b.x = x;
                b.y = y;
                record(b);
              }
            }
          }
          break;
        case Shape::column:
          for (std::size_t k = 0; k <= grid.sum_budget; ++k) {
            for (std::size_t n = 0; n <= grid.series_order; ++n) {
              Bindings b = base;
              b.k = k;
              b.n = n;
              record(b);
            }
          }
          break;
      }
    }
    tally.wall_seconds = std::chrono::duration<double>(Clock::now() - id_start).count();
    report.tallies.push_back(std::move(tally));
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace dowling
