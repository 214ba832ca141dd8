#pragma once

// Table-driven catalog of identities for bivariate r-Dowling polynomials and
// their Bell / r-Bell / Whitney specialisations. Every check computes its two
// sides on separate code paths: the left side through the recurrence-built
// tables of the dowling module, the right side by literal summation over
// W values from the explicit formula.

#include "dowling/dowling.hpp"
#include "dowling/exact.hpp"
#include "dowling/series.hpp"
#include "dowling/triangles.hpp"

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dowling {

struct Bindings {
  std::optional<Rational> m;
  std::optional<Rational> r;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<Rational> x;
  std::optional<Rational> y;
  /// Sub-case for entries that bundle two displays ("up" / "down").
  std::optional<std::string> variant;

  /// "m=2 r=1 l=1 n=1 x=2 y=1" (only the bound names, fixed order)
  std::string to_string() const;
};

enum class Verdict { pass, fail };

struct IdentityInstance {
  IdentityInstance(std::string id, Bindings bindings, Rational lhs, Rational rhs);

  std::string id;
  Bindings bindings;
  Rational lhs;
  Rational rhs;
  Verdict verdict;  // pass iff lhs == rhs

  bool passed() const { return verdict == Verdict::pass; }
};

enum class SpiveyMode { bivariate, numbers };

struct SuiteOptions {
  /// Convention for the power factors written in the displays. Switching to
  /// ZeroPow::zero is the negative control; it never reaches the W values.
  ZeroPow zero_pow = ZeroPow::one;
};

/// Which (m, r) points an entry applies to.
enum class Scope { general, r_bell, bell };

/// Which indices and variables an entry ranges over in a grid run.
enum class Shape {
  spivey_bivariate,    // l + n <= budget, x, y
  spivey_numbers,      // l + n <= budget
  spivey_univariate,   // l + n <= budget, y
  index_n,             // n
  bivariate_n,         // n, x, y
  bivariate_ell,       // l, x, y
  series_point,        // n <= series order, x, y
  column,              // k <= budget, n <= series order
};

struct CatalogEntry {
  std::string_view id;
  std::string_view description;
  Scope scope;
  Shape shape;
  /// The left side is indexed one past the bound index (recurrences in n+1).
  std::size_t index_offset = 0;
  /// Reading of the display that differs from its printed form, if any.
  std::string_view note = {};
};

std::span<const CatalogEntry> catalog();
/// nullptr for unknown ids.
const CatalogEntry* find_entry(std::string_view id);

/// Stateful evaluator: memoises tables for both routes. Not thread-safe.
class IdentitySuite {
 public:
  explicit IdentitySuite(SuiteOptions options = {});

  /// First form. bivariate:
  ///   D(l+n;x,y) = sum_k sum_i (mk)^(n-i) C(n,i) W(l,k) D(i;x-k,y) (x)_k y^k
  /// numbers: D(l+n) = sum_k sum_i (mk)^(n-i) C(n,i) W(l,k) D(i). x, y ignored.
  IdentityInstance check_spivey_first(const WhitneyParams& params, std::size_t ell,
                                      std::size_t n, const Rational& x, const Rational& y,
                                      SpiveyMode mode);

  /// Second form. bivariate:
  ///   D(l+n;x,y) = sum_k sum_i (mk+r)^(n-i) C(n,i) W(l,k) m^i B_i(x-k, y/m) (x)_k y^k
  /// numbers: D(l+n) = sum_k sum_i (mk+r)^(n-i) C(n,i) W(l,k) m^i B_i(1/m).
  IdentityInstance check_spivey_second(const WhitneyParams& params, std::size_t ell,
                                       std::size_t n, const Rational& x, const Rational& y,
                                       SpiveyMode mode);

  /// Evaluates any catalog entry at one binding. Throws std::invalid_argument
  /// for unknown ids or missing bindings.
  IdentityInstance check_catalog(std::string_view id, const Bindings& bindings);

  /// Constant term of the x = 1/u form of the first-form right side with y
  /// replaced by y/x. Exposed for the limit-reduction checks.
  UPoly spivey_first_rhs_in_u(const WhitneyParams& params, std::size_t ell, std::size_t n,
                              const Rational& y);
  UPoly spivey_second_rhs_in_u(const WhitneyParams& params, std::size_t ell, std::size_t n,
                               const Rational& y);

 private:
  // left-hand route (recurrence tables)
  Rational lhs_dowling(const WhitneyParams& params, std::size_t n, const Rational& x,
                       const Rational& y);
  Rational lhs_dowling_number(const WhitneyParams& params, std::size_t n);
  Rational lhs_univariate(const WhitneyParams& params, std::size_t n, const Rational& y);

  // right-hand route (explicit formula)
  const Rational& rhs_w(const WhitneyParams& params, std::size_t n, std::size_t k);
  Rational rhs_dowling(const WhitneyParams& params, std::size_t n, const Rational& x,
                       const Rational& y);
  Rational rhs_dowling_number(const WhitneyParams& params, std::size_t n);
  Rational rhs_univariate(const WhitneyParams& params, std::size_t n, const Rational& y);
  Rational display_pow(const Rational& base, std::size_t exponent) const;

  const TruncatedSeries& egf_series(const WhitneyParams& params, const Rational& x,
                                    const Rational& y, std::size_t order);
  const TruncatedSeries& ogf_series(const WhitneyParams& params, const Rational& x,
                                    const Rational& y, std::size_t order);
  const TruncatedSeries& column_series(const WhitneyParams& params, std::size_t k,
                                       std::size_t order);

  SuiteOptions options_;
  WhitneyCache lhs_tables_;
  std::map<WhitneyParams, std::vector<std::vector<Rational>>> explicit_memo_;
  std::map<std::string, TruncatedSeries> series_memo_;
};

/// Parameter grid for a verification run.
struct ParamGrid {
  std::vector<Rational> m_list;
  std::vector<Rational> r_list;
  std::size_t sum_budget = 0;
  std::size_t x_max = 0;
  std::vector<Rational> y_list;
  std::size_t series_order = 0;

  /// Throws std::invalid_argument on empty lists or m = 0.
  void validate() const;
};

/// m-list=1,2,3,1/2  r-list=0,1,2,1/2  sum-budget=8  x-max=6
/// y-list=1/2,1,2,3  series-order=10
ParamGrid default_grid();

/// Flat key=value text; '#' starts a comment. Missing keys keep the default
/// value; unknown keys and malformed values throw std::invalid_argument.
ParamGrid parse_grid_config(std::istream& in);
/// Throws std::runtime_error when the file cannot be read.
ParamGrid load_grid_config(const std::string& path);

struct IdentityTally {
  std::string id;
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::optional<IdentityInstance> first_failure;
  double wall_seconds = 0;
  std::string note;
};

struct IdentityReport {
  std::vector<IdentityTally> tallies;
  double wall_seconds = 0;

  std::size_t instances() const;
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }

  /// Timing fields are omitted unless requested, so the output is byte-stable.
  std::string to_json(bool with_timing = false) const;
  std::string to_table(bool with_timing = false) const;
};

/// Evaluates each requested id at every applicable grid point in a fixed
/// order. Throws std::invalid_argument for unknown ids.
IdentityReport run_grid(const ParamGrid& grid, std::span<const std::string> ids,
                        SuiteOptions options = {});

/// Every catalog id, in catalog order.
std::vector<std::string> all_identity_ids();

}  // namespace dowling
