#pragma once

// r-Whitney numbers of the second kind W_{m,r}(n,k) and their
// specialisations (r-Stirling, Stirling), computed by three independent
// routes plus a set-partition enumeration oracle for m = 1.

#include "dowling/exact.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace dowling {

/// Parameters (m, r) of W_{m,r}. Construction rejects m = 0.
class WhitneyParams {
 public:
  WhitneyParams(Rational m, Rational r);

  const Rational& m() const { return m_; }
  const Rational& r() const { return r_; }

  /// Same family with r replaced by r + delta.
  WhitneyParams shifted(const Rational& delta) const { return {m_, r_ + delta}; }

  friend bool operator==(const WhitneyParams&, const WhitneyParams&) = default;
  friend bool operator<(const WhitneyParams& a, const WhitneyParams& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    return a.r_ < b.r_;
  }

 private:
  Rational m_;
  Rational r_;
};

std::ostream& operator<<(std::ostream& os, const WhitneyParams& p);

/// Immutable triangle W(n,k), 0 <= k <= n <= max_n, built by the recurrence
///   W(n+1,k) = W(n,k-1) + (mk+r) W(n,k),  W(0,0) = 1.
class WhitneyTable {
 public:
  WhitneyTable(WhitneyParams params, std::size_t max_n);

  const WhitneyParams& params() const { return params_; }
  std::size_t max_n() const { return rows_.size() - 1; }

  /// Zero for k > n. Throws std::out_of_range for n > max_n().
  const Rational& at(std::size_t n, std::size_t k) const;
  const std::vector<Rational>& row(std::size_t n) const;

 private:
  WhitneyParams params_;
  std::vector<std::vector<Rational>> rows_;
};

WhitneyTable whitney_table(const WhitneyParams& params, std::size_t max_n);

/// (1/(m^k k!)) sum_j (-1)^(k-j) C(k,j) (mj+r)^n. Zero for k > n.
Rational whitney_explicit(const WhitneyParams& params, std::size_t n, std::size_t k);

/// k-th forward difference at t = 0 of t -> (mt+r)^n, over m^k k!.
Rational whitney_newton(const WhitneyParams& params, std::size_t n, std::size_t k);

/// r-Stirling number written {n+r, k+r}_r, i.e. W_{1,r}(n,k).
Rational rstirling2(std::size_t n, std::size_t k, std::size_t r);

/// Classical S(n,k) = W_{1,0}(n,k).
Rational stirling2(std::size_t n, std::size_t k);

inline constexpr std::size_t kOracleGuard = 12;

/// Counts partitions of {1..n+r} into k+r blocks with 1..r in distinct blocks,
/// by exhaustive enumeration of restricted growth strings.
/// Throws std::invalid_argument when n + r > kOracleGuard.
Integer partition_oracle(std::size_t n, std::size_t k, std::size_t r);

/// Number families that are W_{m,r} under another name.
struct AliasKind {
  enum class Family { r_beta_stirling, rucinski_voigt, noncentral_whitney };
  Family family;
  /// r_beta_stirling: (r, beta); rucinski_voigt: (a, r); noncentral_whitney: (m, a)
  Rational first;
  Rational second;
};

/// Maps an aliased family to (m, r). Throws when the m-slot is zero.
WhitneyParams alias_params(const AliasKind& alias);

/// Memo of tables keyed by parameters; a request for a larger n builds a
/// new table. Returned references stay valid for the cache's lifetime.
/// Not thread-safe.
class WhitneyCache {
 public:
  const WhitneyTable& table(const WhitneyParams& params, std::size_t max_n);
  const Rational& at(const WhitneyParams& params, std::size_t n, std::size_t k) {
    static const Rational zero(0);
    if (k > n) return zero;
    return table(params, n).at(n, k);
  }

 private:
  std::map<WhitneyParams, std::unique_ptr<WhitneyTable>> tables_;
  std::vector<std::unique_ptr<WhitneyTable>> retired_;
};

enum class TableFormat { table, csv, json };

/// Writes (n, k, value) for every stored entry, row-major.
void write_triangle(std::ostream& os, const WhitneyTable& table, TableFormat format);

}  // namespace dowling
