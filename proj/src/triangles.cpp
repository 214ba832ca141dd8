#include "dowling/triangles.hpp"

#include "json.hpp"

#include <stdexcept>

namespace dowling {

WhitneyParams::WhitneyParams(Rational m, Rational r) : m_(std::move(m)), r_(std::move(r)) {
  if (m_ == 0) throw std::invalid_argument("W_{m,r} requires m != 0");
}

std::ostream& operator<<(std::ostream& os, const WhitneyParams& p) {
  return os << "m=" << to_string(p.m()) << " r=" << to_string(p.r());
}

WhitneyTable::WhitneyTable(WhitneyParams params, std::size_t max_n)
    : params_(std::move(params)) {
  rows_.reserve(max_n + 1);
  rows_.push_back({Rational(1)});
  for (std::size_t n = 0; n < max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<Rational> next(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Rational value(0);
      if (k >= 1) value += prev[k - 1];
      if (k <= n) value += (params_.m() * k + params_.r()) * prev[k];
      next[k] = std::move(value);
    }
    rows_.push_back(std::move(next));
  }
}

const Rational& WhitneyTable::at(std::size_t n, std::size_t k) const {
  static const Rational zero(0);
  const auto& r = row(n);
  return k < r.size() ? r[k] : zero;
}

const std::vector<Rational>& WhitneyTable::row(std::size_t n) const {
  if (n >= rows_.size()) {
    throw std::out_of_range("row " + std::to_string(n) + " beyond table of size " +
                            std::to_string(rows_.size() - 1));
  }
  return rows_[n];
}

WhitneyTable whitney_table(const WhitneyParams& params, std::size_t max_n) {
  return WhitneyTable(params, max_n);
}

Rational whitney_explicit(const WhitneyParams& params, std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  Rational sum(0);
  for (std::size_t j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(k, j)) * power(params.m() * j + params.r(), n);
    if ((k - j) % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum / (power(params.m(), k) * Rational(factorial(k)));
}

Rational whitney_newton(const WhitneyParams& params, std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  // sample t -> (mt+r)^n at t = 0..k and difference k times in place
  std::vector<Rational> diffs(k + 1);
  for (std::size_t t = 0; t <= k; ++t) diffs[t] = power(params.m() * t + params.r(), n);
  for (std::size_t order = 1; order <= k; ++order) {
    for (std::size_t t = 0; t + order <= k; ++t) diffs[t] = diffs[t + 1] - diffs[t];
  }
  return diffs[0] / (power(params.m(), k) * Rational(factorial(k)));
}

Rational rstirling2(std::size_t n, std::size_t k, std::size_t r) {
  return whitney_explicit(WhitneyParams(1, r), n, k);
}

Rational stirling2(std::size_t n, std::size_t k) { return rstirling2(n, k, 0); }

Integer partition_oracle(std::size_t n, std::size_t k, std::size_t r) {
  const std::size_t size = n + r;
  if (size > kOracleGuard) {
    throw std::invalid_argument("partition oracle limited to n + r <= " +
                                std::to_string(kOracleGuard));
  }
  if (size == 0) return Integer(k == 0 ? 1 : 0);

  // Restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i-1]).
  std::vector<std::size_t> block(size, 0);
  std::vector<std::size_t> prefix_max(size, 0);
  Integer count(0);
  const std::size_t want_blocks = k + r;
  while (true) {
    const std::size_t blocks = prefix_max[size - 1] + 1;
    if (blocks == want_blocks) {
      bool distinct = true;
      for (std::size_t a = 0; a < r && distinct; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
          if (block[a] == block[b]) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct) ++count;
    }
    // advance to the next restricted growth string
    std::size_t i = size - 1;
    while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (std::size_t j = i + 1; j < size; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return count;
}

WhitneyParams alias_params(const AliasKind& alias) {
  switch (alias.family) {
    case AliasKind::Family::r_beta_stirling:
      return {alias.second, alias.first};  // (r, beta) -> W_{beta, r}
    case AliasKind::Family::rucinski_voigt:
      return {alias.second, alias.first};  // (a, r) -> W_{r, a}
    case AliasKind::Family::noncentral_whitney:
      return {alias.first, -alias.second};  // (m, a) -> W_{m, -a}
  }
  throw std::invalid_argument("unknown alias family");
}

const WhitneyTable& WhitneyCache::table(const WhitneyParams& params, std::size_t max_n) {
  auto it = tables_.find(params);
  if (it == tables_.end() || it->second->max_n() < max_n) {
    // tables are immutable; a larger request replaces the entry
    const std::size_t size = std::max<std::size_t>(max_n, 16);
    auto fresh = std::make_unique<WhitneyTable>(params, size);
    if (it == tables_.end()) {
      it = tables_.emplace(params, std::move(fresh)).first;
    } else {
      retired_.push_back(std::move(it->second));
      it->second = std::move(fresh);
    }
  }
  return *it->second;
}

void write_triangle(std::ostream& os, const WhitneyTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::table:
      os << "# W_{m,r}(n,k) " << table.params() << "\n";
      os << "n k value\n";
      break;
    case TableFormat::csv:
      os << "n,k,value\n";
      break;
    case TableFormat::json:
      break;
  }
  for (std::size_t n = 0; n <= table.max_n(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const std::string value = to_string(table.at(n, k));
      switch (format) {
        case TableFormat::table:
          os << n << ' ' << k << ' ' << value << '\n';
          break;
        case TableFormat::csv:
          os << n << ',' << k << ',';
          if (is_integer(table.at(n, k))) {
            os << value;
          } else {
            os << '"' << value << '"';
          }
          os << '\n';
          break;
        case TableFormat::json: {
          nlohmann::ordered_json line;
          line["n"] = n;
          line["k"] = k;
          line["value"] = value;
          os << line.dump() << '\n';
          break;
        }
      }
    }
  }
}

}  // namespace dowling
