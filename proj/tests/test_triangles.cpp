#include "dowling/triangles.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace dowling {
namespace {

const std::vector<Rational> kMs{1, 2, 3, Rational(1, 2)};
const std::vector<Rational> kRs{0, 1, 2, Rational(1, 2)};

// Independent count for the oracle: place elements one at a time, either into
// an existing block or a new one, with the first r elements forced into new
// blocks. Returns the number of partitions with exactly `blocks` blocks.
long count_partitions(int element, int total, int distinguished, int used, int blocks) {
  if (element == total) return used == blocks ? 1 : 0;
  if (used > blocks) return 0;
  long ways = count_partitions(element + 1, total, distinguished, used + 1, blocks);
  if (element >= distinguished) {
    ways += used * count_partitions(element + 1, total, distinguished, used, blocks);
  }
  return ways;
}

TEST(WhitneyTable, Examples) {
  const auto s = whitney_table({1, 0}, 3);
  EXPECT_EQ(s.row(3), (std::vector<Rational>{0, 1, 3, 1}));
  const auto w = whitney_table({2, 1}, 3);
  EXPECT_EQ(w.row(3), (std::vector<Rational>{1, 13, 9, 1}));
  const auto seed = whitney_table({Rational(-5, 7), 3}, 0);
  EXPECT_EQ(seed.max_n(), 0u);
  EXPECT_EQ(seed.at(0, 0), 1);
  EXPECT_EQ(w.at(2, 3), 0);
  EXPECT_THROW((void)w.at(4, 0), std::out_of_range);
}

TEST(WhitneyParams, RejectsZeroM) {
  EXPECT_THROW(WhitneyParams(0, 1), std::invalid_argument);
}

TEST(WhitneyExplicit, Examples) {
  EXPECT_EQ(whitney_explicit({2, 1}, 2, 1), 4);
  EXPECT_EQ(whitney_explicit({Rational(3, 5), 7}, 5, 5), 1);
  EXPECT_EQ(whitney_explicit({1, 0}, 3, 2), 3);
  EXPECT_EQ(whitney_explicit({2, 1}, 3, 1), 13);
  EXPECT_EQ(whitney_explicit({2, 1}, 2, 4), 0);
}

TEST(WhitneyNewton, Examples) {
  EXPECT_EQ(whitney_newton({2, 1}, 2, 1), 4);
  EXPECT_EQ(whitney_newton({1, 2}, 1, 0), 2);
  EXPECT_EQ(whitney_newton({3, 0}, 2, 2), 1);
}

TEST(Stirling, Examples) {
  EXPECT_EQ(rstirling2(2, 1, 1), 3);
  EXPECT_EQ(rstirling2(3, 2, 0), 3);
  for (std::size_t n = 0; n < 6; ++n) {
    for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(rstirling2(n, n, r), 1);
  }
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(0, 0), 1);
  for (std::size_t n = 1; n < 6; ++n) EXPECT_EQ(stirling2(n, 0), 0);
}

TEST(PartitionOracle, Examples) {
  EXPECT_EQ(partition_oracle(3, 1, 0), 1);
  EXPECT_EQ(partition_oracle(3, 2, 0), 3);
  EXPECT_EQ(partition_oracle(2, 1, 1), 3);
  EXPECT_EQ(partition_oracle(0, 0, 0), 1);
  EXPECT_THROW(partition_oracle(10, 3, 3), std::invalid_argument);
}

TEST(PartitionOracle, MatchesIndependentCountAndRStirling) {
  for (int r = 0; r <= 3; ++r) {
    for (int n = 0; n + r <= 9; ++n) {
      for (int k = 0; k <= n; ++k) {
        const Integer oracle = partition_oracle(n, k, r);
        EXPECT_EQ(oracle, count_partitions(0, n + r, r, 0, k + r)) << n << ' ' << k << ' ' << r;
        EXPECT_EQ(Rational(oracle), rstirling2(n, k, r)) << n << ' ' << k << ' ' << r;
      }
    }
  }
}

TEST(WhitneyRoutes, ThreeRoutesAgree) {
  for (const auto& m : kMs) {
    for (const auto& r : kRs) {
      const WhitneyParams p(m, r);
      const auto table = whitney_table(p, 14);
      for (std::size_t n = 0; n <= 14; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          EXPECT_EQ(table.at(n, k), whitney_explicit(p, n, k)) << p << ' ' << n << ' ' << k;
          EXPECT_EQ(table.at(n, k), whitney_newton(p, n, k)) << p << ' ' << n << ' ' << k;
        }
      }
    }
  }
}

TEST(WhitneyTable, NonnegativeIntegersForNaturalParams) {
  for (int m = 1; m <= 3; ++m) {
    for (int r = 0; r <= 3; ++r) {
      const auto t = whitney_table({m, r}, 12);
      for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(t.at(n, n), 1);
        for (const auto& v : t.row(n)) {
          EXPECT_TRUE(is_integer(v));
          EXPECT_GE(v, 0);
        }
      }
    }
  }
}

// (mt+r)^n = sum_k m^k W(n,k) (t)_k for t = 0..n.
TEST(WhitneyTable, HorizontalGeneratingFunction) {
  for (const auto& m : kMs) {
    for (const auto& r : kRs) {
      const auto t = whitney_table({m, r}, 12);
      for (std::size_t n = 0; n <= 12; ++n) {
        for (long x = 0; x <= static_cast<long>(n); ++x) {
          Rational sum(0);
          for (std::size_t k = 0; k <= n; ++k) {
            sum += power(m, k) * t.at(n, k) * falling_factorial(x, k);
          }
          EXPECT_EQ(sum, power(m * x + r, n));
        }
      }
    }
  }
}

// W_{m,r+1}(n,k) = sum_{j=k}^{n} C(n,j) W_{m,r}(j,k).
TEST(WhitneyTable, VerticalRecurrence) {
  for (const auto& m : kMs) {
    for (const auto& r : kRs) {
      const auto lo = whitney_table({m, r}, 10);
      const auto hi = whitney_table({m, r + 1}, 10);
      for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          Rational sum(0);
          for (std::size_t j = k; j <= n; ++j) sum += Rational(binomial(n, j)) * lo.at(j, k);
          EXPECT_EQ(hi.at(n, k), sum);
        }
      }
    }
  }
}

TEST(AliasParams, Examples) {
  using F = AliasKind::Family;
  EXPECT_EQ(alias_params({F::r_beta_stirling, 1, 2}), WhitneyParams(2, 1));
  EXPECT_EQ(alias_params({F::rucinski_voigt, 3, 2}), WhitneyParams(2, 3));
  EXPECT_EQ(alias_params({F::noncentral_whitney, 2, 1}), WhitneyParams(2, -1));
  EXPECT_THROW(alias_params({F::r_beta_stirling, 1, 0}), std::invalid_argument);
  EXPECT_THROW(alias_params({F::rucinski_voigt, 3, 0}), std::invalid_argument);
}

TEST(WhitneyCache, GrowsAndKeepsReferencesValid) {
  WhitneyCache cache;
  const Rational& small = cache.at({2, 1}, 3, 1);
  EXPECT_EQ(small, 13);
  EXPECT_EQ(cache.at({2, 1}, 40, 40), 1);
  EXPECT_EQ(small, 13);
  EXPECT_EQ(cache.at({2, 1}, 3, 5), 0);
  EXPECT_EQ(cache.table({2, 1}, 20).at(20, 3), whitney_explicit({2, 1}, 20, 3));
}

TEST(WriteTriangle, Formats) {
  const auto t = whitney_table({Rational(1, 2), 1}, 2);
  std::ostringstream table, csv, json;
  write_triangle(table, t, TableFormat::table);
  write_triangle(csv, t, TableFormat::csv);
  write_triangle(json, t, TableFormat::json);
  EXPECT_EQ(csv.str(), "n,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,\"5/2\"\n2,2,1\n");
  EXPECT_NE(table.str().find("2 1 5/2\n"), std::string::npos);
  EXPECT_NE(json.str().find(R"({"n":2,"k":1,"value":"5/2"})"), std::string::npos);
}

}  // namespace
}  // namespace dowling
