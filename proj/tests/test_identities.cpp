#include "dowling/identities.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dowling {
namespace {

Bindings at(std::optional<Rational> m, std::optional<Rational> r, std::optional<std::size_t> ell,
            std::optional<std::size_t> n, std::optional<Rational> x = {},
            std::optional<Rational> y = {}) {
  Bindings b;
  b.m = std::move(m);
  b.r = std::move(r);
  b.ell = ell;
  b.n = n;
  b.x = std::move(x);
  b.y = std::move(y);
  return b;
}

TEST(SpiveyFirst, Examples) {
  IdentitySuite suite;
  const auto bi = suite.check_spivey_first({1, 0}, 1, 1, 2, 1, SpiveyMode::bivariate);
  EXPECT_TRUE(bi.passed());
  EXPECT_EQ(bi.lhs, 4);
  // xy + x(x-1)y^2 at a non-integer point
  const Rational x(7, 3), y(-2, 5);
  const auto gen = suite.check_spivey_first({1, 0}, 1, 1, x, y, SpiveyMode::bivariate);
  EXPECT_TRUE(gen.passed());
  EXPECT_EQ(gen.lhs, x * y + x * (x - 1) * y * y);

  const auto num = suite.check_spivey_first({2, 1}, 1, 1, 0, 0, SpiveyMode::numbers);
  EXPECT_EQ(num.lhs, 6);
  EXPECT_EQ(num.rhs, 6);
  const auto zero = suite.check_spivey_first({3, 2}, 0, 0, 1, 1, SpiveyMode::bivariate);
  EXPECT_EQ(zero.lhs, 1);
  EXPECT_TRUE(zero.passed());
}

TEST(SpiveySecond, Examples) {
  IdentitySuite suite;
  const auto rb = suite.check_spivey_second({1, 1}, 1, 1, 0, 0, SpiveyMode::numbers);
  EXPECT_EQ(rb.lhs, 5);
  EXPECT_EQ(rb.rhs, 5);
  const auto classic = suite.check_spivey_second({1, 0}, 1, 1, 0, 0, SpiveyMode::numbers);
  EXPECT_EQ(classic.lhs, 2);
  EXPECT_TRUE(classic.passed());
  EXPECT_TRUE(suite.check_spivey_second({2, 1}, 0, 0, 3, 1, SpiveyMode::bivariate).passed());
}

// Literal reading of the second form without the m^i factor, computed
// here from scratch: it disagrees with D(l+n) once m != 1.
TEST(SpiveySecond, PrintedFormWithoutMPowerFailsForMTwo) {
  const WhitneyParams p(2, 0);
  const Rational x(3), y(1);
  // l = 0, n = 1: W(0,0) = 1, sum_i (r)^(1-i) C(1,i) B_i(x, y/m).
  const Rational bell1 = x * (y / 2);  // B_1(x, y/m) = x y/m
  const Rational literal = Rational(0) + bell1;
  const Rational lhs = eval_poly(dowling_bivariate(p, 1), x, y);
  EXPECT_EQ(lhs, x * y);
  EXPECT_NE(literal, lhs);
  IdentitySuite suite;
  EXPECT_TRUE(suite.check_spivey_second(p, 0, 1, x, y, SpiveyMode::bivariate).passed());
}

TEST(Catalog, Examples) {
  IdentitySuite suite;
  const auto classic = suite.check_catalog("spivey-classic", at({}, {}, 1, 1));
  EXPECT_EQ(classic.lhs, 2);
  EXPECT_TRUE(classic.passed());
  const auto bell = suite.check_catalog("bell-sum", at({}, {}, {}, 3));
  EXPECT_EQ(bell.lhs, 5);
  EXPECT_EQ(bell.rhs, 5);
  const auto defining = suite.check_catalog("conclusion-defining", at(2, 1, 2, {}, 2, 1));
  EXPECT_EQ(defining.lhs, 11);
  EXPECT_EQ(defining.rhs, 11);
}

TEST(Catalog, UnknownIdAndMissingBindings) {
  IdentitySuite suite;
  EXPECT_THROW(suite.check_catalog("no-such-identity", {}), std::invalid_argument);
  EXPECT_THROW(suite.check_catalog("spivey-first", at(2, 1, 1, {})), std::invalid_argument);
  EXPECT_THROW(suite.check_catalog("mezo-r1", at({}, {}, 1, 1)), std::invalid_argument);
  EXPECT_TRUE(suite.check_catalog("mezo-r1", at({}, 1, 1, 1)).passed());
  EXPECT_EQ(find_entry("nope"), nullptr);
  EXPECT_EQ(all_identity_ids().size(), catalog().size());
}

TEST(Catalog, NotesRecordCorrections) {
  ASSERT_NE(find_entry("gould-quaintance"), nullptr);
  EXPECT_FALSE(find_entry("gould-quaintance")->note.empty());
  EXPECT_FALSE(find_entry("mangontarum-univariate")->note.empty());
}

// At m = 1 the first form is the r-Bell generalisation; at m = 1, r = 0 the
// second form in numbers mode is classical Spivey.
TEST(Catalog, ReductionCoherence) {
  IdentitySuite suite;
  for (std::size_t ell = 0; ell <= 3; ++ell) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const Rational x(5, 2), y(3);
      const auto first = suite.check_spivey_first({1, 2}, ell, n, x, y, SpiveyMode::bivariate);
      const auto zl = suite.check_catalog("zheng-li-r1", at({}, 2, ell, n, x, y));
      EXPECT_EQ(first.lhs, zl.lhs);
      EXPECT_EQ(first.rhs, zl.rhs);
      const auto second = suite.check_spivey_second({1, 0}, ell, n, 0, 0, SpiveyMode::numbers);
      const auto classic = suite.check_catalog("spivey-classic", at({}, {}, ell, n));
      EXPECT_EQ(second.lhs, classic.lhs);
      EXPECT_EQ(second.rhs, classic.rhs);
    }
  }
}

// The l = 1 recurrence as printed (no k = 0 term) only holds at r = 0.
TEST(Catalog, PrintedOneStepRecurrenceNeedsZeroR) {
  auto printed = [](const WhitneyParams& p, std::size_t n, const Rational& x, const Rational& y) {
    Rational sum(0);
    for (std::size_t i = 0; i <= n; ++i) {
      sum += power(p.m(), n - i) * Rational(binomial(n, i)) *
             eval_poly(dowling_bivariate(p, i), x - 1, y) * x * y;
    }
    return sum;
  };
  const Rational x(3), y(2);
  EXPECT_EQ(printed(WhitneyParams(2, 0), 3, x, y), eval_poly(dowling_bivariate({2, 0}, 4), x, y));
  EXPECT_NE(printed(WhitneyParams(2, 1), 3, x, y), eval_poly(dowling_bivariate({2, 1}, 4), x, y));
  IdentitySuite suite;
  EXPECT_TRUE(suite.check_catalog("conclusion-recurrence", at(2, 1, {}, 3, x, y)).passed());
}

TEST(ZeroPowerControl, FailsExactlyWhereZeroToZeroEnters) {
  IdentitySuite zero({.zero_pow = ZeroPow::zero});
  const auto num = zero.check_spivey_first({2, 1}, 1, 1, 0, 0, SpiveyMode::numbers);
  EXPECT_EQ(num.lhs, 6);
  EXPECT_EQ(num.rhs, 4);
  EXPECT_FALSE(num.passed());
  EXPECT_FALSE(zero.check_catalog("spivey-classic", at({}, {}, 0, 1)).passed());
  // The k = 0, i = n term at l = n = 1 carries S(1,0) = 0, so 0^0 is invisible there.
  EXPECT_TRUE(zero.check_catalog("spivey-classic", at({}, {}, 1, 1)).passed());
}

TEST(LimitForms, UPolynomialsAgree) {
  IdentitySuite suite;
  for (const Rational& m : {Rational(1), Rational(2), Rational(1, 2)}) {
    for (const Rational& r : {Rational(0), Rational(1)}) {
      for (std::size_t ell = 0; ell <= 3; ++ell) {
        for (std::size_t n = 0; n <= 3; ++n) {
          const Rational y(3, 2);
          const UPoly lhs = limit_reduction({m, r}, ell + n, y);
          EXPECT_EQ(suite.spivey_first_rhs_in_u({m, r}, ell, n, y), lhs);
          EXPECT_EQ(suite.spivey_second_rhs_in_u({m, r}, ell, n, y)[0], lhs[0]);
        }
      }
    }
  }
}

TEST(GridConfig, ParsesAndDefaults) {
  std::istringstream in("# comment\nm-list = 1, 2\n\nsum-budget=3 # trailing\n");
  const ParamGrid g = parse_grid_config(in);
  EXPECT_EQ(g.m_list, (std::vector<Rational>{1, 2}));
  EXPECT_EQ(g.sum_budget, 3u);
  EXPECT_EQ(g.r_list, default_grid().r_list);
  EXPECT_EQ(g.series_order, 10u);

  std::istringstream unknown("colour=blue\n");
  EXPECT_THROW(parse_grid_config(unknown), std::invalid_argument);
  std::istringstream zero_m("m-list=0,1\n");
  EXPECT_THROW(parse_grid_config(zero_m), std::invalid_argument);
  std::istringstream bad("x-max=seven\n");
  EXPECT_THROW(parse_grid_config(bad), std::invalid_argument);
  EXPECT_THROW(load_grid_config("/nonexistent/grid.cfg"), std::runtime_error);
}

TEST(RunGrid, EmptyIdListHasNoInstances) {
  const auto report = run_grid(default_grid(), std::vector<std::string>{});
  EXPECT_EQ(report.instances(), 0u);
  EXPECT_TRUE(report.all_pass());
}

TEST(RunGrid, SmallGridAllPassAndDeterministic) {
  ParamGrid g = default_grid();
  g.sum_budget = 4;
  g.x_max = 3;
  g.series_order = 5;
  const auto ids = all_identity_ids();
  const auto a = run_grid(g, ids);
  const auto b = run_grid(g, ids);
  EXPECT_TRUE(a.all_pass());
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.to_table(), b.to_table());
  for (const auto& t : a.tallies) {
    EXPECT_EQ(t.instances, t.passes + t.failures);
    EXPECT_GT(t.instances, 0u) << t.id;
  }
  EXPECT_THROW(run_grid(g, std::vector<std::string>{"bogus"}), std::invalid_argument);
}

TEST(RunGrid, BellOnlyGridRunsBellFamily) {
  ParamGrid g = default_grid();
  g.m_list = {1};
  g.r_list = {0};
  g.sum_budget = 4;
  g.x_max = 2;
  const auto report = run_grid(g, all_identity_ids());
  EXPECT_TRUE(report.all_pass());
  for (const auto& t : report.tallies) {
    if (t.id == "spivey-classic") {
      EXPECT_GT(t.instances, 0u);
    }
  }
}

TEST(RunGrid, ZeroPowerRecordsFirstFailure) {
  ParamGrid g = default_grid();
  g.sum_budget = 3;
  const std::vector<std::string> ids{"spivey-classic"};
  const auto report = run_grid(g, ids, {.zero_pow = ZeroPow::zero});
  ASSERT_FALSE(report.all_pass());
  ASSERT_TRUE(report.tallies[0].first_failure.has_value());
  EXPECT_EQ(*report.tallies[0].first_failure->bindings.ell, 0u);
}

}  // namespace
}  // namespace dowling
