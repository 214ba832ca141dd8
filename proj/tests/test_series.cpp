#include "dowling/dowling.hpp"
#include "dowling/series.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

namespace dowling {
namespace {

const std::vector<Rational> kMs{1, 2, 3, Rational(1, 2)};
const std::vector<Rational> kRs{0, 1, 2, Rational(1, 2)};
const std::vector<Rational> kYs{Rational(1, 2), 1, 2, 3};

RationalFunction rf(std::initializer_list<Rational> num, std::initializer_list<Rational> den) {
  return {Polynomial(num), Polynomial(den)};
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(order + 1);
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return TruncatedSeries(std::move(c));
}

TEST(SeriesArith, Examples) {
  SeriesOperands e;
  e.scalar = 1;
  e.order = 3;
  EXPECT_EQ(series_arith(SeriesOp::exp_linear, e).coeffs(),
            (std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6)}));

  const auto ep = TruncatedSeries::exp_linear(1, 6);
  const auto em = TruncatedSeries::exp_linear(-1, 6);
  EXPECT_EQ(series_arith(SeriesOp::mul, {.a = ep, .b = em, .exponent = 0}), TruncatedSeries::constant(1, 6));

  const auto one_plus_t = TruncatedSeries(std::vector<Rational>{1, 1, 0, 0, 0});
  EXPECT_EQ(series_arith(SeriesOp::int_pow, {.a = one_plus_t, .b = std::nullopt, .exponent = 2}).coeffs(),
            (std::vector<Rational>{1, 2, 1, 0, 0}));
  EXPECT_EQ(series_arith(SeriesOp::add, {.a = one_plus_t, .b = ep}).order(), 4u);
}

TEST(TruncatedSeries, ExpLinearCoefficients) {
  for (const Rational& c : {Rational(0), Rational(3), Rational(-2, 5)}) {
    const auto s = TruncatedSeries::exp_linear(c, 10);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(s[n], power(c, n) / Rational(factorial(n)));
  }
}

TEST(TruncatedSeries, MulCommutativeAndAssociative) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(TruncatedSeries, ReciprocalAndGeometric) {
  const auto g = TruncatedSeries::geometric(3, 6);
  const auto one_minus = TruncatedSeries(std::vector<Rational>{1, -3, 0, 0, 0, 0, 0});
  EXPECT_EQ(one_minus.reciprocal(), g);
  EXPECT_EQ(g * one_minus, TruncatedSeries::constant(1, 6));
  EXPECT_THROW(TruncatedSeries(std::vector<Rational>{0, 1}).reciprocal(), std::domain_error);
}

TEST(RfPochhammer, Examples) {
  EXPECT_EQ(rf_pochhammer(RationalFunction(1), 3), RationalFunction(6));
  const auto f = rf({-1, 1}, {0, 1});
  EXPECT_EQ(rf_pochhammer(f, 1), f);
  const auto g = rf({-1, 1}, {0, 2});
  const auto expected = rf({1, -4, 3}, {0, 0, 4});
  const auto got = rf_pochhammer(g, 2);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.den().coeffs(), expected.den().coeffs());
  EXPECT_EQ(rf_pochhammer(g, 0), RationalFunction(1));
}

TEST(RationalFunction, ReducesAndNormalises) {
  // (t^2 - 1)/(2t - 2) = (t + 1)/2
  const auto h = rf({-1, 0, 1}, {-2, 2});
  EXPECT_EQ(h.den(), Polynomial::constant(1));
  EXPECT_EQ(h.num(), (Polynomial{Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(h.expandable());
  EXPECT_FALSE(rf({1}, {0, 1}).expandable());
  EXPECT_THROW(rf({1}, {0, 1}).expand(3), std::domain_error);
  EXPECT_EQ(h.to_json(), R"({"num":["1/2","1/2"],"den":["1"]})");
}

TEST(Hyp2F1, Examples) {
  const auto a = rf({-1, 1}, {0, 2});
  const auto c = rf({-1, 3}, {0, 2});
  EXPECT_EQ(hyp2f1_terminating(a, 0, c, 5), RationalFunction(1));
  const auto expected = RationalFunction(1) + rf({-1, 1}, {-1, 3});
  EXPECT_EQ(hyp2f1_terminating(a, 1, c, -1), expected);
  EXPECT_EQ(hyp2f1_terminating(Rational(2), 1, Rational(4), Rational(1)), Rational(1, 2));
  EXPECT_THROW(hyp2f1_terminating(Rational(1), 3, Rational(-1), Rational(1)), std::domain_error);
}

// Literal sum_k <a>_k <-x>_k / <c>_k z^k / k!.
Rational hyp_literal(const Rational& a, std::size_t x, const Rational& c, const Rational& z) {
  Rational sum(0);
  const Rational b = -Rational(static_cast<long>(x));
  for (std::size_t k = 0; k <= x; ++k) {
    sum += rising_factorial(a, k) * rising_factorial(b, k) / rising_factorial(c, k) *
           power(z, k) / Rational(factorial(k));
  }
  return sum;
}

TEST(Hyp2F1, ScalarMatchesLiteralSumAndPfaff) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7), deg(0, 6);
  int checked = 0;
  while (checked < 40) {
    Rational a(num(rng), den(rng)), c(num(rng), den(rng)), z(num(rng), den(rng));
    a.canonicalize();
    c.canonicalize();
    z.canonicalize();
    const std::size_t x = deg(rng);
    if (z == 1) continue;
    bool defined = true;
    for (std::size_t k = 0; k < x; ++k) defined = defined && c + static_cast<long>(k) != 0;
    if (!defined) continue;
    const Rational lhs = hyp2f1_terminating(a, x, c, z);
    EXPECT_EQ(lhs, hyp_literal(a, x, c, z));
    // Pfaff on the terminating parameter: 2F1(a,-x;c|z) = (1-z)^x 2F1(-x, c-a; c | z/(z-1)).
    Rational pfaff(0);
    const Rational w = z / (z - 1);
    const Rational b = -Rational(static_cast<long>(x));
    for (std::size_t k = 0; k <= x; ++k) {
      pfaff += rising_factorial(b, k) * rising_factorial(c - a, k) / rising_factorial(c, k) *
               power(w, k) / Rational(factorial(k));
    }
    EXPECT_EQ(lhs, power(1 - z, x) * pfaff);
    ++checked;
  }
}

TEST(EgfCheck, Examples) {
  const auto v = egf_check({2, 1}, 2, 1, 2);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(dowling_egf_series({2, 1}, 2, 1, 2)[2], Rational(11, 2));
  const auto e0 = dowling_egf_series({3, 2}, 0, Rational(1, 2), 5);
  EXPECT_EQ(e0, TruncatedSeries::exp_linear(2, 5));
  EXPECT_EQ(dowling_egf_series({1, 0}, 1, 1, 3), TruncatedSeries::exp_linear(1, 3));
  EXPECT_THROW(egf_check({2, 1}, Rational(1, 2), 1, 3), std::invalid_argument);
}

// Independent build: e^{rt} [1 + y(e^{mt}-1)/m]^x by repeated series products.
TEST(EgfCheck, AgreesWithDirectSeriesProduct) {
  for (const auto& m : kMs) {
    for (const auto& r : kRs) {
      for (const auto& y : kYs) {
        for (std::size_t x = 0; x <= 4; ++x) {
          const std::size_t order = 9;
          const auto inner = TruncatedSeries::constant(1, order) +
                             (TruncatedSeries::exp_linear(m, order) -
                              TruncatedSeries::constant(1, order)) * (y / m);
          const auto direct = TruncatedSeries::exp_linear(r, order) * pow(inner, x);
          EXPECT_EQ(dowling_egf_series({m, r}, x, y, order), direct);
          EXPECT_TRUE(egf_check({m, r}, x, y, order).holds);
        }
      }
    }
  }
}

TEST(EgfTwoVariable, Examples) {
  const auto f = dowling_egf_series({2, 1}, 2, 1, 4);
  const auto bi = BiSeries::substitute_sum(f, 2, 2);
  EXPECT_EQ(bi.at(0, 0), 1);
  EXPECT_EQ(bi.at(1, 1), 11);
  EXPECT_EQ(bi.at(2, 0), Rational(11, 2));
  EXPECT_TRUE(egf_two_variable_check({2, 1}, 2, 1, 4, 4).holds);
  EXPECT_TRUE(egf_two_variable_check({Rational(1, 2), 2}, 3, 3, 3, 5).holds);
}

TEST(Ogf, Examples) {
  const auto h = ogf_hypergeometric({2, 1}, 1, 1, 3);
  EXPECT_EQ(h.coeffs(), (std::vector<Rational>{1, 2, 5, 14}));
  EXPECT_EQ(ogf_hypergeometric_rf({2, 1}, 1, 1), rf({1, -2}, {1, -4, 3}));
  EXPECT_EQ(ogf_hypergeometric({2, 3}, 0, 1, 4), TruncatedSeries::geometric(3, 4));
  // The Bell corollary point (m = 1, y = 1) sits on the singular argument y = m;
  // its values come from the partial-fraction route, and 2F1 is checked beside it.
  EXPECT_EQ(ogf_partial_fractions({1, 0}, 1, 1, 3).coeffs(), (std::vector<Rational>{1, 1, 1, 1}));
  EXPECT_THROW(ogf_hypergeometric({1, 0}, 1, 1, 3), std::invalid_argument);
  EXPECT_EQ(ogf_hypergeometric({1, 0}, 1, Rational(1, 2), 3),
            ogf_partial_fractions({1, 0}, 1, Rational(1, 2), 3));
  EXPECT_THROW(ogf_hypergeometric({2, 1}, 1, 2, 3), std::invalid_argument);

  EXPECT_EQ(ogf_partial_fractions({2, 1}, 1, 1, 3).coeffs(), (std::vector<Rational>{1, 2, 5, 14}));
  EXPECT_EQ(ogf_partial_fractions({2, 1}, 1, 2, 2).coeffs(), (std::vector<Rational>{1, 3, 9}));
  EXPECT_EQ(ogf_partial_fractions({2, Rational(1, 2)}, 0, 7, 3), TruncatedSeries::geometric(Rational(1, 2), 3));
}

TEST(Ogf, BothRoutesMatchDirectValues) {
  for (const auto& m : kMs) {
    for (const auto& r : kRs) {
      for (const auto& y : kYs) {
        for (std::size_t x = 0; x <= 4; ++x) {
          const auto pf = ogf_partial_fractions({m, r}, x, y, 8);
          for (std::size_t n = 0; n <= 8; ++n) {
            EXPECT_EQ(pf[n], eval_poly(dowling_bivariate({m, r}, n), x, y));
          }
          if (y != m) {
            EXPECT_EQ(ogf_hypergeometric({m, r}, x, y, 8), pf);
          }
        }
      }
    }
  }
}

TEST(WhitneyOgf, ColumnsMatchTriangle) {
  for (const auto& m : kMs) {
    for (const auto& r : kRs) {
      const auto t = whitney_table({m, r}, 10);
      for (std::size_t k = 0; k <= 5; ++k) {
        const auto s = whitney_ogf({m, r}, k, 10);
        for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(s[n], t.at(n, k));
      }
    }
  }
}

TEST(SeriesToJson, RendersStrings) {
  EXPECT_EQ(series_to_json(TruncatedSeries::exp_linear(1, 2)), R"(["1","1","1/2"])");
}

}  // namespace
}  // namespace dowling
