#include <gtest/gtest.h>

#include <cmath>

#include "cover_ramsey/bounds.hpp"
#include "cover_ramsey/error.hpp"

using namespace cover_ramsey;

namespace {

long double choose(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  long double v = 1;
  for (std::size_t i = 1; i <= r; ++i) v = v * static_cast<long double>(n - r + i) / static_cast<long double>(i);
  return v;
}

// Floating evaluation of the LLL left-hand side, used away from the boundary.
long double lll_float(std::size_t n, std::size_t t, std::size_t k) {
  const long double pairs = choose(t, 2);
  return std::exp(1.0L) * pairs * choose(k, 2) * choose(n - 2, t - 2) * std::pow(2.0L, 1.0L - pairs);
}

}  // namespace

TEST(Exact, BinomialAndRendering) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
  EXPECT_EQ(to_fraction_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_fraction_string(Rational(486)), "486");
  EXPECT_GT(e_upper_bound(), Rational(271828182845904LL, 100000000000000LL));
  EXPECT_LT(e_upper_bound(), Rational(2718281828459046LL, 1000000000000000LL));
}

TEST(Thm1, Examples) {
  EXPECT_EQ(thm1_value(2, 6), 144);
  EXPECT_EQ(thm1_value(3, 6), 486);
  EXPECT_EQ(thm1_value(2, 2), 6);
  EXPECT_TRUE(thm1_sufficiency(2, 2));
  const auto rep = thm1_upper_bound(3, 6);
  EXPECT_EQ(rep.formula_id, "thm1-upper");
  ASSERT_TRUE(rep.exact.has_value());
  EXPECT_EQ(*rep.exact, 486);
  EXPECT_THROW(thm1_upper_bound(1, 6), Error);
}

TEST(Scatter, Examples) {
  EXPECT_EQ(scatter_failure_bound(100, 7, 2), 0);
  EXPECT_EQ(scatter_failure_bound(29, 3, 3), Rational(1, 9));
  EXPECT_LT(scatter_failure_bound(486, 6, 3), 1);
  EXPECT_EQ(scatter_failure_bound(486, 6, 3), Rational(15, 121));
  const auto rep = scatter_bound_report(29, 3, 3);
  EXPECT_EQ(rep.satisfied, true);
  EXPECT_EQ(render(rep).find("1/9") != std::string::npos, true);
}

TEST(Lll, SmallCaseFails) {
  EXPECT_FALSE(lll_inequality_holds(3, 3, 2));
  EXPECT_EQ(lll_lhs(3, 3, 2), e_upper_bound() * Rational(3, 4));
}

TEST(Lll, AgreesWithFloatingEvaluationAwayFromOne) {
  for (std::size_t t = 3; t <= 14; ++t) {
    for (std::size_t k = 2; k <= 5; ++k) {
      for (std::size_t n = t; n <= 300; n += 7) {
        const long double v = lll_float(n, t, k);
        if (std::fabs(v - 1.0L) < 1e-9L) continue;
        EXPECT_EQ(lll_inequality_holds(n, t, k), v < 1.0L) << n << " " << t << " " << k;
      }
    }
  }
}

TEST(Lll, DownwardClosedInN) {
  for (std::size_t t = 5; t <= 12; ++t) {
    bool seen_false = false;
    for (std::size_t n = t; n <= 400; ++n) {
      const bool holds = lll_inequality_holds(n, t, 3);
      if (seen_false) EXPECT_FALSE(holds);
      seen_false = seen_false || !holds;
    }
  }
}

TEST(Lll, ThresholdIsSharp) {
  for (std::size_t t : {5, 6, 8, 10, 14, 20}) {
    const std::size_t n = lll_threshold_n(t, 3);
    EXPECT_TRUE(lll_inequality_holds(n, t, 3));
    EXPECT_FALSE(lll_inequality_holds(n + 1, t, 3));
  }
  EXPECT_EQ(lll_threshold_n(10, 3), 86u);
}

TEST(Lll, ThresholdMonotoneInT) {
  std::size_t prev = 0;
  for (std::size_t t = 6; t <= 40; t += 2) {
    const std::size_t n = lll_threshold_n(t, 3);
    EXPECT_GT(n, prev);
    prev = n;
  }
}

TEST(Lll, AdmissibleFilter) {
  for (std::size_t t : {8, 10, 20}) {
    const std::size_t n = lll_threshold_n(t, 3, true);
    EXPECT_EQ(n % 6, 3u);
    EXPECT_TRUE(lll_inequality_holds(n, t, 3));
    EXPECT_LE(lll_threshold_n(t, 3) - n, 5u);
  }
}

TEST(Lll, NoValidN) {
  try {
    lll_threshold_n(3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoValidN);
  }
}

TEST(Asymptote, Values) {
  EXPECT_NEAR(asymptotic_lower_value(2), 4 * std::sqrt(2.0) / std::exp(1.0), 1e-12);
  EXPECT_NEAR(asymptotic_lower_value(20), 10654.9267461, 1e-6);
  EXPECT_EQ(asymptotic_lower(20).substr(0, 10), "10654.9267");
  for (std::size_t t = 2; t <= 40; t += 2) {
    EXPECT_NEAR(asymptotic_lower_value(t + 2) / asymptotic_lower_value(t), 2.0 * (t + 2) / t, 1e-12);
  }
}

TEST(ClassicalTable, KnownValues) {
  EXPECT_EQ(known_classical_ramsey(3, 3), 6u);
  EXPECT_EQ(known_classical_ramsey(5, 4), 25u);
  EXPECT_EQ(known_classical_ramsey(2, 7), 7u);
  EXPECT_FALSE(known_classical_ramsey(5, 5).has_value());
}
