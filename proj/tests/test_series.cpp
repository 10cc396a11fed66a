#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "cyclo/series.hpp"

using namespace cyclo;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t t, Coeff constant) {
  std::uniform_int_distribution<int> digit(-9, 9);
  std::vector<Coeff> c(t);
  for (auto& x : c) x = digit(rng);
  c[0] = constant;
  return TruncatedSeries(c, t);
}

}  // namespace

TEST(Series, ConstructionPadsAndTruncates) {
  const TruncatedSeries s({1, 2, 3, 4}, 2);
  EXPECT_EQ(s.truncation(), 2u);
  EXPECT_EQ(s[1], 2);
  const TruncatedSeries p({5}, 3);
  EXPECT_EQ(p, TruncatedSeries({5, 0, 0}, 3));
  EXPECT_THROW(TruncatedSeries(0), Error);
}

TEST(Series, MulExamples) {
  EXPECT_EQ(mul(TruncatedSeries({1, 1}, 3), TruncatedSeries({1, -1}, 3)), TruncatedSeries({1, 0, -1}, 3));
  EXPECT_EQ(mul(TruncatedSeries({4, -2, 7}, 3), TruncatedSeries(3)), TruncatedSeries(3));
  EXPECT_EQ(mul(TruncatedSeries({1, 1, 1}, 3), TruncatedSeries({1, 1, 1}, 3)), TruncatedSeries({1, 2, 3}, 3));
  EXPECT_THROW(mul(TruncatedSeries(2), TruncatedSeries(3)), Error);
}

TEST(Series, InvertExamples) {
  EXPECT_EQ(invert(TruncatedSeries({1, -1}, 4)), TruncatedSeries({1, 1, 1, 1}, 4));
  EXPECT_EQ(invert(TruncatedSeries({1, -1, 1}, 8)), TruncatedSeries({1, 1, 0, -1, -1, 0, 1, 1}, 8));
  EXPECT_EQ(invert(TruncatedSeries({-1, 1}, 3)), TruncatedSeries({-1, -1, -1}, 3));
}

TEST(Series, InvertRejectsNonUnit) {
  for (Coeff c : {0, 2, -3}) {
    try {
      invert(TruncatedSeries({c, 1}, 4));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::non_unit_constant_term);
    }
  }
}

TEST(Series, OneMinusPowerExamples) {
  EXPECT_EQ(apply_one_minus_power(TruncatedSeries({1, 1, 1}, 3), 1, -1), TruncatedSeries({1, 2, 3}, 3));
  EXPECT_EQ(apply_one_minus_power(TruncatedSeries::one(7), 3, -1), TruncatedSeries({1, 0, 0, 1, 0, 0, 1}, 7));
  EXPECT_EQ(apply_one_minus_power(TruncatedSeries({1, 0, 0, 1}, 7), 3, 1), TruncatedSeries({1, 0, 0, 0, 0, 0, -1}, 7));
  // d beyond the truncation is the identity.
  EXPECT_EQ(apply_one_minus_power(TruncatedSeries({1, 2}, 2), 5, 1), TruncatedSeries({1, 2}, 2));
  EXPECT_THROW(apply_one_minus_power(TruncatedSeries(3), 0, 1), Error);
  EXPECT_THROW(apply_one_minus_power(TruncatedSeries(3), 1, 2), Error);
}

TEST(Series, OverflowIsLoud) {
  constexpr Coeff big = std::numeric_limits<Coeff>::max();
  try {
    apply_one_minus_power(TruncatedSeries({big, big}, 2), 1, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::arithmetic_overflow);
  }
  EXPECT_THROW(mul(TruncatedSeries({big / 2 + 1}, 1), TruncatedSeries({2}, 1)), Error);
  EXPECT_THROW(apply_one_minus_power(TruncatedSeries({std::numeric_limits<Coeff>::min(), 0, 1}, 3), 2, 1), Error);
}

TEST(SeriesProperties, OneMinusPowerRoundTrip) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t t = 1 + rng() % 64;
    const auto a = random_series(rng, t, static_cast<Coeff>(rng() % 19) - 9);
    for (std::size_t d = 1; d < t; ++d) {
      ASSERT_EQ(apply_one_minus_power(apply_one_minus_power(a, d, 1), d, -1), a);
      ASSERT_EQ(apply_one_minus_power(apply_one_minus_power(a, d, -1), d, 1), a);
    }
  }
}

TEST(SeriesProperties, OneMinusPowerIsMultiplication) {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t t = 2 + rng() % 40;
    const auto a = random_series(rng, t, 1);
    const std::size_t d = 1 + rng() % (t - 1);
    std::vector<Coeff> f(t, 0);
    f[0] = 1;
    f[d] = -1;
    const TruncatedSeries factor(f, t);
    ASSERT_EQ(apply_one_minus_power(a, d, 1), mul(a, factor));
    ASSERT_EQ(apply_one_minus_power(a, d, -1), mul(a, invert(factor)));
  }
}

TEST(SeriesProperties, InvertIsInvolution) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    // Inverse coefficients of digit-sized series grow roughly like 10^i.
    const std::size_t t = 1 + rng() % 12;
    const auto a = random_series(rng, t, iter % 2 == 0 ? 1 : -1);
    const auto b = invert(a);
    ASSERT_EQ(mul(a, b), TruncatedSeries::one(t));
    ASSERT_EQ(invert(b), a);
  }
}

TEST(SeriesProperties, MulCommutativeAssociative) {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t t = 1 + rng() % 64;
    const auto a = random_series(rng, t, static_cast<Coeff>(rng() % 19) - 9);
    const auto b = random_series(rng, t, static_cast<Coeff>(rng() % 19) - 9);
    const auto c = random_series(rng, t, static_cast<Coeff>(rng() % 19) - 9);
    ASSERT_EQ(mul(a, b), mul(b, a));
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
  }
}
