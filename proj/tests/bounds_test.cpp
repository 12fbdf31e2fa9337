#include <gtest/gtest.h>

#include <cmath>

#include "ffcurve/bounds.hpp"
#include "ffcurve/error.hpp"

using namespace ffc;
using namespace ffc::bounds;

TEST(HasseWeil, Exact) {
  EXPECT_EQ(hasse_weil_max(4, 1), 9u);
  EXPECT_EQ(hasse_weil_max(9, 3), 28u);
  EXPECT_EQ(hasse_weil_max(8, 2), 9u + 11u);
  EXPECT_EQ(hasse_weil_max(2, 0), 3u);
  // 2 g sqrt(l) hits an integer exactly
  EXPECT_EQ(hasse_weil_max(16, 6), 17u + 48u);
  for (std::uint64_t l : {2, 3, 4, 5, 7, 8, 9, 25, 27, 1024}) {
    for (std::uint64_t g = 0; g < 60; ++g) {
      const double approx = l + 1 + 2 * g * std::sqrt(static_cast<double>(l));
      EXPECT_LE(static_cast<double>(hasse_weil_max(l, g)), approx + 1e-9);
      EXPECT_GT(static_cast<double>(hasse_weil_max(l, g)) + 1, approx - 1e-9);
    }
  }
  EXPECT_THROW(hasse_weil_max(6, 1), DomainError);
}

TEST(HasseWeil, MaximalGenusThreshold) {
  // maximal curves over GF(l), l = r^2, have g <= r(r-1)/2
  for (std::uint64_t r : {2, 3, 4, 5, 7, 8}) {
    const std::uint64_t l = r * r;
    EXPECT_FALSE(exceeds_maximal_genus(l, r * (r - 1) / 2));
    EXPECT_TRUE(exceeds_maximal_genus(l, r * (r - 1) / 2 + 1));
  }
  EXPECT_TRUE(exceeds_maximal_genus(8, 10));
}

TEST(Oesterle, IntegerBounds) {
  EXPECT_EQ(oesterle_min_genus(8, 17).genus_bound, 2u);
  EXPECT_EQ(oesterle_min_genus(8, 33).genus_bound, 6u);
  EXPECT_EQ(oesterle_min_genus(16, 129).genus_bound, 18u);
  EXPECT_EQ(oesterle_min_genus(27, 244).genus_bound, 26u);
  EXPECT_NEAR(oesterle_min_genus(8, 17).real_bound, 1.414, 0.001);
}

TEST(Oesterle, RootSolvesEquation) {
  for (std::uint64_t q : {2, 3, 4, 8, 9, 16, 27}) {
    const auto sq = std::sqrt(static_cast<double>(q));
    for (std::uint64_t N = static_cast<std::uint64_t>(sq) + 3; N < 400; N += 7) {
      const auto t = oesterle_min_genus(q, N);
      EXPECT_GE(t.theta0, std::acos(-1.0) / (t.m + 1) - 1e-12);
      EXPECT_LE(t.theta0, std::acos(-1.0) / t.m + 1e-12);
      const double res = std::cos((t.m + 1) / 2.0 * t.theta0) + t.u * std::cos((t.m - 1) / 2.0 * t.theta0);
      EXPECT_NEAR(res, 0.0, 1e-9);
      EXPECT_GE(static_cast<double>(t.genus_bound), t.real_bound - 1e-9);
      // a genus meeting the bound must also be compatible with Hasse-Weil
      EXPECT_GE(hasse_weil_max(q, t.genus_bound), N);
    }
  }
}

TEST(Oesterle, MonotoneInN) {
  for (std::uint64_t q : {4, 8, 9}) {
    double prev = -1;
    for (std::uint64_t N = 6; N < 300; ++N) {
      const double b = oesterle_min_genus(q, N).real_bound;
      EXPECT_GE(b, prev - 1e-9) << q << " " << N;
      prev = b;
    }
  }
}

TEST(Oesterle, RejectsBadInput) {
  EXPECT_THROW(oesterle_min_genus(6, 20), DomainError);
  EXPECT_THROW(oesterle_min_genus(9, 3), DomainError);
  EXPECT_THROW(oesterle_min_genus(9, 1), DomainError);
}

TEST(DrinfeldVladut, Values) {
  EXPECT_EQ(drinfeld_vladut(4).exact, 1u);
  EXPECT_EQ(drinfeld_vladut(49).exact, 6u);
  EXPECT_FALSE(drinfeld_vladut(8).exact);
  EXPECT_NEAR(drinfeld_vladut(8).value, std::sqrt(8.0) - 1, 1e-15);
  EXPECT_THROW(drinfeld_vladut(10), DomainError);
}
