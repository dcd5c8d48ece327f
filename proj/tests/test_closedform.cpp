#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "braidcount/closedform.hpp"

using namespace braidcount;

namespace {

std::int64_t naive_phi(std::int64_t n) {
  std::int64_t out = 0;
  for (std::int64_t i = 1; i <= n; ++i) out += std::gcd(i, n) == 1 ? 1 : 0;
  return out;
}

}  // namespace

TEST(Totient, Examples) {
  const auto phi = totient_sieve(100);
  EXPECT_EQ(phi(1), 1);
  EXPECT_EQ(phi(6), 2);
  EXPECT_EQ(phi(12), 4);
  EXPECT_EQ(phi(97), 96);
  EXPECT_THROW(phi(0), std::out_of_range);
  EXPECT_THROW(phi(101), std::out_of_range);
  EXPECT_THROW(TotientTable(0), std::invalid_argument);
  EXPECT_THROW(TotientTable(TotientTable::max_capacity + 1), std::length_error);
}

TEST(Totient, SieveMatchesDefinition) {
  const auto phi = totient_sieve(3000);
  for (int n = 1; n <= 3000; ++n) ASSERT_EQ(phi(n), naive_phi(n)) << n;
}

TEST(G2, Values) {
  EXPECT_EQ(g2(0), 1);
  EXPECT_EQ(g2(5), 2);
  EXPECT_EQ(g2(1'000'000), 2);
}

TEST(G3, Examples) {
  EXPECT_EQ(g3_totient(0), 1);
  EXPECT_EQ(g3_totient(2), 10);
  EXPECT_EQ(g3_totient(3), 16);
  EXPECT_EQ(g3_via_c(0), 1);
  EXPECT_EQ(g3_via_c(1), 4);
  EXPECT_EQ(g3_via_c(2), 10);
  EXPECT_EQ(g3_via_gamma(0), 1);
  EXPECT_EQ(g3_via_gamma(1), 4);
  EXPECT_EQ(g3_via_gamma(4), 26);
  EXPECT_THROW(g3_totient(-1), std::invalid_argument);
}

TEST(G3, ThreeEvaluatorsAgree) {
  const TotientTable phi(2003);
  for (int k = 0; k <= 2000; ++k) {
    const auto t = g3_totient(k, phi);
    ASSERT_EQ(t, g3_via_gamma(k, phi)) << k;
    if (k <= 500) {
      ASSERT_EQ(t, g3_via_c(k)) << k;
    }
  }
}

TEST(Series, Examples) {
  const auto g2s = series("G2", 6);
  EXPECT_EQ(g2s.coefficients, (std::vector<std::int64_t>{1, 2, 2, 2, 2, 2, 2}));
  const auto g3s = series("G3", 5);
  EXPECT_EQ(g3s.coefficients[1], 4);
  const auto b3s = series("B3", 3);
  EXPECT_EQ(b3s.coefficients[2], 1);
  EXPECT_EQ(b3s.coefficients[4], 4);
  EXPECT_THROW(series("G4", 3), std::invalid_argument);
  EXPECT_THROW(series("G2", -1), std::invalid_argument);
}

TEST(Series, MatchClosedForms) {
  const int kmax = 300;
  const TotientTable phi(kmax + 3);
  const auto g3s = series("G3", kmax);
  const auto b3s = series("B3", kmax);
  const auto b2s = series("B2", kmax);
  ASSERT_EQ(g3s.coefficients.size(), static_cast<std::size_t>(kmax + 1));
  ASSERT_EQ(b3s.coefficients.size(), static_cast<std::size_t>(2 * kmax + 3));
  for (int k = 0; k <= kmax; ++k) {
    ASSERT_EQ(g3s.coefficients[static_cast<std::size_t>(k)], g3_totient(k, phi)) << k;
    ASSERT_EQ(b3s.coefficients[static_cast<std::size_t>(2 * k + 2)], g3_totient(k, phi)) << k;
    ASSERT_EQ(b3s.coefficients[static_cast<std::size_t>(2 * k + 1)], 0);
    ASSERT_EQ(b2s.coefficients[static_cast<std::size_t>(2 * k + 1)], g2(k));
    ASSERT_EQ(b2s.coefficients[static_cast<std::size_t>(2 * k)], 0);
  }
}

TEST(PowerSeries, Arithmetic) {
  const PowerSeries one_minus_z(5, {1, -1});
  const PowerSeries geom = PowerSeries(5, {1}) / one_minus_z;
  EXPECT_EQ(geom.coefficients(), (std::vector<std::int64_t>{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ((geom * one_minus_z).coefficients(), (std::vector<std::int64_t>{1, 0, 0, 0, 0, 0}));
  EXPECT_THROW(PowerSeries(3, {1}) / PowerSeries(3, {2, 1}), std::domain_error);
}

TEST(LambertSeries, HalfTotientMatchesPairCount) {
  const auto a = f_half_totient(2000);
  const auto b = f_pair_oracle(2000);
  EXPECT_EQ(a.coefficients[3], 2);
  EXPECT_EQ(a.coefficients[4], 2);
  EXPECT_EQ(a.coefficients[7], 6);
  EXPECT_EQ(a.coefficients, b.coefficients);
  EXPECT_THROW(f_half_totient(2), std::invalid_argument);
}

TEST(PhiHat, RecurrencesAndSummatoryAsymptotics) {
  const TotientTable phi(40'010);
  for (int k = 1; k <= 10'000; ++k) {
    ASSERT_EQ(phi_hat(4 * k, phi), 2 * phi_hat(2 * k, phi) + phi_hat(2 * k - 1, phi)) << k;
    ASSERT_EQ(phi_hat(4 * k + 2, phi), 2 * phi_hat(2 * k, phi) + phi_hat(2 * k + 1, phi)) << k;
  }
  const double n = 40'000;
  const double expected = 3 * n * n / (std::numbers::pi * std::numbers::pi);
  EXPECT_NEAR(static_cast<double>(totient_sum(40'000, phi)) / expected, 1.0, 0.02);
}

TEST(Asymptotics, ParityClusters) {
  const TotientTable phi(1010);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  EXPECT_NEAR(pi2 * static_cast<double>(g3_totient(1000, phi)) / 1e6, 8.0, 0.24);
  EXPECT_NEAR(pi2 * static_cast<double>(g3_totient(999, phi)) / (999.0 * 999.0), 4.0, 0.12);
}
