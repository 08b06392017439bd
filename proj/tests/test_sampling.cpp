// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "qpc/errors.hpp"
#include "qpc/sampling.hpp"

namespace {

using namespace qpc;

constexpr double kGap = 1.76 * 1.2;
constexpr int kDraws = 200000;

TEST(Sampling, PairBreakSplitConservesAndStaysAboveGap) {
  RandomStream rng(11, 0);
  for (double r : {2.0001, 2.5, 10.0, 1e4}) {
    const double ep = r * kGap;
    for (int i = 0; i < 2000; ++i) {
      const auto s = sample_pairbreak_split(ep, kGap, rng);
      ASSERT_GE(s.first, kGap);
      ASSERT_GE(s.second, kGap);
      ASSERT_NEAR(s.first + s.second, ep, 1e-12 * ep);
    }
  }
}

TEST(Sampling, PairBreakSplitMatchesOracle) {
  for (double r : {2.2, 4.0, 50.0}) {
    const double ep = r * kGap;
    RandomStream rng(12, static_cast<std::uint64_t>(r * 10));
    std::vector<double> lower(kDraws);
    for (auto& v : lower) {
      const auto s = sample_pairbreak_split(ep, kGap, rng);
      v = std::min(s.first, s.second);
    }
    const auto cdf = oracle::pairbreak_lower_cdf(ep, kGap);
    EXPECT_LT(oracle::ks_distance(lower, cdf), 0.005) << "E/gap = " << r;
  }
}

TEST(Sampling, PairBreakSplitIsSymmetric) {
  RandomStream rng(13, 0);
  const double ep = 6.0 * kGap;
  int first_lower = 0;
  for (int i = 0; i < kDraws; ++i) first_lower += sample_pairbreak_split(ep, kGap, rng).first < ep / 2.0;
  EXPECT_NEAR(static_cast<double>(first_lower) / kDraws, 0.5, 0.005);
}

TEST(Sampling, QpEmissionMatchesOracle) {
  for (double r : {1.05, 3.0, 50.0, 1e3}) {
    const double eps = r * kGap;
    RandomStream rng(14, static_cast<std::uint64_t>(r * 100));
    std::vector<double> finals(kDraws);
    for (auto& v : finals) {
      const auto s = sample_qp_emission(eps, kGap, rng);
      ASSERT_GE(s.first, kGap);
      ASSERT_LE(s.first, eps);
      ASSERT_NEAR(s.first + s.second, eps, 1e-12 * eps);
      v = s.first;
    }
    const auto cdf = oracle::qp_emission_cdf(eps, kGap);
    EXPECT_LT(oracle::ks_distance(finals, cdf), 0.005) << "eps/gap = " << r;
  }
}

TEST(Sampling, QpEmissionPhononTakesThreeQuartersFarAboveGap) {
  RandomStream rng(15, 0);
  const double eps = 1e6 * kGap;
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) sum += sample_qp_emission(eps, kGap, rng).second;
  EXPECT_NEAR(sum / kDraws / (eps - kGap), 0.75, 0.005);
}

TEST(Sampling, ElectronEmissionCubicCdf) {
  RandomStream rng(16, 0);
  const double ee = 7.0;
  std::vector<double> phonons(kDraws);
  for (auto& v : phonons) {
    const auto s = sample_electron_emission(ee, rng);
    ASSERT_NEAR(s.first + s.second, ee, 1e-12 * ee);
    v = s.second;
  }
  EXPECT_LT(oracle::ks_distance(phonons, [&](double x) { return std::pow(x / ee, 3); }), 0.005);
}

TEST(Sampling, ElectronEmissionMoments) {
  RandomStream rng(18, 0);
  constexpr int n = 1000000;
  double sum = 0.0;
  int below_half = 0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_electron_emission(1.0, rng).second;
    sum += x;
    below_half += x < 0.5;
  }
  EXPECT_NEAR(sum / n / 0.75, 1.0, 1e-3);
  EXPECT_NEAR(static_cast<double>(below_half) / n, 0.125, 1e-3);
}

TEST(Sampling, PairBreakMeanIsHalfTheEnergy) {
  RandomStream rng(19, 0);
  const double ep = 200.0 * kGap;
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) sum += sample_pairbreak_split(ep, kGap, rng).first;
  EXPECT_NEAR(sum / kDraws / (kGap + (ep - 2.0 * kGap) / 2.0), 1.0, 0.005);
}

TEST(Sampling, NearThresholdLimits) {
  RandomStream rng(20, 0);
  const auto p = sample_pairbreak_split(2.0 * kGap * (1.0 + 1e-9), kGap, rng);
  EXPECT_NEAR(p.first, kGap, 1e-8);
  EXPECT_NEAR(p.second, kGap, 1e-8);
  const auto q = sample_qp_emission(kGap * (1.0 + 1e-9), kGap, rng);
  EXPECT_LT(q.second, 1e-8);
}

TEST(Sampling, ElectronPairUniform) {
  RandomStream rng(17, 0);
  const double ep = 3.0;
  std::vector<double> firsts(kDraws);
  for (auto& v : firsts) v = sample_electron_pair(ep, rng).first;
  EXPECT_LT(oracle::ks_distance(firsts, [&](double x) { return x / ep; }), 0.005);
}

TEST(Sampling, DomainErrors) {
  RandomStream rng(1, 0);
  EXPECT_THROW(sample_pairbreak_split(2.0 * kGap, kGap, rng), DomainError);
  EXPECT_THROW(sample_pairbreak_split(1.0, 0.0, rng), DomainError);
  EXPECT_THROW(sample_qp_emission(kGap, kGap, rng), DomainError);
  EXPECT_THROW(sample_electron_emission(0.0, rng), DomainError);
  EXPECT_THROW(sample_electron_pair(-1.0, rng), DomainError);
}

}  // namespace
