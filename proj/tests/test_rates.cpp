// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracle.hpp"
#include "qpc/errors.hpp"
#include "qpc/rates.hpp"

namespace {

using namespace qpc;

class RatesTest : public ::testing::Test {
 protected:
  MaterialParams al = builtin_material("Al");
  MaterialParams nal = builtin_material("n-Al");
  MaterialParams cu = builtin_material("Cu");
};

TEST_F(RatesTest, QpScatterMatchesOracle) {
  for (double r : {1.01, 1.2, 2.0, 5.0, 20.0}) {
    const double eps = r * al.gap_K;
    const double want = oracle::qp_scatter_rate(eps, al.gap_K, al.tc_K, al.tau0_ns);
    const double got = qp_scatter_rate_integral(eps, al).rate_per_ns;
    EXPECT_NEAR(got / want, 1.0, 1e-6) << "eps/gap = " << r;
  }
}

TEST_F(RatesTest, PairBreakMatchesOracle) {
  for (double r : {2.01, 2.1, 3.0, 10.0, 50.0}) {
    const double ep = r * al.gap_K;
    const double want = oracle::pairbreak_rate(ep, al.gap_K, al.tau0ph_ns);
    const double got = phonon_pairbreak_rate_integral(ep, al).rate_per_ns;
    EXPECT_NEAR(got / want, 1.0, 1e-6) << "E/gap = " << r;
  }
}

TEST_F(RatesTest, PairBreakZeroBelowThreshold) {
  EXPECT_EQ(phonon_pairbreak_rate_integral(2.0 * al.gap_K, al).rate_per_ns, 0.0);
  EXPECT_EQ(phonon_pairbreak_rate_integral(al.gap_K, al).rate_per_ns, 0.0);
  EXPECT_THROW(phonon_pairbreak_rate_fit(2.0 * al.gap_K, al), DomainError);
}

TEST_F(RatesTest, PairBreakThresholdValue) {
  // Just above 2 gap the integrand is flat at pi gap, so the rate is 1/tau0ph.
  const double ep = 2.0 * al.gap_K * (1.0 + 1e-10);
  EXPECT_NEAR(phonon_pairbreak_rate_integral(ep, al).rate_per_ns * al.tau0ph_ns, 1.0, 1e-4);
}

TEST_F(RatesTest, QpScatterOneKelvinAboveGap) {
  // The cubic fit sits 21% below the integral here; frozen at the measured ratio.
  const double eps = al.gap_K + 1.0;
  const double ratio = qp_scatter_rate_fit(eps, al).rate_per_ns / qp_scatter_rate_integral(eps, al).rate_per_ns;
  EXPECT_NEAR(ratio, 0.7898, 1e-3);
  EXPECT_NEAR(1.0 / qp_scatter_rate_fit(eps, al).rate_per_ns, 2302.8, 0.5);
}

TEST_F(RatesTest, QpScatterFitCubicScaling) {
  const double a = qp_scatter_rate_fit(al.gap_K + 0.5, al).rate_per_ns;
  const double b = qp_scatter_rate_fit(al.gap_K + 1.0, al).rate_per_ns;
  EXPECT_NEAR(b / a, 8.0, 1e-12);
}

TEST_F(RatesTest, QpScatterFitRatioDivergesAtGap) {
  // The integral vanishes as (eps - gap)^3.5, one half power faster than the fit.
  const auto ratio = [&](double x) {
    const double eps = al.gap_K * (1.0 + x);
    return qp_scatter_rate_fit(eps, al).rate_per_ns / qp_scatter_rate_integral(eps, al).rate_per_ns;
  };
  EXPECT_NEAR(ratio(1e-4) / ratio(1e-3), std::sqrt(10.0), 0.01);
}

TEST_F(RatesTest, RecombinationAtEventDensity) {
  EXPECT_NEAR(qp_recomb_rate(2.4e-5, al).rate_per_ns, 1.2e-6, 1e-18);
  EXPECT_NEAR(qp_recomb_rate(1e-6, al).rate_per_ns, 5e-8, 1e-20);
}

TEST_F(RatesTest, QpScatterDomain) {
  EXPECT_THROW(qp_scatter_rate_integral(al.gap_K, al), DomainError);
  EXPECT_THROW(qp_scatter_rate_integral(1.0, cu), DomainError);
  EXPECT_EQ(qp_scatter_rate_fit(al.gap_K, al).rate_per_ns, 0.0);
}

TEST_F(RatesTest, RatesIncreaseWithEnergy) {
  double prev_q = 0.0, prev_p = 0.0;
  for (double r = 1.1; r < 30.0; r *= 1.3) {
    const double q = qp_scatter_rate_integral(r * al.gap_K, al).rate_per_ns;
    EXPECT_GT(q, prev_q);
    prev_q = q;
    if (r > 2.0) {
      const double p = phonon_pairbreak_rate_integral(r * al.gap_K, al).rate_per_ns;
      EXPECT_GT(p, prev_p);
      prev_p = p;
    }
  }
}

TEST_F(RatesTest, DosFloorHalvingIsStable) {
  for (double r : {1.05, 3.0}) {
    QuadratureOptions a, b;
    a.dos_floor = 1e-6;
    b.dos_floor = 0.5e-6;
    const double qa = qp_scatter_rate_integral(r * al.gap_K, al, a).rate_per_ns;
    const double qb = qp_scatter_rate_integral(r * al.gap_K, al, b).rate_per_ns;
    EXPECT_NEAR(qa / qb, 1.0, 1e-4);
    const double pa = phonon_pairbreak_rate_integral(2.0 * r * al.gap_K, al, a).rate_per_ns;
    const double pb = phonon_pairbreak_rate_integral(2.0 * r * al.gap_K, al, b).rate_per_ns;
    EXPECT_NEAR(pa / pb, 1.0, 1e-4);
  }
}

TEST_F(RatesTest, PairBreakFitWithinFivePercent) {
  EXPECT_LT(max_pairbreak_fit_residual(al, 2.1, 50.0), 0.05);
  const double ep = 1000.0 * al.gap_K;
  EXPECT_NEAR(phonon_pairbreak_rate_fit(ep, al, true).rate_per_ns /
                  phonon_pairbreak_rate_integral(ep, al).rate_per_ns,
              1.4, 0.01);
}

TEST_F(RatesTest, QpScatterCubicFitFarAboveGap) {
  // Far above the gap the kernel tends to (eps-gap)^3 / (3 tau0 Tc^3).
  const double eps = 400.0 * al.gap_K;
  const double x = eps - al.gap_K;
  const double want = x * x * x / (3.0 * al.tau0_ns * std::pow(al.tc_K, 3));
  EXPECT_NEAR(qp_scatter_rate_integral(eps, al).rate_per_ns / want, 1.0, 0.02);
}

TEST_F(RatesTest, RecombinationNearGapLimit) {
  EXPECT_DOUBLE_EQ(qp_recomb_rate(1.0, al).rate_per_ns, 0.05);
  EXPECT_DOUBLE_EQ(qp_recomb_rate(0.0, al).rate_per_ns, 0.0);
  EXPECT_THROW(qp_recomb_rate(1.5, al), DomainError);
  EXPECT_THROW(qp_recomb_rate(-0.1, al), DomainError);
}

TEST_F(RatesTest, RecombinationIntegralMatchesNearGapLimit) {
  // A thin thermal occupation at 0.1 K sits just above the gap, where the
  // integral reduces to 2 (2 gap)^2 / (tau0 Tc^3) * (n_qp/n_cp) gap / 2.
  const double t = 0.1;
  auto f = [&](double e) { return std::exp(-e / t); };
  const double eps = al.gap_K * (1.0 + 1e-9);
  const double rate = qp_recomb_rate_integral(eps, f, al).rate_per_ns;
  const double n = qp_density_ratio_from_occupation(f, al);
  const double g = al.gap_K;
  const double near_gap = 2.0 * 4.0 * g * g / (al.tau0_ns * std::pow(al.tc_K, 3)) * n * g / 2.0;
  EXPECT_NEAR(rate / near_gap, 1.0, 0.05);
}

TEST_F(RatesTest, RecombinationIntegralMatchesOracle) {
  const double t = 0.2;
  auto f = [&](double e) { return std::exp(-e / t); };
  for (double r : {1.01, 2.0}) {
    const double eps = r * al.gap_K;
    const double want = oracle::recomb_rate(eps, f, 40.0 * t * std::log(10.0), al.gap_K, al.tc_K, al.tau0_ns);
    EXPECT_NEAR(qp_recomb_rate_integral(eps, f, al).rate_per_ns / want, 1.0, 1e-4) << r;
  }
  EXPECT_EQ(qp_recomb_rate_integral(3.0, [](double) { return 0.0; }, al).rate_per_ns, 0.0);
}

TEST_F(RatesTest, RecombinationIntegralRejectsFlatOccupation) {
  auto flat = [](double) { return 0.5; };
  EXPECT_THROW(qp_recomb_rate_integral(3.0, flat, al), ConvergenceError);
}

TEST_F(RatesTest, PowerRatesMatchTableToTenPercent) {
  const auto n = power_rates(1.0, nal);
  const auto c = power_rates(1.0, cu);
  EXPECT_NEAR(n.phonon_per_ns * 3.1, 1.0, 0.1);
  EXPECT_NEAR(n.electron_per_ns * 350.0, 1.0, 0.1);
  EXPECT_NEAR(c.electron_per_ns * 24.0, 1.0, 0.1);
  EXPECT_NEAR(1.0 / c.phonon_per_ns, 0.825, 1e-3);
}

TEST_F(RatesTest, PowerRateTemperatureScaling) {
  const auto a = power_rates(1.0, cu);
  const auto b = power_rates(2.0, cu);
  EXPECT_NEAR(b.phonon_per_ns / a.phonon_per_ns, 2.0, 1e-12);
  EXPECT_NEAR(b.electron_per_ns / a.electron_per_ns, 8.0, 1e-12);
  EXPECT_GT(power_ep(2.0, 1.0, cu, 1.0), 0.0);
  EXPECT_LT(power_ep(1.0, 2.0, cu, 1.0), 0.0);
  EXPECT_EQ(power_ep(1.0, 1.0, cu, 1.0), 0.0);
}

TEST_F(RatesTest, TabulatedLengths) {
  const auto al_len = scattering_length_table(al, 0.1, RateSource::tabulated);
  EXPECT_NEAR(al_len[0].phonon_length_um, 0.32, 1e-12);
  EXPECT_NEAR(al_len[1].phonon_length_um, 1.6, 1e-12);
  const auto cu_len = scattering_length_table(cu, 3.0, RateSource::tabulated);
  EXPECT_NEAR(cu_len[0].electron_diffusion_um, 3.8, 0.1);
  EXPECT_NEAR(cu_len[1].electron_diffusion_um, 42.0, 0.5);
  EXPECT_NEAR(cu_len[1].phonon_length_um, 9.8, 0.1);
}

TEST_F(RatesTest, ComputedLengthInfiniteBelowPairBreaking) {
  const auto e = scattering_lengths(4.0, al, 0.1);
  EXPECT_EQ(e.phonon_rate_per_ns, 0.0);
  EXPECT_EQ(e.phonon_length_um, std::numeric_limits<double>::infinity());
  EXPECT_GT(e.electron_rate_per_ns, 0.0);
}

TEST_F(RatesTest, TabulatedRatesUnknownNormalMetal) {
  auto m = cu;
  m.name = "Au";
  EXPECT_THROW(tabulated_rates(1.0, m), DomainError);
}

}  // namespace
