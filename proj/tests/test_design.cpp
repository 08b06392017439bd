// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "qpc/design.hpp"
#include "qpc/errors.hpp"

namespace {

using namespace qpc;

TEST(Participation, SixMicronBackingIsOnePercent) {
  EXPECT_NEAR(participation_ratio(0.1, 6.0), 0.01, 1e-15);
  EXPECT_DOUBLE_EQ(participation_ratio(0.1, 0.0), 1.0);
}

TEST(Participation, Monotone) {
  double prev = 1.0;
  for (double tn = 0.1; tn < 10.0; tn += 0.1) {
    const double s = participation_ratio(0.1, tn);
    EXPECT_LT(s, prev);
    EXPECT_GT(s, 0.0);
    prev = s;
  }
  prev = 0.0;
  for (double ts = 0.05; ts < 5.0; ts += 0.05) {
    const double s = participation_ratio(ts, 1.0);
    EXPECT_GT(s, prev);
    EXPECT_LE(s, 1.0);
    prev = s;
  }
}

TEST(Participation, Domain) {
  EXPECT_THROW(participation_ratio(0.0, 0.0), DomainError);
  EXPECT_THROW(participation_ratio(-0.1, 1.0), DomainError);
  EXPECT_THROW(participation_ratio(0.1, -1.0), DomainError);
}

TEST(Backside, DefaultIsAboutOneThousand) {
  const auto q = backside_q_estimate(BacksideCircuit{});
  ASSERT_TRUE(q.has_value());
  EXPECT_NEAR(*q, 1326.29, 0.01);
  EXPECT_NEAR(series_inductor_impedance_ohm(BacksideCircuit{}), 9.42478, 1e-4);
}

TEST(Backside, ExactScaling) {
  BacksideCircuit a;
  BacksideCircuit b = a;
  b.r_eff_ohm = 3.0 * a.r_eff_ohm;
  EXPECT_NEAR(*backside_q_estimate(a) / *backside_q_estimate(b), 3.0, 1e-12);
  b = a;
  b.coupling_fraction = 0.5 * a.coupling_fraction;
  EXPECT_NEAR(*backside_q_estimate(b) / *backside_q_estimate(a), 4.0, 1e-12);
}

TEST(Backside, ZeroResistanceIsUnbounded) {
  BacksideCircuit c;
  c.r_eff_ohm = 0.0;
  EXPECT_FALSE(backside_q_estimate(c).has_value());
  c.r_eff_ohm = -1.0;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Trap, ScatterTimeCubicInOffset) {
  const auto a = trap_estimates(0.5, 1.0, 2.03, 0.1);
  EXPECT_NEAR(a.scatter_time_us, 1.7, 1e-12);
  EXPECT_NEAR(a.gap_K, 0.88, 1e-12);
  for (double off : {0.25, 0.5, 2.0}) {
    const auto b = trap_estimates(0.5, off, 2.03, 0.1);
    EXPECT_NEAR(b.scatter_time_us * off * off * off, 1.7, 1e-12);
  }
  EXPECT_NEAR(a.diffusion_constant_um2_per_ns, 2030.0 * 0.1 / 3.0, 1e-9);
}

TEST(Trap, Domain) {
  EXPECT_THROW(trap_estimates(0.0, 1.0, 2.03, 0.1), DomainError);
  EXPECT_THROW(trap_estimates(0.5, 1.0, 2.03, 0.0), DomainError);
}

}  // namespace
