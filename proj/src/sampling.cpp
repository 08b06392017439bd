// SPDX-License-Identifier: Apache-2.0
#include "qpc/sampling.hpp"

#include <cmath>
#include <sstream>

#include "qpc/errors.hpp"
#include "qpc/units.hpp"

// Both superconducting kernels are sampled by rejection in a coordinate where
// the 1/sqrt(eps - gap) density-of-states singularity cancels against the
// Jacobian, leaving a bounded smooth target with a simple envelope.
// Rejection is exact for every (energy, gap) pair and needs no tables.

namespace qpc {
namespace {

[[noreturn]] void domain(const char* op, const char* cond, double e, double gap) {
  std::ostringstream os;
  os << op << ": requires " << cond << " (energy=" << e << " K, gap=" << gap << " K)";
  throw DomainError(os.str());
}

}  // namespace

EnergySplit sample_pairbreak_split(double ep_K, double gap_K, RandomStream& rng) {
  if (!(gap_K > 0.0) || !(ep_K > 2.0 * gap_K)) domain("sample_pairbreak_split", "E_p > 2 gap > 0", ep_K, gap_K);
  // eps = gap + b sin^2(pi t/2), t ~ U(0,1). In t the target is
  //   h(t) = (eps eps2 + gap^2) / sqrt((eps + gap)(eps2 + gap))
  // and h <= sqrt(eps eps2 + gap^2) <= sqrt(E^2/4 + gap^2).
  const double b = ep_K - 2.0 * gap_K;
  const double g2 = gap_K * gap_K;
  const double bound = std::sqrt(0.25 * ep_K * ep_K + g2);
  for (;;) {
    const double t = rng.uniform();
    const double s = std::sin(0.5 * units::kPi * t);
    const double c = std::cos(0.5 * units::kPi * t);
    const double e1 = gap_K + b * s * s;
    const double e2 = gap_K + b * c * c;
    const double h = (e1 * e2 + g2) / std::sqrt((e1 + gap_K) * (e2 + gap_K));
    if (rng.uniform() * bound <= h) return {e1, ep_K - e1};
  }
}

EnergySplit sample_qp_emission(double eps_K, double gap_K, RandomStream& rng) {
  if (!(gap_K > 0.0) || !(eps_K > gap_K)) domain("sample_qp_emission", "eps > gap > 0", eps_K, gap_K);
  // e' = gap + a t^2. Up to a constant the target in t is
  //   g(t) = (1-t^2)^2 (gap + eps t^2) / sqrt(2 gap + a t^2)
  // with envelope (1-t^2)^2 (sqrt(2 gap) + sqrt(a) t), a two-component mixture.
  const double a = eps_K - gap_K;
  const double r2g = std::sqrt(2.0 * gap_K);
  const double ra = std::sqrt(a);
  const double w_flat = r2g * (8.0 / 15.0);  // int (1-t^2)^2
  const double w_lin = ra / 6.0;             // int t (1-t^2)^2
  for (;;) {
    double t = 0.0;
    if (rng.uniform() * (w_flat + w_lin) < w_flat) {
      // (1-t^2)^2 = (1-t)^2 (1+t)^2: propose from 3(1-t)^2, accept (1+t)^2/4.
      for (;;) {
        t = 1.0 - std::cbrt(rng.uniform());
        if (4.0 * rng.uniform() <= (1.0 + t) * (1.0 + t)) break;
      }
    } else {
      // s = t^2 has density proportional to (1-s)^2.
      t = std::sqrt(1.0 - std::cbrt(rng.uniform()));
    }
    const double t2 = t * t;
    const double accept = (gap_K + eps_K * t2) / (std::sqrt(2.0 * gap_K + a * t2) * (r2g + ra * t));
    if (rng.uniform() <= accept) {
      const double e = gap_K + a * t2;
      return {e, eps_K - e};
    }
  }
}

EnergySplit sample_electron_emission(double ee_K, RandomStream& rng) {
  if (!(ee_K > 0.0)) domain("sample_electron_emission", "energy > 0", ee_K, 0.0);
  const double x = ee_K * std::cbrt(rng.uniform());
  return {ee_K - x, x};
}

EnergySplit sample_electron_pair(double ep_K, RandomStream& rng) {
  if (!(ep_K > 0.0)) domain("sample_electron_pair", "energy > 0", ep_K, 0.0);
  const double e = ep_K * rng.uniform();
  return {e, ep_K - e};
}

}  // namespace qpc
