// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force reference values for the tests: composite Simpson on fixed
// grids of at least 1e6 intervals, written against the textbook kernels and
// sharing no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr std::size_t kIntervals = 1'000'000;

template <class F>
double simpson(F f, double a, double b, std::size_t n = kIntervals) {
  if (n % 2) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i) {
    sum += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  }
  return sum * h / 3.0;
}

/// Quasiparticle scattering rate, e' = gap + u^2 removes the DoS edge.
inline double qp_scatter_rate(double eps, double gap, double tc, double tau0) {
  const double umax = std::sqrt(eps - gap);
  auto f = [&](double u) {
    const double e = gap + u * u;
    const double kernel = (eps - e) * (eps - e) * (1.0 - gap * gap / (eps * e));
    return kernel * 2.0 * e / std::sqrt(e + gap);  // rho(e) de = 2 e / sqrt(e + gap) du
  };
  return simpson(f, 0.0, umax) / (tau0 * tc * tc * tc);
}

/// Pair-breaking rate; the integrand is symmetric about E/2, so integrate
/// one half with e = gap + u^2.
inline double pairbreak_rate(double ep, double gap, double tau0ph) {
  if (ep <= 2.0 * gap) return 0.0;
  const double umax = std::sqrt(ep / 2.0 - gap);
  auto f = [&](double u) {
    const double e1 = gap + u * u;
    const double e2 = ep - e1;
    const double rho2 = e2 / std::sqrt(e2 * e2 - gap * gap);
    return 2.0 * e1 / std::sqrt(e1 + gap) * rho2 * (1.0 + gap * gap / (e1 * e2));
  };
  return 2.0 * simpson(f, 0.0, umax) / (std::numbers::pi * tau0ph * gap);
}

/// Recombination integral against an occupation f, cut at e' = gap + width.
template <class F>
double recomb_rate(double eps, F occupation, double width, double gap, double tc, double tau0) {
  auto g = [&](double u) {
    const double e = gap + u * u;
    return (eps + e) * (eps + e) * occupation(e) * (1.0 + gap * gap / (eps * e)) * 2.0 * e /
           std::sqrt(e + gap);
  };
  return simpson(g, 0.0, std::sqrt(width)) / (tau0 * tc * tc * tc);
}

/// Tabulated CDF on a monotone grid of x values, linear in between.
struct TabulatedCdf {
  std::vector<double> x;
  std::vector<double> cdf;

  double operator()(double v) const {
    if (v <= x.front()) return 0.0;
    if (v >= x.back()) return 1.0;
    const auto it = std::upper_bound(x.begin(), x.end(), v);
    const std::size_t i = static_cast<std::size_t>(it - x.begin());
    const double t = (v - x[i - 1]) / (x[i] - x[i - 1]);
    return cdf[i - 1] + t * (cdf[i] - cdf[i - 1]);
  }
};

/// Cumulative trapezoid-Simpson of a density given as g(u) du, x = map(u).
template <class Density, class Map>
TabulatedCdf build_cdf(Density g, Map map, double u0, double u1, std::size_t n = kIntervals) {
  TabulatedCdf out;
  out.x.resize(n + 1);
  out.cdf.resize(n + 1);
  const double h = (u1 - u0) / static_cast<double>(n);
  double acc = 0.0;
  double prev = g(u0);
  out.x[0] = map(u0);
  out.cdf[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double ua = u0 + h * static_cast<double>(i - 1);
    const double ub = u0 + h * static_cast<double>(i);
    const double mid = g(0.5 * (ua + ub));
    const double next = g(ub);
    acc += h / 6.0 * (prev + 4.0 * mid + next);
    prev = next;
    out.x[i] = map(ub);
    out.cdf[i] = acc;
  }
  for (auto& c : out.cdf) c /= acc;
  return out;
}

/// Lower quasiparticle energy after pair breaking, density on [gap, E/2].
inline TabulatedCdf pairbreak_lower_cdf(double ep, double gap) {
  auto g = [&](double u) {
    const double e1 = gap + u * u;
    const double e2 = ep - e1;
    return 2.0 * e1 / std::sqrt(e1 + gap) * e2 / std::sqrt(e2 * e2 - gap * gap) *
           (1.0 + gap * gap / (e1 * e2));
  };
  return build_cdf(g, [&](double u) { return gap + u * u; }, 0.0, std::sqrt(ep / 2.0 - gap));
}

/// Final quasiparticle energy after phonon emission, on [gap, eps].
inline TabulatedCdf qp_emission_cdf(double eps, double gap) {
  auto g = [&](double u) {
    const double e = gap + u * u;
    return (eps - e) * (eps - e) * (1.0 - gap * gap / (eps * e)) * 2.0 * e / std::sqrt(e + gap);
  };
  return build_cdf(g, [&](double u) { return gap + u * u; }, 0.0, std::sqrt(eps - gap));
}

/// Kolmogorov-Smirnov distance between samples and a continuous CDF.
template <class Cdf>
double ks_distance(std::vector<double> samples, const Cdf& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - f)});
  }
  return d;
}

}  // namespace oracle
