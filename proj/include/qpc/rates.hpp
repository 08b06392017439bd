// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "qpc/materials.hpp"

namespace qpc {

enum class RateMethod { integral, fit, power, tabulated };

std::string_view to_string(RateMethod m);

struct RateResult {
  double rate_per_ns = 0.0;
  RateMethod method = RateMethod::integral;
  double rel_err_estimate = 0.0;
};

struct QuadratureOptions {
  /// Lower integration limit is gap * (1 + dos_floor).
  double dos_floor = 1e-9;
  double target_rel_tol = 1e-11;
  double required_rel_err = 1e-6;
};

/// Rounded rate prefactors quoted in the scattering-process table. Kept so
/// the tabulated and the computed rates can be reported side by side.
namespace tabulated {
inline constexpr double kPairBreakNsK = 1.0;        // p -> q+q : (1/1.0 ns)(E_p/K)
inline constexpr double kQpScatterNsK3 = 1700.0;    // q -> q+p : (1/1700 ns)((E_q-gap)/K)^3
inline constexpr double kRecombNumerator = 22.0;    // q+q -> p : (22/440 ns) n_qp/n_cp
inline constexpr double kNAlPhononNsK = 3.1;        // p -> e+e, n-Al
inline constexpr double kNAlElectronNsK3 = 350.0;   // e -> e+p, n-Al
inline constexpr double kCuPhononNsK = 8.2;         // p -> e+e, Cu
inline constexpr double kCuElectronNsK3 = 24.0;     // e -> e+p, Cu
}  // namespace tabulated

// Quasiparticle scattering q -> q + p.

/// (1/tau0) int_gap^eps (eps-e')^2/Tc^3 rho(e') (1 - gap^2/(eps e')) de'.
/// Requires a superconductor and eps_K > gap.
RateResult qp_scatter_rate_integral(double eps_K, const MaterialParams& mat,
                                    const QuadratureOptions& opts = {});

/// Cubic fit 1.8 (eps - gap)^3 / (tau0 gap^3). Requires eps_K >= gap.
RateResult qp_scatter_rate_fit(double eps_K, const MaterialParams& mat);

// Recombination q + q -> p.

/// Near-gap limit (22/tau0) * n_qp/n_cp, 0 <= n_ratio <= 1.
RateResult qp_recomb_rate(double n_ratio, const MaterialParams& mat);

/// Full recombination integral against an occupation f(e'). The upper limit
/// is truncated where f falls below 1e-12 of its peak; throws
/// ConvergenceError if f has not decayed by 1e6 * gap.
RateResult qp_recomb_rate_integral(double eps_K, const std::function<double(double)>& occupation,
                                   const MaterialParams& mat, const QuadratureOptions& opts = {});

/// Density ratio n_qp/n_cp = (2/gap) int f rho de for an occupation f.
double qp_density_ratio_from_occupation(const std::function<double(double)>& occupation,
                                        const MaterialParams& mat,
                                        const QuadratureOptions& opts = {});

// Phonon pair breaking p -> q + q.

/// (1/(pi tau0ph gap)) int_gap^{E-gap} rho(e) rho(E-e) (1 + gap^2/(e(E-e))) de.
/// Exactly zero for ep_K <= 2 gap.
RateResult phonon_pairbreak_rate_integral(double ep_K, const MaterialParams& mat,
                                          const QuadratureOptions& opts = {});

/// (1/(pi tau0ph gap)) [E + 3.8 gap / (E/gap + 2.3)^0.8], or the linear
/// asymptote 1.4 E / (pi tau0ph gap) when `linear_asymptote` is set.
RateResult phonon_pairbreak_rate_fit(double ep_K, const MaterialParams& mat,
                                     bool linear_asymptote = false);

/// Largest |fit - integral| / integral for the pair-breaking rate over
/// E_p/gap in [lo, hi] on `points` evenly spaced energies.
double max_pairbreak_fit_residual(const MaterialParams& mat, double lo_over_gap, double hi_over_gap,
                                  int points = 200);

/// Same for the quasiparticle cubic fit over eps/gap in [lo, hi].
double max_qp_scatter_fit_residual(const MaterialParams& mat, double lo_over_gap,
                                   double hi_over_gap, int points = 200);

// Power-balance estimates.

/// Sigma * V * (Te^5 - Tp^5) in nW; positive when electrons are hotter.
double power_ep(double te_K, double tp_K, const MaterialParams& mat, double volume_um3);

struct PowerRates {
  double phonon_per_ns = 0.0;    // P_ep / U_p, linear in T
  double electron_per_ns = 0.0;  // P_ep / U_e, cubic in T
};

PowerRates power_rates(double t_K, const MaterialParams& mat);

/// Phonon and electron rates as quoted (rounded) in the scattering table;
/// available for Al, n-Al and Cu.
PowerRates tabulated_rates(double energy_K, const MaterialParams& mat);

// Length scales.

enum class RateSource {
  computed,   // cubic/phonon fits for superconductors, P/U for normal metals
  tabulated,  // the rounded prefactors of the scattering table
};

struct LengthEntry {
  double energy_K = 0.0;
  double electron_rate_per_ns = 0.0;  // e (normal) or q (superconductor)
  double electron_diffusion_um = 0.0; // sqrt(v_e * thickness / rate)
  double phonon_rate_per_ns = 0.0;
  double phonon_length_um = 0.0;      // v_p / rate
};

LengthEntry scattering_lengths(double energy_K, const MaterialParams& mat,
                               double film_thickness_um, RateSource source = RateSource::computed);

/// Entries at 20 K and 4 K, the two energies used for the length table.
std::vector<LengthEntry> scattering_length_table(const MaterialParams& mat,
                                                 double film_thickness_um,
                                                 RateSource source = RateSource::computed,
                                                 std::vector<double> energies_K = {20.0, 4.0});

}  // namespace qpc
