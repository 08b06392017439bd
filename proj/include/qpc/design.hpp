// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

namespace qpc {

/// Constant weighting the normal-metal thickness in the participation ratio.
inline constexpr double kParticipationConstant = 1.65;

/// Fraction of phonon down-conversion events landing in the superconductor,
/// ts / (ts + constant * tn). Throws DomainError if both thicknesses are 0
/// or either is negative.
double participation_ratio(double ts_um, double tn_um, double constant = kParticipationConstant);

/// Lumped model of a qubit capacitively coupled to a resistive backside
/// transmission line.
struct BacksideCircuit {
  double r_eff_ohm = 6.0;
  double qubit_c_fF = 100.0;
  double coupling_fraction = 0.2;  // C_c / C_q
  double f_GHz = 5.0;
  double series_l_nH = 0.3;
};

void validate(const BacksideCircuit& c);

/// Order-of-magnitude damping estimate Q = (1/coupling)^2 / (omega R C_q).
/// Returns nullopt (unbounded) when R == 0. The series inductor is left out.
std::optional<double> backside_q_estimate(const BacksideCircuit& c);

/// Reactance of the series inductor, omega * L, in ohm.
double series_inductor_impedance_ohm(const BacksideCircuit& c);

struct TrapEstimate {
  double gap_K = 0.0;
  double scatter_time_us = 0.0;
  double diffusion_constant_um2_per_ns = 0.0;
  double diffusion_length_um = 0.0;
};

/// Quasiparticle trap estimates: scatter time from the tabulated q -> q+p
/// rate at `energy_offset_K` above the trap gap, and sqrt(D tau) with
/// D = v_e * mean_free_path / 3.
TrapEstimate trap_estimates(double tc_trap_K, double energy_offset_K, double v_e_mm_per_ns,
                            double mean_free_path_um);

}  // namespace qpc
