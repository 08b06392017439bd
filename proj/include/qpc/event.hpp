// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpc/materials.hpp"

namespace qpc {

struct WirebondSet {
  int count = 300;
  double wire_radius_um = 12.0;
  double wire_length_mm = 2.0;
  double mean_free_path_um = 25.0;
};

struct ChipGeometry {
  double chip_area_mm2 = 100.0;
  double substrate_thickness_mm = 0.4;
  double film_thickness_um = 0.1;
  double normal_thickness_um = 0.0;
  double hotspot_area_mm2 = 10.0;
  WirebondSet wirebonds;

  /// The present design with a 6 um normal-metal backing film added.
  static ChipGeometry improved();
};

void validate(const ChipGeometry& g);

enum class Design { present, improved };

std::string_view to_string(Design d);
Design parse_design(std::string_view s);

inline constexpr double kDefaultConversionEfficiency = 0.57;

struct EventConfig {
  double deposit_energy_MeV = 0.2;
  double qubit_frequency_GHz = 5.0;
  Design design = Design::present;
  double conversion_efficiency = kDefaultConversionEfficiency;
  /// Energy above the trap gap at which trapped quasiparticles relax.
  double trap_energy_offset_K = 1.0;
  /// Density suppression used by the improved design when no normal film
  /// thickness is given.
  double default_suppression = 100.0;
};

void validate(const EventConfig& cfg);

/// n_qp / (area * thickness) / n_cp.
double qp_density_ratio(double n_qp, double area_mm2, double thickness_um, double n_cp_per_um3);

struct QubitDecay {
  std::optional<double> q;      // nullopt: no quasiparticles, unbounded
  std::optional<double> t1_us;
};

/// 1/Q = 1.2 n_qp/n_cp (quoted at 5 GHz) and T1 = Q / (2 pi f).
QubitDecay qubit_q_and_t1(double n_ratio, double f_GHz = 5.0);

/// sqrt(v_e t thickness) in mm. With an energy offset above the gap, the
/// distance is reduced by the group-velocity factor sqrt(1 - (gap/E)^2).
double qp_diffusion_radius(double t_us, double v_e_mm_per_ns, double thickness_um,
                           std::optional<double> energy_offset_K = std::nullopt,
                           double gap_K = 0.0);

/// Prefactor of the recombination-limited density, 400 ns / 43.6, in us.
inline constexpr double kRecombinationScaleUs = 0.4 / 43.6;

/// n_qp/n_cp = (400 ns / 43.6) / (t + t0), times in us.
double recombination_density(double t_us, double t0_us);

/// dn/dt for the same law: -n^2 / kRecombinationScaleUs (per us).
double recombination_density_rate(double n_ratio);

/// Same ODE with the tabulated recombination rate, -2 (22/tau0) n^2 (per us).
double recombination_density_rate_tabulated(double n_ratio, double tau0_ns);

/// (N_w A / V) v_p (l / L) in 1/ns; A = pi r^2, V = chip area * substrate thickness.
double phonon_escape_rate(const ChipGeometry& geom, double v_p_um_per_ns);

enum class T1Kind { none, value, lower_bound, baseline };

struct StageT1 {
  T1Kind kind = T1Kind::none;
  double t1_us = 0.0;
};

struct Stage {
  std::string name;
  double t_start_us = 0.0;
  double duration_us = 0.0;
  std::optional<double> size_mm;  // nullopt: the whole chip
  StageT1 t1;
  std::string reference_t1;       // the summary-table entry, for annotation
};

struct EventSummary {
  double n_qp = 0.0;
  double density_ratio_chip = 0.0;
  double density_ratio_hotspot = 0.0;
  std::optional<double> q_chip;
  std::optional<double> t1_chip_us;
  std::optional<double> t1_hotspot_us;
  double suppression = 1.0;
  double escape_rate_per_ns = 0.0;
  double escape_time_us = 0.0;
  double recombination_t0_us = 0.0;
};

struct EventTimeline {
  Design design = Design::present;
  std::vector<Stage> stages;
  EventSummary summary;
};

/// Rounds to one significant figure, the precision of the stage table.
double round_to_one_significant(double x);

/// Builds the five-stage timeline. `superconductor` supplies the gap, Cooper-
/// pair density and velocities.
EventTimeline simulate_event(const EventConfig& cfg, const ChipGeometry& geom,
                             const MaterialParams& superconductor = builtin_material("Al"));

}  // namespace qpc
