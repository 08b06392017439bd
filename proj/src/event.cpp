// SPDX-License-Identifier: Apache-2.0
#include "qpc/event.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpc/design.hpp"
#include "qpc/errors.hpp"
#include "qpc/units.hpp"

namespace qpc {
namespace {

// Stage time and size scales with no closed form behind them.
constexpr double kFireballUs = 0.01;
constexpr double kFireballMm = 1.0;
constexpr double kFreezeOutUs = 0.3;
constexpr double kFreezeOutMm = 3.0;
constexpr double kQpDiffusionUs = 100.0;
constexpr double kQpDiffusionMm = 6.0;
constexpr double kRecombinationUs = 1000.0;
constexpr double kTrapTcK = 0.5;

constexpr double kQFactorPerDensity = 1.2;

StageT1 t1_of(T1Kind kind, double n_ratio, double f_GHz) {
  const auto decay = qubit_q_and_t1(n_ratio, f_GHz);
  if (!decay.t1_us) return {T1Kind::baseline, 0.0};
  return {kind, *decay.t1_us};
}

}  // namespace

ChipGeometry ChipGeometry::improved() {
  ChipGeometry g;
  g.normal_thickness_um = 6.0;
  return g;
}

void validate(const ChipGeometry& g) {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  std::ostringstream os;
  if (!positive(g.chip_area_mm2) || !positive(g.substrate_thickness_mm) ||
      !positive(g.film_thickness_um) || !positive(g.hotspot_area_mm2)) {
    os << "geometry: chip area, substrate thickness, film thickness and hotspot area must be positive";
  } else if (g.normal_thickness_um < 0.0) {
    os << "geometry: normal_thickness_um must be >= 0";
  } else if (g.hotspot_area_mm2 > g.chip_area_mm2) {
    os << "geometry: hotspot area " << g.hotspot_area_mm2 << " mm^2 exceeds chip area "
       << g.chip_area_mm2 << " mm^2";
  } else if (g.wirebonds.count < 1 || !positive(g.wirebonds.wire_radius_um) ||
             !positive(g.wirebonds.wire_length_mm) || !positive(g.wirebonds.mean_free_path_um)) {
    os << "geometry: wirebond count, radius, length and mean free path must be positive";
  } else {
    return;
  }
  throw ConfigError(os.str());
}

std::string_view to_string(Design d) { return d == Design::present ? "present" : "improved"; }

Design parse_design(std::string_view s) {
  if (s == "present") return Design::present;
  if (s == "improved" || s == "future") return Design::improved;
  throw ConfigError("unknown design '" + std::string(s) + "' (expected present|improved)");
}

void validate(const EventConfig& cfg) {
  std::ostringstream os;
  if (!(cfg.deposit_energy_MeV >= 0.0) || !std::isfinite(cfg.deposit_energy_MeV)) {
    os << "event: deposit energy must be >= 0";
  } else if (!(cfg.conversion_efficiency >= 0.0 && cfg.conversion_efficiency <= 1.0)) {
    os << "event: conversion efficiency must lie in [0, 1] (got " << cfg.conversion_efficiency << ")";
  } else if (!(cfg.qubit_frequency_GHz > 0.0)) {
    os << "event: qubit frequency must be positive";
  } else if (!(cfg.trap_energy_offset_K > 0.0)) {
    os << "event: trap energy offset must be positive";
  } else if (!(cfg.default_suppression >= 1.0)) {
    os << "event: default suppression must be >= 1";
  } else {
    return;
  }
  throw ConfigError(os.str());
}

double qp_density_ratio(double n_qp, double area_mm2, double thickness_um, double n_cp_per_um3) {
  if (n_qp < 0.0 || !(area_mm2 > 0.0) || !(thickness_um > 0.0) || !(n_cp_per_um3 > 0.0)) {
    throw DomainError("qp_density_ratio: need n_qp >= 0 and positive area, thickness, n_cp");
  }
  const double volume_um3 = area_mm2 * units::kUm2PerMm2 * thickness_um;
  return n_qp / volume_um3 / n_cp_per_um3;
}

QubitDecay qubit_q_and_t1(double n_ratio, double f_GHz) {
  if (!(n_ratio >= 0.0) || !(f_GHz > 0.0)) {
    throw DomainError("qubit_q_and_t1: need n_ratio >= 0 and f > 0");
  }
  if (n_ratio == 0.0) return {};
  const double q = 1.0 / (kQFactorPerDensity * n_ratio);
  const double omega_per_us = 2.0 * units::kPi * f_GHz * 1e3;
  return {q, q / omega_per_us};
}

double qp_diffusion_radius(double t_us, double v_e_mm_per_ns, double thickness_um,
                           std::optional<double> energy_offset_K, double gap_K) {
  if (t_us < 0.0 || !(v_e_mm_per_ns > 0.0) || !(thickness_um > 0.0)) {
    throw DomainError("qp_diffusion_radius: need t >= 0, v_e > 0, thickness > 0");
  }
  const double v_um_per_ns = v_e_mm_per_ns * units::kUmPerMm;
  double r_um = std::sqrt(v_um_per_ns * t_us * units::kNsPerUs * thickness_um);
  if (energy_offset_K) {
    if (!(*energy_offset_K > 0.0) || !(gap_K > 0.0)) {
      throw DomainError("qp_diffusion_radius: energy offset and gap must be positive");
    }
    const double ratio = gap_K / (gap_K + *energy_offset_K);
    r_um *= std::sqrt(1.0 - ratio * ratio);
  }
  return r_um / units::kUmPerMm;
}

double recombination_density(double t_us, double t0_us) {
  if (!(t_us + t0_us > 0.0)) throw DomainError("recombination_density: need t + t0 > 0");
  return kRecombinationScaleUs / (t_us + t0_us);
}

double recombination_density_rate(double n_ratio) {
  return -n_ratio * n_ratio / kRecombinationScaleUs;
}

double recombination_density_rate_tabulated(double n_ratio, double tau0_ns) {
  return -2.0 * 22.0 / tau0_ns * units::kNsPerUs * n_ratio * n_ratio;
}

double phonon_escape_rate(const ChipGeometry& geom, double v_p_um_per_ns) {
  validate(geom);
  if (!(v_p_um_per_ns > 0.0)) throw DomainError("phonon_escape_rate: v_p must be positive");
  const auto& w = geom.wirebonds;
  const double area_um2 = units::kPi * w.wire_radius_um * w.wire_radius_um;
  const double volume_um3 =
      geom.chip_area_mm2 * units::kUm2PerMm2 * geom.substrate_thickness_mm * units::kUmPerMm;
  const double exit_probability = w.mean_free_path_um / (w.wire_length_mm * units::kUmPerMm);
  return w.count * area_um2 / volume_um3 * v_p_um_per_ns * exit_probability;
}

double round_to_one_significant(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const double p = std::pow(10.0, std::floor(std::log10(std::abs(x))));
  return std::round(x / p) * p;
}

EventTimeline simulate_event(const EventConfig& cfg, const ChipGeometry& geom,
                             const MaterialParams& superconductor) {
  validate(cfg);
  validate(geom);
  validate(superconductor);
  if (!superconductor.is_superconductor()) {
    throw ConfigError("simulate_event: qubit film material '" + superconductor.name +
                      "' is not a superconductor");
  }
  if (cfg.design == Design::present && geom.normal_thickness_um > 0.0) {
    throw ConfigError("simulate_event: present design has no normal-metal film (normal_thickness_um > 0)");
  }

  const double gap = superconductor.gap_K;
  const double f = cfg.qubit_frequency_GHz;

  EventTimeline tl;
  tl.design = cfg.design;
  auto& s = tl.summary;
  s.n_qp = units::kelvin_from_mev(cfg.deposit_energy_MeV) * cfg.conversion_efficiency / gap;
  s.density_ratio_chip =
      qp_density_ratio(s.n_qp, geom.chip_area_mm2, geom.film_thickness_um, superconductor.n_cp_per_um3);
  s.density_ratio_hotspot = qp_density_ratio(s.n_qp, geom.hotspot_area_mm2, geom.film_thickness_um,
                                             superconductor.n_cp_per_um3);
  const auto chip = qubit_q_and_t1(s.density_ratio_chip, f);
  s.q_chip = chip.q;
  s.t1_chip_us = chip.t1_us;
  s.t1_hotspot_us = qubit_q_and_t1(s.density_ratio_hotspot, f).t1_us;
  if (cfg.design == Design::improved) {
    s.suppression = geom.normal_thickness_um > 0.0
                        ? 1.0 / participation_ratio(geom.film_thickness_um, geom.normal_thickness_um)
                        : cfg.default_suppression;
  }
  s.escape_rate_per_ns = phonon_escape_rate(geom, superconductor.v_p_um_per_ns);
  s.escape_time_us = 1.0 / s.escape_rate_per_ns / units::kNsPerUs;
  s.recombination_t0_us =
      s.density_ratio_hotspot > 0.0 ? kRecombinationScaleUs / s.density_ratio_hotspot : 0.0;

  const double escape_us = round_to_one_significant(s.escape_time_us);
  const bool quiet = s.n_qp == 0.0;

  auto push = [&](std::string name, double duration, std::optional<double> size, StageT1 t1,
                  std::string reference) {
    const double start = tl.stages.empty() ? 0.0
                                           : tl.stages.back().t_start_us + tl.stages.back().duration_us;
    if (quiet) t1 = {T1Kind::baseline, 0.0};
    tl.stages.push_back({std::move(name), start, duration, size, t1, std::move(reference)});
  };
  // Recombination-limited density at the start of the next stage, capped by
  // number conservation over the chip.
  auto late_density = [&]() {
    const double start = tl.stages.back().t_start_us + tl.stages.back().duration_us;
    if (quiet) return 0.0;
    return std::min(s.density_ratio_chip, recombination_density(start, s.recombination_t0_us));
  };

  push("Fireball", kFireballUs, kFireballMm, {T1Kind::none, 0.0}, "");
  if (cfg.design == Design::present) {
    push("Freeze out", kFreezeOutUs, kFreezeOutMm, t1_of(T1Kind::value, s.density_ratio_hotspot, f),
         "0.16");
    // Same number of quasiparticles spread over the larger diffusion region.
    const double dilution = (kQpDiffusionMm / kFreezeOutMm) * (kQpDiffusionMm / kFreezeOutMm);
    push("Qp diffusion", kQpDiffusionUs, kQpDiffusionMm,
         t1_of(T1Kind::value, s.density_ratio_hotspot / dilution, f), "0.6");
    push("Qp recombination and rebreaking", kRecombinationUs, std::nullopt,
         t1_of(T1Kind::lower_bound, late_density(), f), ">1.6");
    push("Phonon escape", escape_us, std::nullopt, t1_of(T1Kind::value, late_density(), f), "");
  } else {
    const StageT1 frozen = t1_of(T1Kind::value, s.density_ratio_hotspot / s.suppression, f);
    push("Freeze out", kFreezeOutUs, kFreezeOutMm, frozen, "16");
    const auto trap = trap_estimates(kTrapTcK, cfg.trap_energy_offset_K,
                                     superconductor.v_e_mm_per_ns, geom.film_thickness_um);
    push("Qp diffusion and down-conversion", trap.scatter_time_us, kFreezeOutMm,
         {frozen.kind == T1Kind::baseline ? T1Kind::baseline : T1Kind::lower_bound, frozen.t1_us},
         ">16");
    push("Qp recombination", kRecombinationUs, std::nullopt, {T1Kind::baseline, 0.0}, "bl");
    push("Phonon escape", escape_us, std::nullopt, {T1Kind::baseline, 0.0}, "bl");
  }
  return tl;
}

}  // namespace qpc
