// SPDX-License-Identifier: Apache-2.0
#include "qpc/design.hpp"

#include <cmath>
#include <sstream>

#include "qpc/errors.hpp"
#include "qpc/materials.hpp"
#include "qpc/rates.hpp"
#include "qpc/units.hpp"

namespace qpc {

double participation_ratio(double ts_um, double tn_um, double constant) {
  if (ts_um < 0.0 || tn_um < 0.0 || (ts_um == 0.0 && tn_um == 0.0) || !(constant > 0.0)) {
    std::ostringstream os;
    os << "participation_ratio: need ts, tn >= 0 not both zero and constant > 0 (ts=" << ts_um
       << ", tn=" << tn_um << ", constant=" << constant << ")";
    throw DomainError(os.str());
  }
  return ts_um / (ts_um + constant * tn_um);
}

void validate(const BacksideCircuit& c) {
  if (c.r_eff_ohm < 0.0 || !(c.qubit_c_fF > 0.0) || !(c.f_GHz > 0.0) || c.series_l_nH < 0.0 ||
      !(c.coupling_fraction > 0.0 && c.coupling_fraction < 1.0)) {
    throw ConfigError("backside circuit: need R >= 0, C > 0, f > 0, L >= 0 and 0 < coupling < 1");
  }
}

std::optional<double> backside_q_estimate(const BacksideCircuit& c) {
  validate(c);
  if (c.r_eff_ohm == 0.0) return std::nullopt;
  const double omega = 2.0 * units::kPi * c.f_GHz * 1e9;
  const double c_farad = c.qubit_c_fF * 1e-15;
  const double inv_k = 1.0 / c.coupling_fraction;
  return inv_k * inv_k / (omega * c.r_eff_ohm * c_farad);
}

double series_inductor_impedance_ohm(const BacksideCircuit& c) {
  validate(c);
  return 2.0 * units::kPi * c.f_GHz * 1e9 * c.series_l_nH * 1e-9;
}

TrapEstimate trap_estimates(double tc_trap_K, double energy_offset_K, double v_e_mm_per_ns,
                            double mean_free_path_um) {
  if (!(tc_trap_K > 0.0) || !(energy_offset_K > 0.0) || !(v_e_mm_per_ns > 0.0) ||
      !(mean_free_path_um > 0.0)) {
    throw DomainError("trap_estimates: all inputs must be positive");
  }
  TrapEstimate out;
  out.gap_K = kBcsGapRatio * tc_trap_K;
  const double x3 = energy_offset_K * energy_offset_K * energy_offset_K;
  const double tau_ns = tabulated::kQpScatterNsK3 / x3;
  out.scatter_time_us = tau_ns / units::kNsPerUs;
  out.diffusion_constant_um2_per_ns = v_e_mm_per_ns * units::kUmPerMm * mean_free_path_um / 3.0;
  out.diffusion_length_um = std::sqrt(out.diffusion_constant_um2_per_ns * tau_ns);
  return out;
}

}  // namespace qpc
