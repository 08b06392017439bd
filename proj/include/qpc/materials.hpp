// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpc/units.hpp"

namespace qpc {

/// Ratio of the zero-temperature gap to the transition temperature (BCS).
inline constexpr double kBcsGapRatio = 1.76;

/// Physical constants for one film material, in the library's internal units.
///
/// Heat-capacity coefficients follow the tabulated low-temperature forms
/// U_p = c_p * T^4 / 4 and U_e = c_e * T^2 / 2, both in 1e-9 nJ/um^3.
/// Normal metals have gap_K == 0; their tc_K, tau0_ns and tau0ph_ns are the
/// aluminum reference scales used when evaluating the electron-phonon
/// kernels with the gap set to zero.
struct MaterialParams {
  std::string name;
  double gap_K = 0.0;
  double tc_K = 0.0;
  double tau0_ns = 0.0;
  double tau0ph_ns = 0.0;
  double n_cp_per_um3 = 0.0;
  double v_e_mm_per_ns = 0.0;
  double v_p_um_per_ns = 0.0;
  double sigma_ep_nW_per_um3K5 = 0.0;
  double c_p_coeff = 0.0;
  double c_e_coeff = 0.0;

  [[nodiscard]] bool is_superconductor() const { return gap_K > 0.0; }
};

/// Returns one of: Al, n-Al, Cu, AlSi-wirebond, trap-0.5K.
/// Throws UnknownMaterialError for any other name.
MaterialParams builtin_material(std::string_view name);

std::vector<std::string> builtin_material_names();

/// Checks the positivity and BCS invariants; throws ConfigError on violation.
void validate(const MaterialParams& mat);

/// Normalized BCS density of states eps / sqrt(eps^2 - gap^2).
/// Requires eps_K > gap_K >= 0; throws DomainError otherwise.
double bcs_dos(double eps_K, double gap_K);

using units::ev_from_kelvin;
using units::kelvin_from_ev;

}  // namespace qpc
