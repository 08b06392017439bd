// SPDX-License-Identifier: Apache-2.0
#include "qpc/materials.hpp"

#include <cmath>
#include <sstream>

#include "qpc/errors.hpp"

namespace qpc {
namespace {

MaterialParams aluminum() {
  MaterialParams m;
  m.name = "Al";
  m.tc_K = 1.2;
  m.gap_K = kBcsGapRatio * m.tc_K;
  m.tau0_ns = 440.0;
  m.tau0ph_ns = 0.24;
  m.n_cp_per_um3 = 2.8e6;
  m.v_e_mm_per_ns = 2.03;
  m.v_p_um_per_ns = 6.4;
  m.sigma_ep_nW_per_um3K5 = 0.2;
  m.c_p_coeff = 2.5;
  m.c_e_coeff = 140.0;
  return m;
}

}  // namespace

MaterialParams builtin_material(std::string_view name) {
  if (name == "Al") return aluminum();
  if (name == "n-Al") {
    auto m = aluminum();
    m.name = "n-Al";
    m.gap_K = 0.0;
    return m;
  }
  if (name == "Cu") {
    auto m = aluminum();
    m.name = "Cu";
    m.gap_K = 0.0;
    m.n_cp_per_um3 = 0.0;
    m.v_e_mm_per_ns = 1.57;
    m.v_p_um_per_ns = 4.8;
    m.sigma_ep_nW_per_um3K5 = 2.0;
    m.c_p_coeff = 6.6;
    m.c_e_coeff = 97.0;
    return m;
  }
  if (name == "AlSi-wirebond") {
    // Slightly higher gap than the device aluminum so 2*gap phonons from the
    // chip do not break pairs in the bonds.
    auto m = aluminum();
    m.name = "AlSi-wirebond";
    m.tc_K = 1.3;
    m.gap_K = kBcsGapRatio * m.tc_K;
    return m;
  }
  if (name == "trap-0.5K") {
    auto m = aluminum();
    m.name = "trap-0.5K";
    m.tc_K = 0.5;
    m.gap_K = kBcsGapRatio * m.tc_K;
    return m;
  }
  throw UnknownMaterialError("unknown material '" + std::string(name) + "'");
}

std::vector<std::string> builtin_material_names() {
  return {"Al", "n-Al", "Cu", "AlSi-wirebond", "trap-0.5K"};
}

void validate(const MaterialParams& mat) {
  auto require_positive = [&](double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError("material '" + mat.name + "': " + field + " must be positive");
    }
  };
  if (mat.gap_K < 0.0) throw ConfigError("material '" + mat.name + "': gap_K must be >= 0");
  require_positive(mat.tc_K, "tc_K");
  require_positive(mat.tau0_ns, "tau0_ns");
  require_positive(mat.tau0ph_ns, "tau0ph_ns");
  require_positive(mat.v_e_mm_per_ns, "v_e_mm_per_ns");
  require_positive(mat.v_p_um_per_ns, "v_p_um_per_ns");
  require_positive(mat.sigma_ep_nW_per_um3K5, "sigma_ep_nW_per_um3K5");
  require_positive(mat.c_p_coeff, "c_p_coeff");
  require_positive(mat.c_e_coeff, "c_e_coeff");
  if (mat.is_superconductor()) {
    require_positive(mat.n_cp_per_um3, "n_cp_per_um3");
    if (std::abs(mat.gap_K - kBcsGapRatio * mat.tc_K) > 1e-12 * mat.gap_K) {
      std::ostringstream os;
      os << "material '" << mat.name << "': gap_K " << mat.gap_K << " violates gap = 1.76 * tc";
      throw ConfigError(os.str());
    }
  }
}

double bcs_dos(double eps_K, double gap_K) {
  if (!(gap_K >= 0.0) || !(eps_K > gap_K)) {
    std::ostringstream os;
    os << "bcs_dos: requires eps > gap >= 0 (eps=" << eps_K << ", gap=" << gap_K << ")";
    throw DomainError(os.str());
  }
  // (eps - gap)(eps + gap) avoids cancellation near the gap.
  return eps_K / std::sqrt((eps_K - gap_K) * (eps_K + gap_K));
}

}  // namespace qpc
