// SPDX-License-Identifier: Apache-2.0
#pragma once

// Internal units: energy in kelvin (E/k_B), time in ns, length in um,
// rates in 1/ns. Helpers below convert at the edges.

#include <numbers>

namespace qpc::units {

/// 1 eV / k_B in kelvin (CODATA 2018).
inline constexpr double kKelvinPerEv = 11604.51812;

inline constexpr double kPi = std::numbers::pi;

inline constexpr double kUmPerMm = 1.0e3;
inline constexpr double kUm2PerMm2 = 1.0e6;
inline constexpr double kNsPerUs = 1.0e3;

inline constexpr double kelvin_from_ev(double e_ev) { return e_ev * kKelvinPerEv; }
inline constexpr double ev_from_kelvin(double e_k) { return e_k / kKelvinPerEv; }
inline constexpr double kelvin_from_mev(double e_mev) { return kelvin_from_ev(e_mev * 1.0e6); }

}  // namespace qpc::units
