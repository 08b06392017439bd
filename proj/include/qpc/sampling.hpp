// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpc/random.hpp"

namespace qpc {

/// Energies of the two products of a branching step; `first + second` equals
/// the parent energy up to one rounding.
struct EnergySplit {
  double first = 0.0;
  double second = 0.0;
};

/// Pair breaking p -> q + q. Draws eps from the density
/// rho(eps) rho(E-eps) (1 + gap^2/(eps (E-eps))) on [gap, E-gap] and returns
/// {eps, E - eps}. Requires ep_K > 2 gap_K > 0.
EnergySplit sample_pairbreak_split(double ep_K, double gap_K, RandomStream& rng);

/// Quasiparticle relaxation q -> q + p. Draws the final energy e' from
/// (eps-e')^2 rho(e') (1 - gap^2/(eps e')) on [gap, eps] and returns
/// {e', eps - e'} (quasiparticle, phonon). Requires eps_K > gap_K > 0.
EnergySplit sample_qp_emission(double eps_K, double gap_K, RandomStream& rng);

/// Normal-metal relaxation e -> e + p (the gap-free kernel): the phonon
/// energy x has density proportional to x^2 on [0, eps]. Returns
/// {eps - x, x} (electron, phonon). Requires ee_K > 0.
EnergySplit sample_electron_emission(double ee_K, RandomStream& rng);

/// Normal-metal phonon absorption p -> e + e: uniform split of E.
EnergySplit sample_electron_pair(double ep_K, RandomStream& rng);

}  // namespace qpc
