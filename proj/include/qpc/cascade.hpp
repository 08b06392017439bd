// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qpc/random.hpp"

namespace qpc {

enum class ExcitationKind : std::uint8_t { phonon, quasiparticle, electron };
enum class Medium : std::uint8_t { superconductor, normal };

struct Excitation {
  ExcitationKind kind = ExcitationKind::phonon;
  double energy_K = 0.0;
  Medium medium = Medium::superconductor;
};

/// Default seed for reproducible runs when none is given.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED2021ull;

struct CascadeConfig {
  double gap_K = 0.0;
  /// Probability that a pair-breaking phonon is absorbed in the superconductor.
  double participation_s = 1.0;
  std::uint64_t trials = 1;
  std::uint64_t seed = kDefaultSeed;
  /// Quasiparticles below this energy stop emitting (0 selects 3 * gap).
  double qp_freeze_threshold_K = 0.0;
  /// Electrons below this energy are dropped into the electron ledger (0 selects 2 * gap).
  double electron_drop_threshold_K = 0.0;
  /// Worker threads for multi-trial runs (0 selects hardware concurrency).
  unsigned workers = 0;
  double participation_constant = 1.65;

  static CascadeConfig for_gap(double gap_K);

  [[nodiscard]] double freeze_threshold() const;
  [[nodiscard]] double drop_threshold() const;
};

/// Throws ConfigError on an invalid configuration.
void validate(const CascadeConfig& cfg);

/// Final state of one trial.
struct TrialTally {
  std::uint32_t n_qp = 0;
  double energy_in_qp_K = 0.0;
  double energy_in_subgap_phonons_K = 0.0;
  double energy_in_electrons_K = 0.0;
  std::uint64_t steps = 0;

  /// |E_p - ledger| / E_p.
  [[nodiscard]] double conservation_residual(double ep_K) const;
};

struct CascadeResult {
  double ep_K = 0.0;
  double gap_K = 0.0;
  double participation_s = 1.0;
  std::uint64_t trials = 0;
  double n_qp_mean = 0.0;
  double n_qp_normalized = 0.0;         // mean of n_qp / (E_p/gap)
  double n_qp_normalized_stderr = 0.0;
  double energy_in_qp_K = 0.0;          // per-trial means
  double energy_in_subgap_phonons_K = 0.0;
  double energy_in_electrons_K = 0.0;
  double conservation_residual = 0.0;   // worst trial
  std::vector<std::uint32_t> per_trial_counts;

  [[nodiscard]] double ep_over_gap() const { return ep_K / gap_K; }
  [[nodiscard]] double qp_energy_fraction() const { return energy_in_qp_K / ep_K; }
  [[nodiscard]] double subgap_energy_fraction() const { return energy_in_subgap_phonons_K / ep_K; }
  [[nodiscard]] double electron_energy_fraction() const { return energy_in_electrons_K / ep_K; }
};

/// Runs one down-conversion trial of a phonon with energy ep_K.
TrialTally cascade_trial(double ep_K, const CascadeConfig& cfg, RandomStream& rng);

/// Runs cfg.trials independent trials; trial i draws from RandomStream(seed, i),
/// so results do not depend on cfg.workers.
CascadeResult run_cascade(double ep_K, const CascadeConfig& cfg);

/// Superconductor/normal-metal bilayer: participation from the film thicknesses.
CascadeResult run_cascade_bilayer(double ep_K, double ts_um, double tn_um, CascadeConfig cfg);

/// One aggregated point per grid entry (energies in units of the gap).
std::vector<CascadeResult> efficiency_curve(const std::vector<double>& ep_over_gap_grid,
                                            const CascadeConfig& cfg);

/// One aggregated point per participation probability at fixed energy.
std::vector<CascadeResult> participation_sweep(double ep_K, const std::vector<double>& participation,
                                               const CascadeConfig& cfg);

/// Aggregates tallies in index order.
CascadeResult aggregate(double ep_K, const CascadeConfig& cfg, const std::vector<TrialTally>& tallies);

}  // namespace qpc
