// SPDX-License-Identifier: Apache-2.0
#include "qpc/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qpc/design.hpp"
#include "qpc/errors.hpp"
#include "qpc/sampling.hpp"

namespace qpc {

CascadeConfig CascadeConfig::for_gap(double gap_K) {
  CascadeConfig cfg;
  cfg.gap_K = gap_K;
  return cfg;
}

double CascadeConfig::freeze_threshold() const {
  return qp_freeze_threshold_K > 0.0 ? qp_freeze_threshold_K : 3.0 * gap_K;
}

double CascadeConfig::drop_threshold() const {
  return electron_drop_threshold_K > 0.0 ? electron_drop_threshold_K : 2.0 * gap_K;
}

void validate(const CascadeConfig& cfg) {
  std::ostringstream os;
  if (!(cfg.gap_K > 0.0) || !std::isfinite(cfg.gap_K)) {
    os << "cascade: gap must be positive (got " << cfg.gap_K << ")";
  } else if (!(cfg.participation_s >= 0.0 && cfg.participation_s <= 1.0)) {
    os << "cascade: participation must lie in [0, 1] (got " << cfg.participation_s << ")";
  } else if (cfg.trials < 1) {
    os << "cascade: trials must be >= 1";
  } else if (!(cfg.freeze_threshold() > cfg.gap_K)) {
    os << "cascade: quasiparticle freeze threshold must exceed the gap";
  } else if (!(cfg.drop_threshold() > 0.0)) {
    os << "cascade: electron drop threshold must be positive";
  } else if (!(cfg.participation_constant > 0.0)) {
    os << "cascade: participation constant must be positive";
  } else {
    return;
  }
  throw ConfigError(os.str());
}

double TrialTally::conservation_residual(double ep_K) const {
  const double ledger = energy_in_qp_K + energy_in_subgap_phonons_K + energy_in_electrons_K;
  return ep_K > 0.0 ? std::abs(ep_K - ledger) / ep_K : std::abs(ledger);
}

TrialTally cascade_trial(double ep_K, const CascadeConfig& cfg, RandomStream& rng) {
  if (!(ep_K > 0.0) || !std::isfinite(ep_K)) {
    throw DomainError("cascade_trial: phonon energy must be positive");
  }
  const double gap = cfg.gap_K;
  const double pair_threshold = 2.0 * gap;
  const double freeze = cfg.freeze_threshold();
  const double drop = cfg.drop_threshold();
  const double s = cfg.participation_s;
  // Generous: a cascade needs O(E_p/gap) branchings.
  const auto max_steps = static_cast<std::uint64_t>(1000.0 * (ep_K / gap)) + 1000000u;

  TrialTally tally;
  std::vector<Excitation> work;
  work.reserve(64);
  work.push_back({ExcitationKind::phonon, ep_K, Medium::superconductor});

  while (!work.empty()) {
    if (++tally.steps > max_steps) {
      std::ostringstream os;
      os << "cascade_trial: exceeded " << max_steps << " steps (E_p=" << ep_K
         << " K, gap=" << gap << " K, participation=" << s << ")";
      throw NonTerminationError(os.str());
    }
    const Excitation x = work.back();
    work.pop_back();
    switch (x.kind) {
      case ExcitationKind::phonon: {
        if (x.energy_K <= pair_threshold) {
          tally.energy_in_subgap_phonons_K += x.energy_K;
          break;
        }
        // No draw at s == 1 so the pure superconductor case keeps its stream.
        const bool in_sc = s >= 1.0 || (s > 0.0 && rng.uniform() < s);
        if (in_sc) {
          const auto split = sample_pairbreak_split(x.energy_K, gap, rng);
          work.push_back({ExcitationKind::quasiparticle, split.first, Medium::superconductor});
          work.push_back({ExcitationKind::quasiparticle, split.second, Medium::superconductor});
        } else {
          const auto split = sample_electron_pair(x.energy_K, rng);
          work.push_back({ExcitationKind::electron, split.first, Medium::normal});
          work.push_back({ExcitationKind::electron, split.second, Medium::normal});
        }
        break;
      }
      case ExcitationKind::quasiparticle: {
        if (x.energy_K < freeze) {
          ++tally.n_qp;
          tally.energy_in_qp_K += x.energy_K;
          break;
        }
        const auto split = sample_qp_emission(x.energy_K, gap, rng);
        work.push_back({ExcitationKind::quasiparticle, split.first, Medium::superconductor});
        work.push_back({ExcitationKind::phonon, split.second, Medium::superconductor});
        break;
      }
      case ExcitationKind::electron: {
        if (x.energy_K < drop) {
          tally.energy_in_electrons_K += x.energy_K;
          break;
        }
        const auto split = sample_electron_emission(x.energy_K, rng);
        work.push_back({ExcitationKind::electron, split.first, Medium::normal});
        work.push_back({ExcitationKind::phonon, split.second, Medium::normal});
        break;
      }
    }
  }
  return tally;
}

CascadeResult aggregate(double ep_K, const CascadeConfig& cfg,
                        const std::vector<TrialTally>& tallies) {
  CascadeResult r;
  r.ep_K = ep_K;
  r.gap_K = cfg.gap_K;
  r.participation_s = cfg.participation_s;
  r.trials = tallies.size();
  r.per_trial_counts.reserve(tallies.size());
  const double max_pairs = ep_K / cfg.gap_K;
  double sum_n = 0.0;
  double sum_norm2 = 0.0;
  for (const auto& t : tallies) {
    r.per_trial_counts.push_back(t.n_qp);
    sum_n += t.n_qp;
    const double norm = t.n_qp / max_pairs;
    sum_norm2 += norm * norm;
    r.energy_in_qp_K += t.energy_in_qp_K;
    r.energy_in_subgap_phonons_K += t.energy_in_subgap_phonons_K;
    r.energy_in_electrons_K += t.energy_in_electrons_K;
    r.conservation_residual = std::max(r.conservation_residual, t.conservation_residual(ep_K));
  }
  const auto n = static_cast<double>(tallies.size());
  if (n == 0.0) return r;
  r.n_qp_mean = sum_n / n;
  r.n_qp_normalized = r.n_qp_mean / max_pairs;
  if (n > 1.0) {
    const double var = std::max(0.0, (sum_norm2 - n * r.n_qp_normalized * r.n_qp_normalized) / (n - 1.0));
    r.n_qp_normalized_stderr = std::sqrt(var / n);
  }
  r.energy_in_qp_K /= n;
  r.energy_in_subgap_phonons_K /= n;
  r.energy_in_electrons_K /= n;
  return r;
}

CascadeResult run_cascade(double ep_K, const CascadeConfig& cfg) {
  validate(cfg);
  const std::uint64_t n = cfg.trials;
  std::vector<TrialTally> tallies(n);
  unsigned workers = cfg.workers > 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream rng(cfg.seed, i);
      tallies[i] = cascade_trial(ep_K, cfg, rng);
    }
  };

  if (workers <= 1) {
    run_range(0, n);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = n * w / workers;
      const std::uint64_t end = n * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return aggregate(ep_K, cfg, tallies);
}

CascadeResult run_cascade_bilayer(double ep_K, double ts_um, double tn_um, CascadeConfig cfg) {
  cfg.participation_s = participation_ratio(ts_um, tn_um, cfg.participation_constant);
  return run_cascade(ep_K, cfg);
}

std::vector<CascadeResult> efficiency_curve(const std::vector<double>& ep_over_gap_grid,
                                            const CascadeConfig& cfg) {
  std::vector<CascadeResult> out;
  out.reserve(ep_over_gap_grid.size());
  for (double r : ep_over_gap_grid) {
    if (!(r > 0.0)) throw DomainError("efficiency_curve: grid values must be positive");
    out.push_back(run_cascade(r * cfg.gap_K, cfg));
  }
  return out;
}

std::vector<CascadeResult> participation_sweep(double ep_K, const std::vector<double>& participation,
                                               const CascadeConfig& cfg) {
  std::vector<CascadeResult> out;
  out.reserve(participation.size());
  for (double s : participation) {
    CascadeConfig c = cfg;
    c.participation_s = s;
    out.push_back(run_cascade(ep_K, c));
  }
  return out;
}

}  // namespace qpc
