// SPDX-License-Identifier: Apache-2.0
#include "qpc/conformance.hpp"

#include <algorithm>
#include <cmath>

#include "qpc/design.hpp"
#include "qpc/event.hpp"
#include "qpc/rates.hpp"
#include "qpc/stats.hpp"
#include "qpc/units.hpp"

namespace qpc {
namespace {

constexpr Tolerance rel(double v) { return {ToleranceKind::relative, v}; }
constexpr Tolerance abs_tol(double v) { return {ToleranceKind::absolute, v}; }
constexpr Tolerance factor(double v) { return {ToleranceKind::factor, v}; }
constexpr Tolerance at_least() { return {ToleranceKind::minimum, 0.0}; }
constexpr Tolerance at_most() { return {ToleranceKind::maximum, 0.0}; }

std::string tolerance_text(Tolerance t) {
  switch (t.kind) {
    case ToleranceKind::relative: return "rel " + format_number(t.value);
    case ToleranceKind::absolute: return "abs " + format_number(t.value);
    case ToleranceKind::factor: return "factor " + format_number(t.value);
    case ToleranceKind::minimum: return "min";
    case ToleranceKind::maximum: return "max";
  }
  return "";
}

class Report {
 public:
  void check(std::string location, std::string quantity, double quoted, double computed,
             Tolerance tol, std::string note = "") {
    add(std::move(location), std::move(quantity), quoted, computed, tol, std::move(note), false);
  }

  void deviation(std::string location, std::string quantity, double quoted, double computed,
                 Tolerance tol, std::string note) {
    add(std::move(location), std::move(quantity), quoted, computed, tol, std::move(note), true);
  }

  std::vector<ConformanceEntry> take() { return std::move(entries_); }

 private:
  void add(std::string location, std::string quantity, double quoted, double computed,
           Tolerance tol, std::string note, bool known) {
    ConformanceEntry e{std::move(location), std::move(quantity), quoted, computed, tol,
                       ConformanceStatus::pass, std::move(note)};
    if (known) {
      e.status = ConformanceStatus::documented_deviation;
    } else if (!within_tolerance(quoted, computed, tol)) {
      e.status = ConformanceStatus::fail;
    }
    entries_.push_back(std::move(e));
  }

  std::vector<ConformanceEntry> entries_;
};

}  // namespace

std::string_view to_string(ConformanceStatus s) {
  switch (s) {
    case ConformanceStatus::pass: return "pass";
    case ConformanceStatus::fail: return "fail";
    case ConformanceStatus::documented_deviation: return "documented deviation";
  }
  return "";
}

double ConformanceEntry::relative_difference() const {
  if (quoted == 0.0) return computed;
  return (computed - quoted) / quoted;
}

bool within_tolerance(double quoted, double computed, Tolerance tol) {
  if (!std::isfinite(computed)) return false;
  switch (tol.kind) {
    case ToleranceKind::relative:
      return std::abs(computed - quoted) <= tol.value * std::abs(quoted);
    case ToleranceKind::absolute:
      return std::abs(computed - quoted) <= tol.value;
    case ToleranceKind::factor:
      if (quoted <= 0.0 || computed <= 0.0) return false;
      return std::max(computed / quoted, quoted / computed) <= tol.value;
    case ToleranceKind::minimum:
      return computed >= quoted;
    case ToleranceKind::maximum:
      return computed <= quoted;
  }
  return false;
}

std::vector<ConformanceEntry> conformance_report(const ConformanceOptions& opts) {
  Report r;
  const auto al = builtin_material("Al");
  const auto nal = builtin_material("n-Al");
  const auto cu = builtin_material("Cu");
  const double gap = al.gap_K;

  // Material constants.
  r.check("Al gap", "gap (ueV)", 182.0, units::ev_from_kelvin(gap) * 1e6, rel(0.01));
  r.check("Al Cooper pairs", "n_cp (1/um^3)", 2.8e6, al.n_cp_per_um3, rel(1e-12));
  r.check("heat capacity table", "Sigma n-Al (nW/um^3/K^5)", 0.2, nal.sigma_ep_nW_per_um3K5, rel(1e-12));
  r.check("heat capacity table", "Sigma Cu (nW/um^3/K^5)", 2.0, cu.sigma_ep_nW_per_um3K5, rel(1e-12));

  // Kaplan prefactors against the fits at the Al gap.
  const double pb_slope = phonon_pairbreak_rate_fit(1000.0 * gap, al, true).rate_per_ns / (1000.0 * gap);
  r.check("scattering table, Kaplan", "p -> q+q prefactor (1/ns/K)", 1.0 / tabulated::kPairBreakNsK,
          pb_slope, rel(0.15), "linear asymptote of the pair-breaking fit");
  const double qs_pref = qp_scatter_rate_fit(gap + 1.0, al).rate_per_ns;
  r.deviation("scattering table, Kaplan", "q -> q+p prefactor (1/ns/K^3)",
              1.0 / tabulated::kQpScatterNsK3, qs_pref, rel(0.15),
              "cubic fit at the 2.112 K gap gives 1/2302 ns");
  r.check("scattering table, Kaplan", "q+q -> p at n_qp = n_cp (1/ns)",
          tabulated::kRecombNumerator / al.tau0_ns, qp_recomb_rate(1.0, al).rate_per_ns, rel(1e-12));

  // Power rates at 1 K.
  const auto pn = power_rates(1.0, nal);
  const auto pc = power_rates(1.0, cu);
  r.check("scattering table, Power", "n-Al p -> e+e at 1 K (1/ns)", 1.0 / tabulated::kNAlPhononNsK,
          pn.phonon_per_ns, rel(0.10));
  r.check("scattering table, Power", "n-Al e -> e+p at 1 K (1/ns)", 1.0 / tabulated::kNAlElectronNsK3,
          pn.electron_per_ns, rel(0.10));
  r.check("scattering table, Power", "Cu e -> e+p at 1 K (1/ns)", 1.0 / tabulated::kCuElectronNsK3,
          pc.electron_per_ns, rel(0.10));
  r.deviation("scattering table, Power", "Cu p -> e+e at 1 K (1/ns)", 1.0 / tabulated::kCuPhononNsK,
              pc.phonon_per_ns, rel(0.10), "4 Sigma / c_p from the heat capacity table gives 1/0.825 ns");

  // Fit quality.
  r.check("pair-breaking fit", "max |fit - integral| / integral, 2.1 to 50 gap", 0.05,
          max_pairbreak_fit_residual(al, 2.1, 50.0), at_most());
  r.deviation("qp scattering fit", "max |fit - integral| / integral, 1.01 to 5 gap", 0.20,
              max_qp_scatter_fit_residual(al, 1.01, 5.0), at_most(),
              "cubic fit is 3.9x the integral at 1.01 gap and 0.71x near 2 to 3 gap");
  r.deviation("scattering length table", "Al p rate at 20 K from the integral (1/ns)", 20.0,
              phonon_pairbreak_rate_integral(20.0, al).rate_per_ns, rel(0.15),
              "table row follows the rounded 1/1.0 ns prefactor");

  // Scattering lengths from the tabulated prefactors.
  const auto al_len = scattering_length_table(al, 0.1, RateSource::tabulated);
  const auto cu_len = scattering_length_table(cu, 3.0, RateSource::tabulated);
  r.check("scattering length table", "Al q rate 20 K (1/ns)", 3.5, al_len[0].electron_rate_per_ns, rel(0.15));
  r.check("scattering length table", "Al q diffusion 20 K (um)", 7.6, al_len[0].electron_diffusion_um, rel(0.15));
  r.check("scattering length table", "Al p length 20 K (um)", 0.32, al_len[0].phonon_length_um, rel(0.15));
  r.deviation("scattering length table", "Al q rate 4 K (1/ns)", 0.0052, al_len[1].electron_rate_per_ns,
              rel(0.15), "(4 K - 2.112 K)^3 / 1700 ns; the table value needs a gap near 1.9 K");
  r.check("scattering length table", "Al q diffusion 4 K (um)", 200.0, al_len[1].electron_diffusion_um, rel(0.15));
  r.check("scattering length table", "Al p length 4 K (um)", 1.6, al_len[1].phonon_length_um, rel(0.15));
  r.check("scattering length table", "Cu e rate 20 K (1/ns)", 330.0, cu_len[0].electron_rate_per_ns, rel(0.15));
  r.check("scattering length table", "Cu e diffusion 20 K (um)", 3.8, cu_len[0].electron_diffusion_um, rel(0.15));
  r.check("scattering length table", "Cu p rate 20 K (1/ns)", 2.4, cu_len[0].phonon_rate_per_ns, rel(0.15));
  r.check("scattering length table", "Cu p length 20 K (um)", 2.0, cu_len[0].phonon_length_um, rel(0.15));
  r.check("scattering length table", "Cu e rate 4 K (1/ns)", 2.7, cu_len[1].electron_rate_per_ns, rel(0.15));
  r.check("scattering length table", "Cu e diffusion 4 K (um)", 42.0, cu_len[1].electron_diffusion_um, rel(0.15));
  r.check("scattering length table", "Cu p rate 4 K (1/ns)", 0.49, cu_len[1].phonon_rate_per_ns, rel(0.15));
  r.check("scattering length table", "Cu p length 4 K (um)", 9.8, cu_len[1].phonon_length_um, rel(0.15));

  // Cascade.
  CascadeConfig cc = CascadeConfig::for_gap(gap);
  cc.trials = opts.trials;
  cc.seed = opts.seed;
  cc.workers = opts.workers;
  const auto plateau = efficiency_curve({50.0, 100.0, 200.0}, cc);
  double plateau_mean = 0.0;
  for (const auto& p : plateau) plateau_mean += p.n_qp_normalized;
  plateau_mean /= static_cast<double>(plateau.size());
  r.check("cascade plateau", "mean n_qp / (E_p/gap), 50 to 200 gap", 0.57, plateau_mean, abs_tol(0.02));
  r.check("cascade steps", "n_qp at 3 gap", 2.0, run_cascade(3.0 * gap, cc).n_qp_mean, abs_tol(0.0));
  r.check("cascade steps", "n_qp at 1.5 gap", 0.0, run_cascade(1.5 * gap, cc).n_qp_mean, abs_tol(0.0));

  std::vector<double> s_grid;
  for (int i = 1; i <= 10; ++i) s_grid.push_back(0.1 * i);
  const auto sweep = participation_sweep(10.0 * gap, s_grid, cc);
  std::vector<double> ys;
  for (const auto& p : sweep) ys.push_back(p.n_qp_normalized);
  const auto line = fit_line(s_grid, ys);
  r.check("bilayer sweep", "linear fit R^2", 0.99, line.r_squared, at_least());
  r.check("bilayer sweep", "line at s = 1 vs pure superconductor", ys.back(), line.at(1.0), abs_tol(0.03));

  // Event pipeline.
  EventConfig ev;
  const ChipGeometry geom;
  const auto present = simulate_event(ev, geom, al);
  const auto& s = present.summary;
  r.check("event budget", "number of quasiparticles", 0.67e9, s.n_qp, rel(0.10));
  r.check("event budget", "density for 1 cm^2 x 0.1 um (1/um^3)", 67.0,
          s.n_qp / (geom.chip_area_mm2 * units::kUm2PerMm2 * geom.film_thickness_um), rel(0.10));
  r.check("event budget", "n_qp / n_cp", 2.4e-5, s.density_ratio_chip, rel(0.10));
  r.deviation("event budget", "qubit Q", 51e3, s.q_chip.value_or(0.0), rel(0.10),
              "1/Q = 1.2 n_qp/n_cp gives 37 k at the 2.24e-5 density");
  r.check("event budget", "T1 for 1 cm^2 (us)", 1.6, s.t1_chip_us.value_or(0.0), factor(1.6));
  r.check("event budget", "T1 for 10 mm^2 (us)", 0.16, s.t1_hotspot_us.value_or(0.0), factor(1.6));
  r.check("phonon escape", "1/Gamma_p (us)", 4000.0, s.escape_time_us, rel(0.10));
  r.check("qp recombination", "t0 at the 10 mm^2 density (us)", 100.0, s.recombination_t0_us,
          factor(3.0));
  r.check("qp diffusion", "D_q at 1 us (mm)", 0.4, qp_diffusion_radius(1.0, al.v_e_mm_per_ns, 0.1), rel(0.15));
  r.check("qp diffusion", "velocity factor 0.25 K above the gap", 0.46,
          qp_diffusion_radius(1.0, al.v_e_mm_per_ns, 0.1, 0.25, gap) /
              qp_diffusion_radius(1.0, al.v_e_mm_per_ns, 0.1),
          rel(0.05));

  // Stage table.
  ev.design = Design::improved;
  const auto improved = simulate_event(ev, ChipGeometry::improved(), al);
  const double quoted_times[] = {0.01, 0.3, 100.0, 1000.0, 4000.0};
  const double quoted_improved_times[] = {0.01, 0.3, 1.7, 1000.0, 4000.0};
  for (std::size_t i = 0; i < present.stages.size(); ++i) {
    r.check("stage table, present", present.stages[i].name + " time (us)", quoted_times[i],
            present.stages[i].duration_us, rel(1e-9));
    r.check("stage table, future", improved.stages[i].name + " time (us)", quoted_improved_times[i],
            improved.stages[i].duration_us, rel(1e-9));
  }
  for (const auto* tl : {&present, &improved}) {
    const char* where = tl == &present ? "stage table, present" : "stage table, future";
    for (const auto& st : tl->stages) {
      const std::string& ref = st.reference_t1;
      if (ref.empty() || ref == "bl") continue;
      const double quoted = std::stod(ref.front() == '>' ? ref.substr(1) : ref);
      r.check(where, st.name + " T1 (us)", quoted, st.t1.t1_us, factor(1.6));
    }
  }
  r.check("improved design", "stage-2 T1 ratio improved / present", 100.0,
          improved.stages[1].t1.t1_us / present.stages[1].t1.t1_us, rel(1e-6));

  // Design estimates.
  r.check("normal-metal backing", "suppression at 6 um", 100.0, improved.summary.suppression, rel(0.01));
  BacksideCircuit bc;
  r.check("backside line", "qubit Q at 6 ohm", 1e3, backside_q_estimate(bc).value_or(0.0), factor(2.0));
  r.check("backside line", "series inductor reactance (ohm)", 10.0, series_inductor_impedance_ohm(bc),
          rel(0.10));
  bc.r_eff_ohm = 0.01;
  r.check("backside line", "qubit Q at 0.01 ohm", 3e6, backside_q_estimate(bc).value_or(0.0), factor(10.0),
          "order-of-magnitude estimate");
  const auto trap = trap_estimates(0.5, 1.0, al.v_e_mm_per_ns, 0.1);
  r.check("qp trap", "scatter time 1 K above the trap gap (us)", 1.7, trap.scatter_time_us, rel(0.01));

  return r.take();
}

Table conformance_table(const std::vector<ConformanceEntry>& entries) {
  Table t;
  t.columns = {"location", "quantity", "quoted", "computed", "rel_diff", "tolerance", "status", "note"};
  for (const auto& e : entries) {
    t.add_row({e.location, e.quantity, e.quoted, e.computed, e.relative_difference(),
               tolerance_text(e.tolerance), std::string(to_string(e.status)), e.note});
  }
  return t;
}

}  // namespace qpc
