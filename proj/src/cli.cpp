// SPDX-License-Identifier: Apache-2.0
#include "qpc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qpc/cascade.hpp"
#include "qpc/config.hpp"
#include "qpc/conformance.hpp"
#include "qpc/design.hpp"
#include "qpc/errors.hpp"
#include "qpc/event.hpp"
#include "qpc/rates.hpp"
#include "qpc/table.hpp"

namespace qpc::cli {
namespace {

struct Globals {
  std::string seed;
  std::string format = "csv";
  std::string output;
  unsigned workers = 0;
};

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  std::string_view s = text;
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(what + ": '" + text + "' is not a 64-bit unsigned integer");
  }
  return v;
}

std::uint64_t resolve_seed(const Globals& g) {
  if (!g.seed.empty()) return parse_seed(g.seed, "--seed");
  if (const char* env = std::getenv("QPC_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "QPC_SEED");
  }
  return kDefaultSeed;
}

MaterialParams load_material(const std::string& name, const std::string& config_path) {
  auto mat = builtin_material(name);
  if (!config_path.empty()) mat = apply_material_overrides(load_key_values(config_path), mat);
  validate(mat);
  return mat;
}

std::string fmt(double v) { return format_number(v); }

// rates

struct RatesArgs {
  std::vector<std::string> materials{"Al", "n-Al", "Cu"};
  std::vector<double> energies_K;
  std::string config;
};

Table rates_table(const RatesArgs& a) {
  Table t;
  t.columns = {"material", "quantity", "energy_K", "rate_integral_per_ns", "rate_fit_per_ns",
               "rel_residual"};
  auto add = [&](const std::string& mat, const char* quantity, double e, double exact, double fit) {
    t.add_row({mat, std::string(quantity), e, exact, fit, (fit - exact) / exact});
  };
  for (const auto& name : a.materials) {
    const auto mat = load_material(name, a.config);
    if (mat.is_superconductor()) {
      const double gap = mat.gap_K;
      std::vector<double> pb = a.energies_K;
      std::vector<double> qs = a.energies_K;
      if (a.energies_K.empty()) {
        for (double r : {2.1, 2.5, 3.0, 4.0, 5.0, 7.0, 10.0, 20.0, 50.0}) pb.push_back(r * gap);
        for (double r : {1.05, 1.2, 1.5, 2.0, 3.0, 5.0}) qs.push_back(r * gap);
      }
      for (double e : pb) {
        if (e <= 2.0 * gap) continue;
        add(mat.name, "pair_breaking", e, phonon_pairbreak_rate_integral(e, mat).rate_per_ns,
            phonon_pairbreak_rate_fit(e, mat).rate_per_ns);
      }
      for (double e : qs) {
        if (e <= gap) continue;
        add(mat.name, "qp_scattering", e, qp_scatter_rate_integral(e, mat).rate_per_ns,
            qp_scatter_rate_fit(e, mat).rate_per_ns);
      }
    } else {
      // Normal metals: power-balance estimate against the tabulated prefactor.
      std::vector<double> es = a.energies_K;
      if (es.empty()) es = {1.0, 4.0, 20.0};
      for (double e : es) {
        if (!(e > 0.0)) throw DomainError("rates: energy must be positive (got " + fmt(e) + " K)");
        const auto power = power_rates(e, mat);
        const auto tab = tabulated_rates(e, mat);
        add(mat.name, "phonon_power", e, power.phonon_per_ns, tab.phonon_per_ns);
        add(mat.name, "electron_power", e, power.electron_per_ns, tab.electron_per_ns);
      }
    }
  }
  return t;
}

// cascade

struct CascadeArgs {
  std::vector<double> ep_over_gap{100.0};
  std::uint64_t trials = 10000;
  std::optional<double> participation;
  std::optional<double> ts_um;
  std::optional<double> tn_um;
  std::string material = "Al";
  std::string config;
};

Table cascade_table(const CascadeArgs& a, const Globals& g) {
  const auto mat = load_material(a.material, a.config);
  if (!mat.is_superconductor()) {
    throw ConfigError("cascade: material '" + mat.name + "' is not a superconductor");
  }
  CascadeConfig cfg = CascadeConfig::for_gap(mat.gap_K);
  cfg.trials = a.trials;
  cfg.seed = resolve_seed(g);
  cfg.workers = g.workers;
  if (a.participation) cfg.participation_s = *a.participation;
  if (a.ts_um) cfg.participation_s = participation_ratio(*a.ts_um, *a.tn_um, cfg.participation_constant);
  validate(cfg);

  Table t;
  t.columns = {"ep_over_gap", "participation", "trials", "n_qp_mean", "n_qp_norm_mean",
               "n_qp_norm_stderr", "e_qp_frac", "e_subgap_frac", "e_electron_frac"};
  for (const auto& r : efficiency_curve(a.ep_over_gap, cfg)) {
    t.add_row({r.ep_over_gap(), r.participation_s, static_cast<std::int64_t>(r.trials), r.n_qp_mean,
               r.n_qp_normalized, r.n_qp_normalized_stderr, r.qp_energy_fraction(),
               r.subgap_energy_fraction(), r.electron_energy_fraction()});
  }
  return t;
}

// event

struct EventArgs {
  double energy_MeV = 0.2;
  std::string design = "present";
  std::string geometry;
  double efficiency = kDefaultConversionEfficiency;
  double frequency_GHz = 5.0;
};

Cell t1_cell(const StageT1& t1) {
  switch (t1.kind) {
    case T1Kind::none: return std::string("-");
    case T1Kind::value: return t1.t1_us;
    case T1Kind::lower_bound: return ">" + fmt(t1.t1_us);
    case T1Kind::baseline: return std::string("baseline");
  }
  return std::string("-");
}

Table event_table(const EventArgs& a) {
  EventConfig cfg;
  cfg.deposit_energy_MeV = a.energy_MeV;
  cfg.design = parse_design(a.design);
  cfg.conversion_efficiency = a.efficiency;
  cfg.qubit_frequency_GHz = a.frequency_GHz;
  ChipGeometry geom = cfg.design == Design::improved ? ChipGeometry::improved() : ChipGeometry{};
  auto al = builtin_material("Al");
  if (!a.geometry.empty()) {
    const auto kv = load_key_values(a.geometry);
    geom = apply_geometry(kv, geom);
    al = apply_material_overrides(kv, al);
  }
  const auto tl = simulate_event(cfg, geom, al);

  Table t;
  t.columns = {"stage", "t_start_us", "duration_us", "size_mm", "t1_us"};
  for (const auto& s : tl.stages) {
    Cell size = s.size_mm ? Cell{*s.size_mm} : Cell{std::string("chip")};
    t.add_row({s.name, s.t_start_us, s.duration_us, size, t1_cell(s.t1)});
  }
  return t;
}

// design

struct ParticipationArgs {
  double ts_um = 0.1;
  double tn_um = 6.0;
  double constant = kParticipationConstant;
};

Table participation_table(const ParticipationArgs& a) {
  const double s = participation_ratio(a.ts_um, a.tn_um, a.constant);
  Table t;
  t.columns = {"ts_um", "tn_um", "participation", "suppression"};
  t.add_row({a.ts_um, a.tn_um, s, 1.0 / s});
  return t;
}

Table backside_table(const BacksideCircuit& c) {
  const auto q = backside_q_estimate(c);
  Table t;
  t.columns = {"r_eff_ohm", "qubit_c_fF", "coupling_fraction", "f_GHz", "q_estimate", "series_l_nH",
               "inductor_impedance_ohm"};
  t.add_row({c.r_eff_ohm, c.qubit_c_fF, c.coupling_fraction, c.f_GHz,
             q ? Cell{*q} : Cell{std::string("unbounded")}, c.series_l_nH,
             series_inductor_impedance_ohm(c)});
  return t;
}

struct TrapArgs {
  double tc_K = 0.5;
  double offset_K = 1.0;
  double v_e_mm_per_ns = 2.03;
  double mean_free_path_um = 0.1;
};

Table trap_table(const TrapArgs& a) {
  const auto e = trap_estimates(a.tc_K, a.offset_K, a.v_e_mm_per_ns, a.mean_free_path_um);
  Table t;
  t.columns = {"tc_K", "offset_K", "gap_K", "scatter_time_us", "diffusion_constant_um2_per_ns",
               "diffusion_length_um"};
  t.add_row({a.tc_K, a.offset_K, e.gap_K, e.scatter_time_us, e.diffusion_constant_um2_per_ns,
             e.diffusion_length_um});
  return t;
}

// escape

struct EscapeArgs {
  std::string geometry;
  std::string material = "Al";
};

Table escape_table(const EscapeArgs& a) {
  ChipGeometry geom;
  auto mat = builtin_material(a.material);
  if (!a.geometry.empty()) {
    const auto kv = load_key_values(a.geometry);
    geom = apply_geometry(kv, geom);
    mat = apply_material_overrides(kv, mat);
  }
  validate(mat);
  const double rate = phonon_escape_rate(geom, mat.v_p_um_per_ns);
  Table t;
  t.columns = {"wirebond_count", "chip_area_mm2", "substrate_thickness_mm", "escape_rate_per_ns",
               "escape_time_us"};
  t.add_row({static_cast<std::int64_t>(geom.wirebonds.count), geom.chip_area_mm2,
             geom.substrate_thickness_mm, rate, 1.0 / rate / 1e3});
  return t;
}

void emit(const Table& t, const Globals& g, std::ostream& out) {
  const auto format = parse_output_format(g.format);
  std::ostringstream buf;
  write_table(buf, t, format);
  if (g.output.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + g.output + "'");
  f << buf.str();
  if (!f.flush()) throw std::runtime_error("failed writing output file '" + g.output + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo quasiparticle cascade simulator for superconducting qubits", "qpc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Exit codes: 0 success, 1 numeric failure, 2 usage error.\n"
      "QPC_SEED sets the default seed when --seed is not given.");

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed, decimal or 0x-prefixed hex");
  app.add_option("--out", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", g.output, "Write the table to this file instead of stdout");
  app.add_option("--workers", g.workers, "Worker threads for cascade runs (0: all cores)");

  RatesArgs rates;
  auto* rates_cmd = app.add_subcommand("rates", "Scattering rates: quadrature against fit formulas");
  rates_cmd->add_option("--material", rates.materials, "Materials to tabulate")->capture_default_str();
  rates_cmd->add_option("--energy-k", rates.energies_K, "Energies in K (default: per-material grid)");
  rates_cmd->add_option("--config", rates.config, "key = value file with material overrides")
      ->check(CLI::ExistingFile);

  CascadeArgs cascade;
  auto* cascade_cmd = app.add_subcommand("cascade", "Phonon down-conversion Monte Carlo");
  cascade_cmd->add_option("--ep-over-gap", cascade.ep_over_gap, "Initial phonon energies in units of the gap")
      ->capture_default_str();
  cascade_cmd->add_option("--trials", cascade.trials, "Trials per energy")->capture_default_str();
  auto* part = cascade_cmd->add_option("--participation", cascade.participation,
                                       "Probability a pair-breaking phonon stays in the superconductor");
  auto* ts = cascade_cmd->add_option("--ts-um", cascade.ts_um, "Superconductor thickness (um)");
  auto* tn = cascade_cmd->add_option("--tn-um", cascade.tn_um, "Normal-metal thickness (um)");
  ts->needs(tn);
  tn->needs(ts);
  part->excludes(ts);
  part->excludes(tn);
  cascade_cmd->add_option("--material", cascade.material, "Superconducting film")->capture_default_str();
  cascade_cmd->add_option("--config", cascade.config, "key = value file with material overrides")
      ->check(CLI::ExistingFile);

  EventArgs event;
  auto* event_cmd = app.add_subcommand("event", "Five-stage timeline of a radiation event");
  event_cmd->add_option("--energy-mev", event.energy_MeV, "Deposited energy (MeV)")->capture_default_str();
  event_cmd->add_option("--design", event.design, "present, or improved (alias future)")
      ->check(CLI::IsMember({"present", "improved", "future"}))
      ->capture_default_str();
  event_cmd->add_option("--geometry", event.geometry, "key = value geometry file")->check(CLI::ExistingFile);
  event_cmd->add_option("--efficiency", event.efficiency, "Energy fraction converted to quasiparticles")
      ->capture_default_str();
  event_cmd->add_option("--frequency-ghz", event.frequency_GHz, "Qubit frequency")->capture_default_str();

  auto* design_cmd = app.add_subcommand("design", "Design estimates");
  design_cmd->require_subcommand(1);
  ParticipationArgs pa;
  auto* pa_cmd = design_cmd->add_subcommand("participation", "Bilayer participation ratio");
  pa_cmd->add_option("--ts-um", pa.ts_um, "Superconductor thickness (um)")->capture_default_str();
  pa_cmd->add_option("--tn-um", pa.tn_um, "Normal-metal thickness (um)")->capture_default_str();
  pa_cmd->add_option("--constant", pa.constant, "Normal-metal weight")->capture_default_str();
  BacksideCircuit bc;
  auto* bc_cmd = design_cmd->add_subcommand("backside", "Damping by a resistive backside line");
  bc_cmd->add_option("--r-ohm", bc.r_eff_ohm, "Effective line resistance")->capture_default_str();
  bc_cmd->add_option("--c-ff", bc.qubit_c_fF, "Qubit capacitance")->capture_default_str();
  bc_cmd->add_option("--coupling", bc.coupling_fraction, "Coupling capacitance fraction")->capture_default_str();
  bc_cmd->add_option("--f-ghz", bc.f_GHz, "Qubit frequency")->capture_default_str();
  bc_cmd->add_option("--l-nh", bc.series_l_nH, "Series inductance")->capture_default_str();
  TrapArgs ta;
  auto* ta_cmd = design_cmd->add_subcommand("trap", "Quasiparticle trap scattering estimates");
  ta_cmd->add_option("--tc-k", ta.tc_K, "Trap transition temperature")->capture_default_str();
  ta_cmd->add_option("--offset-k", ta.offset_K, "Energy above the trap gap")->capture_default_str();
  ta_cmd->add_option("--ve-mm-per-ns", ta.v_e_mm_per_ns, "Electron velocity")->capture_default_str();
  ta_cmd->add_option("--mfp-um", ta.mean_free_path_um, "Electron mean free path")->capture_default_str();

  EscapeArgs escape;
  auto* escape_cmd = app.add_subcommand("escape", "Phonon escape rate through the wirebonds");
  escape_cmd->add_option("--geometry", escape.geometry, "key = value geometry file")->check(CLI::ExistingFile);
  escape_cmd->add_option("--material", escape.material, "Film supplying the phonon velocity")
      ->capture_default_str();

  ConformanceOptions conf;
  auto* conf_cmd = app.add_subcommand("conformance", "Computed values against quoted reference numbers");
  conf_cmd->add_option("--trials", conf.trials, "Cascade trials per point")->capture_default_str();

  if (args.empty()) {
    err << app.help();
    return kExitUsage;
  }

  std::string where = "qpc";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    Table table;
    if (*rates_cmd) {
      where = "qpc rates";
      table = rates_table(rates);
    } else if (*cascade_cmd) {
      where = "qpc cascade";
      table = cascade_table(cascade, g);
    } else if (*event_cmd) {
      where = "qpc event";
      table = event_table(event);
    } else if (*design_cmd) {
      where = "qpc design";
      if (*pa_cmd) {
        table = participation_table(pa);
      } else if (*bc_cmd) {
        validate(bc);
        table = backside_table(bc);
      } else {
        table = trap_table(ta);
      }
    } else if (*escape_cmd) {
      where = "qpc escape";
      table = escape_table(escape);
    } else {
      where = "qpc conformance";
      conf.seed = resolve_seed(g);
      conf.workers = g.workers;
      const auto entries = conformance_report(conf);
      std::size_t counts[3] = {0, 0, 0};
      for (const auto& e : entries) ++counts[static_cast<int>(e.status)];
      err << counts[0] << " pass, " << counts[2] << " documented deviation, " << counts[1] << " fail\n";
      table = conformance_table(entries);
    }
    emit(table, g, out);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ConfigError& e) {
    err << where << ": error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownMaterialError& e) {
    err << where << ": error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << where << ": error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qpc::cli
