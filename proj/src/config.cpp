// SPDX-License-Identifier: Apache-2.0
#include "qpc/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "qpc/errors.hpp"

namespace qpc {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (ec != std::errc{} || ptr != end || t.empty()) {
    throw ConfigError(what + ": expected a number, got '" + text + "'");
  }
  return v;
}

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    std::ostringstream where;
    where << source << ":" << lineno;
    if (eq == std::string::npos) throw ConfigError(where.str() + ": expected 'key = value'");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(where.str() + ": empty key or value");
    if (kv.count(key)) throw ConfigError(where.str() + ": duplicate key '" + key + "'");
    kv.emplace(std::move(key), std::move(value));
  }
  return kv;
}

KeyValues load_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_key_values(in, path.string());
}

ChipGeometry apply_geometry(const KeyValues& kv, ChipGeometry g) {
  const std::map<std::string, std::function<void(double)>> setters{
      {"chip_area_mm2", [&](double v) { g.chip_area_mm2 = v; }},
      {"substrate_thickness_mm", [&](double v) { g.substrate_thickness_mm = v; }},
      {"film_thickness_um", [&](double v) { g.film_thickness_um = v; }},
      {"normal_thickness_um", [&](double v) { g.normal_thickness_um = v; }},
      {"hotspot_area_mm2", [&](double v) { g.hotspot_area_mm2 = v; }},
      {"wirebond_count",
       [&](double v) {
         if (v != static_cast<double>(static_cast<int>(v))) {
           throw ConfigError("wirebond_count must be an integer");
         }
         g.wirebonds.count = static_cast<int>(v);
       }},
      {"wirebond_radius_um", [&](double v) { g.wirebonds.wire_radius_um = v; }},
      {"wirebond_length_mm", [&](double v) { g.wirebonds.wire_length_mm = v; }},
      {"wirebond_mean_free_path_um", [&](double v) { g.wirebonds.mean_free_path_um = v; }},
  };
  for (const auto& [key, value] : kv) {
    if (key.rfind("material.", 0) == 0) continue;
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown geometry key '" + key + "'");
    it->second(parse_double(value, key));
  }
  return g;
}

MaterialParams apply_material_overrides(const KeyValues& kv, MaterialParams m) {
  const std::map<std::string, double*> fields{
      {"gap_K", &m.gap_K},
      {"tc_K", &m.tc_K},
      {"tau0_ns", &m.tau0_ns},
      {"tau0ph_ns", &m.tau0ph_ns},
      {"n_cp_per_um3", &m.n_cp_per_um3},
      {"v_e_mm_per_ns", &m.v_e_mm_per_ns},
      {"v_p_um_per_ns", &m.v_p_um_per_ns},
      {"sigma_ep_nW_per_um3K5", &m.sigma_ep_nW_per_um3K5},
      {"c_p_coeff", &m.c_p_coeff},
      {"c_e_coeff", &m.c_e_coeff},
  };
  const std::string prefix = "material." + m.name + ".";
  bool tc_changed = false;
  bool gap_set = false;
  for (const auto& [key, value] : kv) {
    if (key.rfind(prefix, 0) != 0) continue;
    const std::string field = key.substr(prefix.size());
    const auto it = fields.find(field);
    if (it == fields.end()) throw ConfigError("unknown material field '" + key + "'");
    *it->second = parse_double(value, key);
    tc_changed |= field == "tc_K";
    gap_set |= field == "gap_K";
  }
  // A new Tc moves the gap with it unless the gap was given explicitly.
  if (tc_changed && !gap_set && m.is_superconductor()) m.gap_K = kBcsGapRatio * m.tc_K;
  validate(m);
  return m;
}

}  // namespace qpc
