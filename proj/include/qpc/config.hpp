// SPDX-License-Identifier: Apache-2.0
#pragma once

// Flat `key = value` configuration files; `#` starts a comment.
//
//   chip_area_mm2 = 100
//   wirebond_count = 300
//   material.Al.tau0_ns = 440

#include <filesystem>
#include <istream>
#include <map>
#include <string>

#include "qpc/event.hpp"
#include "qpc/materials.hpp"

namespace qpc {

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in, const std::string& source = "<input>");
KeyValues load_key_values(const std::filesystem::path& path);

/// Applies geometry keys on top of `base`; throws ConfigError on unknown
/// keys other than `material.*`.
ChipGeometry apply_geometry(const KeyValues& kv, ChipGeometry base);

/// Applies `material.<name>.<field>` keys matching mat.name.
MaterialParams apply_material_overrides(const KeyValues& kv, MaterialParams mat);

double parse_double(const std::string& text, const std::string& what);

}  // namespace qpc
