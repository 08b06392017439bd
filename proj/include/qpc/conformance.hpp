// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/cascade.hpp"
#include "qpc/table.hpp"

namespace qpc {

enum class ToleranceKind {
  relative,  // |c - q| / |q| <= value
  absolute,  // |c - q| <= value
  factor,    // max(c/q, q/c) <= value
  minimum,   // c >= q
  maximum,   // c <= q
};

struct Tolerance {
  ToleranceKind kind = ToleranceKind::relative;
  double value = 0.0;
};

enum class ConformanceStatus { pass, fail, documented_deviation };

std::string_view to_string(ConformanceStatus s);

struct ConformanceEntry {
  std::string location;
  std::string quantity;
  double quoted = 0.0;
  double computed = 0.0;
  Tolerance tolerance;
  ConformanceStatus status = ConformanceStatus::pass;
  std::string note;

  /// (computed - quoted) / quoted, or the plain difference when quoted is 0.
  [[nodiscard]] double relative_difference() const;
};

/// True when `computed` meets `tol` against `quoted`.
bool within_tolerance(double quoted, double computed, Tolerance tol);

struct ConformanceOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
};

/// Every quoted number with its computed counterpart and verdict.
std::vector<ConformanceEntry> conformance_report(const ConformanceOptions& opts = {});

Table conformance_table(const std::vector<ConformanceEntry>& entries);

}  // namespace qpc
