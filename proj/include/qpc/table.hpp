// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qpc {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Rows of named columns, written as CSV (header first) or as a JSON array
/// with one flat object per row.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string& s);

/// Shortest round-trip decimal form of a finite double; throws otherwise.
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);
void write_table(std::ostream& os, const Table& t, OutputFormat fmt);

}  // namespace qpc
