// SPDX-License-Identifier: Apache-2.0
#include "qpc/table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "qpc/errors.hpp"

namespace qpc {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + s + "' (expected csv|json)");
}

std::string format_number(double v) {
  if (!std::isfinite(v)) throw std::domain_error("format_number: non-finite value");
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << csv_escape(t.columns[i]);
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    }
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& t, OutputFormat fmt) {
  if (fmt == OutputFormat::csv) {
    write_csv(os, t);
  } else {
    write_json(os, t);
  }
}

}  // namespace qpc
