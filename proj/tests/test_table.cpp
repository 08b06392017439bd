// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <limits>
#include <sstream>

#include "qpc/errors.hpp"
#include "qpc/table.hpp"

namespace {

using namespace qpc;

Table sample() {
  Table t;
  t.columns = {"name", "value", "count"};
  t.add_row({std::string("a,b"), 0.1, std::int64_t{3}});
  t.add_row({std::string("plain"), 1e-300, std::int64_t{-1}});
  return t;
}

TEST(Table, CsvHeaderAndQuoting) {
  std::ostringstream os;
  write_csv(os, sample());
  EXPECT_EQ(os.str(), "name,value,count\n\"a,b\",0.1,3\nplain,1e-300,-1\n");
}

TEST(Table, JsonOneObjectPerRow) {
  std::ostringstream os;
  write_json(os, sample());
  const std::string s = os.str();
  EXPECT_NE(s.find("\"name\": \"a,b\""), std::string::npos);
  EXPECT_NE(s.find("\"count\": 3"), std::string::npos);
  EXPECT_LT(s.find("\"name\""), s.find("\"value\""));
}

TEST(Table, NumbersRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 6.02e23, -2.5e-17}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_THROW(format_number(std::numeric_limits<double>::quiet_NaN()), std::exception);
  EXPECT_THROW(format_number(std::numeric_limits<double>::infinity()), std::exception);
}

TEST(Table, RowWidthChecked) {
  Table t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.add_row({1.0}), std::exception);
}

TEST(Table, OutputFormat) {
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::csv);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::json);
  EXPECT_THROW(parse_output_format("xml"), std::exception);
}

}  // namespace
