// Copyright 2026 The CARL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carl/io.h"

#include <charconv>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.h"

namespace carl {
namespace {

std::vector<std::string> DataLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

TEST(FormatNumber, RoundTrips) {
  oracle::Uniform u(71);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(-1, 1) * std::pow(10.0, u(-300, 300));
    const std::string s = FormatNumber(x);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, x);
  }
  EXPECT_EQ(FormatNumber(-0.0), "0");
  EXPECT_EQ(FormatNumber(0.5), "0.5");
}

TEST(WriteSweepCsv, HeaderAndRecords) {
  SweepSpec spec;
  spec.start = -1.0;
  spec.stop = 1.0;
  spec.num_points = 5;
  spec.alpha_beta = 1.0;
  const SweepResult r = GainCurve(spec, {1});
  std::ostringstream out;
  WriteSweepCsv(out, {r});
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("# carl ", 0), 0u);
  EXPECT_NE(text.find("CODATA 2018"), std::string::npos);
  const auto lines = DataLines(text);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[0],
            "axis_name,axis_value,regime,gamma,case,re_l1,im_l1,re_l2,im_l2,"
            "re_l3,im_l3");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = Split(lines[i]);
    ASSERT_EQ(cells.size(), 11u);
    EXPECT_EQ(cells[0], "delta21");
    const SweepRecord& rec = r.records[i - 1];
    EXPECT_EQ(std::stod(cells[3]), rec.gamma);
    EXPECT_EQ(cells[4], CaseName(rec.case_tag));
  }
}

TEST(WriteSweepCsv, BlocksAndOptionalTimestamp) {
  SweepSpec spec;
  spec.num_points = 3;
  const auto study = MassStudy(5.0, {1.0, 10.0}, spec, {1});
  std::ostringstream plain, stamped;
  WriteSweepCsv(plain, study);
  OutputMeta meta;
  meta.timestamp = "2026-01-01T00:00:00Z";
  WriteSweepCsv(stamped, study, meta);
  EXPECT_EQ(plain.str().find("timestamp"), std::string::npos);
  EXPECT_NE(stamped.str().find("# timestamp: 2026-01-01T00:00:00Z"),
            std::string::npos);
  EXPECT_NE(plain.str().find("# block 1:"), std::string::npos);
  EXPECT_NE(plain.str().find("mass_ratio=10"), std::string::npos);
  EXPECT_NE(plain.str().find("\n\n\n# block 1"), std::string::npos);
}

TEST(WriteSweepJson, MirrorsCsvRecords) {
  SweepSpec spec;
  spec.num_points = 4;
  const SweepResult r = GainCurve(spec, {1});
  std::ostringstream out;
  WriteSweepJson(out, {r});
  const auto doc = nlohmann::json::parse(out.str());
  ASSERT_EQ(doc["results"].size(), 1u);
  const auto& records = doc["results"][0]["records"];
  ASSERT_EQ(records.size(), r.records.size());
  for (size_t k = 0; k < r.records.size(); ++k) {
    EXPECT_EQ(records[k]["gamma"].get<double>(), r.records[k].gamma);
    EXPECT_EQ(records[k]["regime"], std::string(RegimeName(r.records[k].regime)));
    EXPECT_EQ(records[k]["re_l1"].get<double>(), r.records[k].lambdas[0].real());
  }
  EXPECT_EQ(doc["meta"]["constants"]["hbar"].get<double>(), constants::kHbar);
}

TEST(WriteTrajectoryCsv, ColumnsAndMetadata) {
  const ScaledParams p = ScaledParams::FromProduct(0.0, 1.0, Regime::kWaveOptics);
  EvolveOptions opts;
  opts.output_stride = 100;
  const Trajectory t = Evolve(p, SeededState(), 1.0, 1e-3, opts);
  std::ostringstream out;
  WriteTrajectoryCsv(out, t);
  const std::string text = out.str();
  EXPECT_NE(text.find("# params: delta21=0 alpha=1 beta=1 eta=1"),
            std::string::npos);
  EXPECT_NE(text.find("# dt: 0.001 stride: 100"), std::string::npos);
  EXPECT_NE(text.find("# seed_amplitude: 1e-06"), std::string::npos);
  const auto lines = DataLines(text);
  EXPECT_EQ(lines[0], "tau,re_A1,im_A1,abs_A1,re_B,im_B,abs_B,re_Bdot,im_Bdot");
  EXPECT_EQ(lines.size(), t.samples.size() + 1);
  EXPECT_EQ(Split(lines[1]).size(), 9u);
}

TEST(WritePolylinesCsv, Columns) {
  ThresholdMapSpec spec;
  spec.regime = Regime::kRayOptics;
  spec.resolution = 16;
  const auto lines = ThresholdMap(spec);
  std::ostringstream out;
  WritePolylinesCsv(out, lines, spec);
  const auto data = DataLines(out.str());
  EXPECT_EQ(data[0], "branch_id,delta21,alpha_beta");
  size_t points = 0;
  for (const auto& l : lines) points += l.points.size();
  EXPECT_EQ(data.size(), points + 1);
}

}  // namespace
}  // namespace carl
