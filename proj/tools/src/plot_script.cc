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

#include "carl_cli/plot_script.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "carl/io.h"
#include "carl_cli/run_config.h"

namespace carl::cli {
namespace {

struct Block {
  std::map<std::string, std::string> keys;  // from the "# block k:" line
  std::vector<std::string> regimes;         // in order of appearance
};

struct ResultFile {
  std::vector<std::string> header;
  std::vector<Block> blocks;
  std::vector<std::string> branches;  // threshold files
  size_t rows = 0;
};

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

std::map<std::string, std::string> ParseBlockLine(const std::string& line) {
  std::map<std::string, std::string> keys;
  std::stringstream in(line.substr(line.find(':') + 1));
  std::string word;
  while (in >> word) {
    const size_t eq = word.find('=');
    if (eq != std::string::npos) keys[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return keys;
}

ResultFile ReadResult(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read result file '" + path + "'");
  ResultFile file;
  std::string line;
  std::optional<size_t> regime_col, branch_col;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# block ", 0) == 0) {
        file.blocks.push_back({ParseBlockLine(line), {}});
      }
      continue;
    }
    if (file.header.empty()) {
      file.header = SplitCsv(line);
      for (size_t i = 0; i < file.header.size(); ++i) {
        if (file.header[i] == "regime") regime_col = i;
        if (file.header[i] == "branch_id") branch_col = i;
      }
      continue;
    }
    ++file.rows;
    const std::vector<std::string> cells = SplitCsv(line);
    if (regime_col && *regime_col < cells.size()) {
      if (file.blocks.empty()) file.blocks.push_back({});
      auto& regimes = file.blocks.back().regimes;
      if (std::find(regimes.begin(), regimes.end(), cells[*regime_col]) ==
          regimes.end()) {
        regimes.push_back(cells[*regime_col]);
      }
    }
    if (branch_col && *branch_col < cells.size() &&
        std::find(file.branches.begin(), file.branches.end(),
                  cells[*branch_col]) == file.branches.end()) {
      file.branches.push_back(cells[*branch_col]);
    }
  }
  if (file.header.empty()) {
    throw ConfigError("empty result file '" + path + "': no header row");
  }
  if (file.rows == 0) {
    throw ConfigError("result file '" + path + "' has no records");
  }
  return file;
}

bool HasColumn(const ResultFile& f, const std::string& name) {
  return std::find(f.header.begin(), f.header.end(), name) != f.header.end();
}

// 1-based awk field number.
int Field(const ResultFile& f, const std::string& name) {
  return static_cast<int>(
             std::find(f.header.begin(), f.header.end(), name) -
             f.header.begin()) + 1;
}

void RequireColumns(const ResultFile& f, const std::vector<std::string>& cols,
                    const std::string& path) {
  for (const std::string& c : cols) {
    if (!HasColumn(f, c)) {
      throw ConfigError("result file '" + path + "' is missing column '" + c +
                        "'");
    }
  }
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

// gnuplot single-quoted string literal.
std::string GnuplotQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    out += c;
    if (c == '\'') out += '\'';
  }
  return out + "'";
}

std::string F(int field) { return "$" + std::to_string(field); }

std::string DefaultImage(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  const size_t dot = path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return path.substr(0, dot) + ".png";
  }
  return path + ".png";
}

std::vector<PlotSeries> SweepSeries(const ResultFile& f,
                                    const std::string& path, bool mass) {
  const std::string x = F(Field(f, "axis_value"));
  const std::string y = F(Field(f, "gamma"));
  const std::string regime = F(Field(f, "regime"));
  std::vector<PlotSeries> series;
  for (size_t b = 0; b < f.blocks.size(); ++b) {
    const Block& block = f.blocks[b];
    std::string label;
    if (mass && block.keys.count("mass_ratio")) {
      label = "m/m0=" + block.keys.at("mass_ratio");
    } else if (block.keys.count("alpha_beta")) {
      label = "αβ=" + block.keys.at("alpha_beta");
    } else if (block.keys.count("delta21")) {
      label = "Δ21=" + block.keys.at("delta21");
    }
    for (const std::string& r : block.regimes) {
      PlotSeries s;
      s.title = label.empty() ? r : r + ", " + label;
      s.command = "awk -F, '/^# block /{split($0,w,\" \");b=w[3]+0} !/^#/ && " +
                  regime + "==\"" + r + "\" && b==" + std::to_string(b) +
                  " {print " + x + "\",\"" + y + "}' " + ShellQuote(path);
      s.color = static_cast<int>(b) + 1;
      s.dashed = r == "RAO";
      series.push_back(std::move(s));
    }
  }
  return series;
}

std::vector<PlotSeries> ThresholdSeries(const ResultFile& f,
                                        const std::string& path) {
  const std::string id = F(Field(f, "branch_id"));
  const std::string d = F(Field(f, "delta21"));
  const std::string ab = F(Field(f, "alpha_beta"));
  std::vector<PlotSeries> series;
  for (size_t i = 0; i < f.branches.size(); ++i) {
    PlotSeries s;
    s.title = "branch " + f.branches[i];
    s.command = "awk -F, '!/^#/ && " + id + "==\"" + f.branches[i] +
                "\" {print " + d + "\",\"" + ab + "}' " + ShellQuote(path);
    s.color = static_cast<int>(i) + 1;
    series.push_back(std::move(s));
  }
  return series;
}

std::vector<PlotSeries> TrajectorySeries(const ResultFile& f,
                                         const std::string& path) {
  const std::string tau = F(Field(f, "tau"));
  PlotSeries s;
  s.title = "|A1|";
  s.command = "awk -F, '!/^#/ && NF && " + tau + "!=\"tau\" {print " + tau +
              "\",\"" + F(Field(f, "abs_A1")) + "}' " + ShellQuote(path);
  return {s};
}

}  // namespace

PlotStyle ParsePlotStyle(std::string_view name) {
  for (PlotStyle s : {PlotStyle::kAuto, PlotStyle::kGainCurve,
                      PlotStyle::kMassStudy, PlotStyle::kThreshold,
                      PlotStyle::kTrajectory}) {
    if (PlotStyleName(s) == name) return s;
  }
  throw ConfigError("unknown plot style '" + std::string(name) +
                    "' (auto, curve, mass-study, threshold, evolve)");
}

std::string_view PlotStyleName(PlotStyle style) {
  switch (style) {
    case PlotStyle::kAuto: return "auto";
    case PlotStyle::kGainCurve: return "curve";
    case PlotStyle::kMassStudy: return "mass-study";
    case PlotStyle::kThreshold: return "threshold";
    case PlotStyle::kTrajectory: return "evolve";
  }
  return "?";
}

PlotScript EmitPlotScript(const std::string& path, const PlotOptions& options) {
  const ResultFile f = ReadResult(path);
  PlotScript script;
  script.style = options.style;
  if (script.style == PlotStyle::kAuto) {
    if (HasColumn(f, "branch_id")) {
      script.style = PlotStyle::kThreshold;
    } else if (HasColumn(f, "tau")) {
      script.style = PlotStyle::kTrajectory;
    } else if (HasColumn(f, "axis_value")) {
      const bool mass = std::any_of(
          f.blocks.begin(), f.blocks.end(),
          [](const Block& b) { return b.keys.count("mass_ratio") > 0; });
      script.style = mass ? PlotStyle::kMassStudy : PlotStyle::kGainCurve;
    } else {
      throw ConfigError("unrecognized result schema in '" + path +
                        "': missing column 'axis_value'");
    }
  }

  std::string xlabel, ylabel, extra;
  switch (script.style) {
    case PlotStyle::kGainCurve:
    case PlotStyle::kMassStudy: {
      RequireColumns(f, SweepColumns(), path);
      const bool mass = script.style == PlotStyle::kMassStudy;
      script.series = SweepSeries(f, path, mass);
      const bool along_ab =
          !f.blocks.empty() && f.blocks[0].keys.count("axis") &&
          f.blocks[0].keys.at("axis") == "alpha_beta";
      const std::string units = mass ? " (m = m0 units)" : " (units of 4ω_r)";
      xlabel = along_ab ? "αβ" : "Δ21" + units;
      ylabel = "Γ" + units;
      extra = "set title 'solid: Γ_W (WAO), dashed: Γ_R (RAO)'\n";
      break;
    }
    case PlotStyle::kThreshold:
      RequireColumns(f, PolylineColumns(), path);
      script.series = ThresholdSeries(f, path);
      xlabel = "Δ21";
      ylabel = "αβ";
      break;
    case PlotStyle::kTrajectory:
      RequireColumns(f, TrajectoryColumns(), path);
      script.series = TrajectorySeries(f, path);
      xlabel = "τ = 4ω_r t";
      ylabel = "|A1|";
      extra = "set logscale y\n";
      break;
    case PlotStyle::kAuto:
      break;
  }

  std::ostringstream out;
  out << "# gnuplot script for " << path << "\n"
      << "set terminal " << options.terminal << "\n"
      << "set output "
      << GnuplotQuote(options.image.empty() ? DefaultImage(path)
                                            : options.image)
      << "\n"
      << "set datafile separator ','\n"
      << "set xlabel " << GnuplotQuote(xlabel) << "\n"
      << "set ylabel " << GnuplotQuote(ylabel) << "\n"
      << "set key outside right\n"
      << extra << "plot";
  for (size_t i = 0; i < script.series.size(); ++i) {
    const PlotSeries& s = script.series[i];
    out << (i ? ", \\\n     " : " ") << GnuplotQuote("< " + s.command)
        << " using 1:2 with lines lc " << s.color << " dt "
        << (s.dashed ? 2 : 1) << " title " << GnuplotQuote(s.title);
  }
  out << "\n";
  script.text = out.str();
  return script;
}

}  // namespace carl::cli
