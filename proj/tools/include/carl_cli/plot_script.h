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

#ifndef CARL_CLI_PLOT_SCRIPT_H_
#define CARL_CLI_PLOT_SCRIPT_H_

#include <string>
#include <string_view>
#include <vector>

namespace carl::cli {

enum class PlotStyle { kAuto, kGainCurve, kMassStudy, kThreshold, kTrajectory };

PlotStyle ParsePlotStyle(std::string_view name);  // throws ConfigError
std::string_view PlotStyleName(PlotStyle style);

struct PlotOptions {
  PlotStyle style = PlotStyle::kAuto;
  std::string terminal = "pngcairo size 900,600";
  std::string image;  // default: result path with a .png extension
};

// One plotted line. `command` is a POSIX shell pipeline printing "x,y" rows;
// the script reads it through gnuplot's "< command" data source.
struct PlotSeries {
  std::string title;
  std::string command;
  int color = 1;
  bool dashed = false;
};

struct PlotScript {
  PlotStyle style = PlotStyle::kAuto;  // resolved
  std::vector<PlotSeries> series;
  std::string text;
};

// Reads a CSV result file and builds a gnuplot script for it. Gain curves
// get one line per (block, regime); mass studies draw WAO solid and RAO
// dashed in one color per mass ratio. Throws ConfigError for unreadable or
// empty files and names the first missing column on a schema mismatch.
PlotScript EmitPlotScript(const std::string& result_path,
                          const PlotOptions& options = {});

}  // namespace carl::cli

#endif  // CARL_CLI_PLOT_SCRIPT_H_
