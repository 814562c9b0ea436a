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

#include "carl_cli/cli.h"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "carl/errors.h"
#include "carl_cli/plot_script.h"
#include "carl_cli/run_config.h"
#include "carl_cli/runner.h"
#include "json.hpp"
#include "options.h"

namespace carl::cli {
namespace {

constexpr const char* kUnitsFooter =
    "Units: all flags are dimensionless scaled quantities. Detunings are in "
    "units of 4 omega_r (omega_r = hbar k0^2 / 2m), time is tau = 4 omega_r "
    "t, and Gamma is a rate per unit tau. SI input is accepted only through "
    "--physical FILE, a JSON object with keys mu [C m], V [m^3], m [kg], N, "
    "k0 [1/m], omega0, omega1, omega2 [rad/s] and a2_0 (pump amplitude).";

std::string ModeDescription(Mode mode) {
  switch (mode) {
    case Mode::kSpectrum:
      return "Eigenvalues of the dispersion cubic and growth rate at one "
             "point.";
    case Mode::kCurve:
      return "Growth rate along delta21 or alpha_beta, one block per fixed "
             "value.";
    case Mode::kThreshold:
      return "Threshold polylines in the (delta21, alpha_beta) plane.";
    case Mode::kEvolve:
      return "RK4 integration of the linear coupled-mode equations.";
    case Mode::kMassStudy:
      return "RAO and WAO curves at alpha_beta = base (m/m0)^2, in m0 units.";
    case Mode::kValidate:
      return "Integrate random sweep points and compare with the spectrum.";
  }
  return {};
}

// Writes to a file, or to `out` for an empty path or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(out) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ConfigError("cannot write output '" + path + "'");
    }
  }
  bool ToStdout() const { return !file_.is_open(); }
  void Write(const std::string& text) {
    (ToStdout() ? out_ : file_) << text;
    if (!ToStdout()) {
      file_.flush();
      if (!file_) throw ConfigError("write failed");
    }
  }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

int RunPlot(const std::string& input, const std::string& output,
            const PlotOptions& options, std::ostream& out) {
  const PlotScript script = EmitPlotScript(input, options);
  std::string target = output;
  if (target.empty()) {
    const size_t dot = input.find_last_of('.');
    const size_t slash = input.find_last_of('/');
    target = (dot != std::string::npos &&
              (slash == std::string::npos || dot > slash)
                  ? input.substr(0, dot)
                  : input) +
             ".gp";
  }
  Sink sink(target, out);
  sink.Write(script.text);
  if (!sink.ToStdout()) {
    out << "wrote " << target << " (" << PlotStyleName(script.style) << ", "
        << script.series.size() << " series)\n";
  }
  return kExitOk;
}

int RunConfigured(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  // Open the output first so an unwritable path fails before any work.
  const bool summary_only =
      config.mode == Mode::kSpectrum && config.output.empty();
  Sink sink(summary_only ? std::string() : config.output, out);
  std::ostringstream data;
  const std::string summary = Execute(config, data);
  if (!summary_only) sink.Write(data.str());
  (summary_only || !sink.ToStdout() ? out : err) << summary << "\n";
  return kExitOk;
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{
      "carl: linear stability of the collective atomic recoil laser in the "
      "ray-optics (RAO) and wave-optics (WAO) regimes."};
  app.footer(kUnitsFooter);
  app.require_subcommand(0, 1);
  std::string config_path;
  bool dump_config = false;
  app.add_option("--config", config_path,
                 "JSON run config. Keys are the flag names with '_' for '-'; "
                 "parameters sit in a 'scaled' or 'physical' block. Flags "
                 "after the mode override it.");
  app.add_flag("--dump-config", dump_config,
               "Print the equivalent JSON config and exit.");

  RunConfig flags;
  std::string physical_path;
  std::map<Mode, CLI::App*> subcommands;
  std::map<Mode, std::vector<std::pair<const OptionDef*, CLI::Option*>>> bound;
  for (Mode mode : AllModes()) {
    CLI::App* sub =
        app.add_subcommand(std::string(ModeName(mode)), ModeDescription(mode));
    sub->footer(kUnitsFooter);
    for (const OptionDef& def : OptionTable()) {
      if (def.Applies(mode)) {
        bound[mode].emplace_back(&def, def.add_to(*sub, flags));
      }
    }
    if (TakesParameters(mode)) {
      sub->add_option("--physical", physical_path,
                      "SI parameter file (JSON, keys listed below). Excludes "
                      "--delta21, --alpha-beta, --alpha and --beta.");
    }
    subcommands[mode] = sub;
  }

  std::string plot_input, plot_output, plot_style = "auto", plot_image;
  PlotOptions plot_options;
  CLI::App* plot = app.add_subcommand(
      "plot", "Write a gnuplot script for a CSV result file.");
  plot->add_option("result", plot_input, "CSV file written by carl")
      ->required();
  plot->add_option("-o,--output", plot_output,
                   "Script path; '-' for stdout. Default: result path with "
                   ".gp.");
  plot->add_option("--style", plot_style,
                   "auto, curve, mass-study, threshold or evolve. Default "
                   "auto.");
  plot->add_option("--terminal", plot_options.terminal,
                   "gnuplot terminal line. Default 'pngcairo size 900,600'.");
  plot->add_option("--image", plot_image,
                   "Image path. Default: result path with .png.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (plot->parsed()) {
      plot_options.style = ParsePlotStyle(plot_style);
      plot_options.image = plot_image;
      return RunPlot(plot_input, plot_output, plot_options, out);
    }
    std::optional<Mode> mode;
    for (const auto& [m, sub] : subcommands) {
      if (sub->parsed()) mode = m;
    }
    RunConfig config;
    if (!config_path.empty()) {
      config = LoadConfigFile(config_path, mode);
      if (mode) {
        for (const auto& [def, opt] : bound[*mode]) {
          if (opt->count() > 0) def->copy(flags, config);
        }
      }
    } else if (mode) {
      config = flags;
      config.mode = *mode;
    } else {
      err << app.help();
      return kExitConfigError;
    }
    if (!physical_path.empty()) config.physical = LoadPhysicalFile(physical_path);
    CheckConfig(config);
    if (dump_config) {
      out << ConfigToJson(config);
      return kExitOk;
    }
    return RunConfigured(config, out, err);
  } catch (const IntegrationError& e) {
    err << "error: " << e.what() << " (--dt, --max-local-error)\n";
    return kExitNumericalFailure;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
}

}  // namespace carl::cli
