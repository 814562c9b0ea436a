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

#include "options.h"

#include <algorithm>
#include <type_traits>

namespace carl::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <typename T>
struct Unwrap {
  using type = T;
};
template <typename T>
struct Unwrap<std::optional<T>> {
  using type = T;
};

template <typename T>
inline constexpr bool kIsOptional = false;
template <typename T>
inline constexpr bool kIsOptional<std::optional<T>> = true;

template <typename V>
V ReadValue(const json& j, const std::string& key) {
  auto fail = [&](const char* expected) {
    throw ConfigError("config key '" + key + "' expects " + expected +
                      ", got " + j.dump());
  };
  if constexpr (std::is_same_v<V, bool>) {
    if (!j.is_boolean()) fail("true or false");
    return j.get<bool>();
  } else if constexpr (std::is_same_v<V, std::string>) {
    if (!j.is_string()) fail("a string");
    return j.get<std::string>();
  } else if constexpr (std::is_same_v<V, std::uint64_t>) {
    if (!j.is_number_unsigned()) fail("a non-negative integer");
    return j.get<std::uint64_t>();
  } else if constexpr (std::is_integral_v<V>) {
    if (!j.is_number_integer()) fail("an integer");
    return j.get<V>();
  } else if constexpr (std::is_same_v<V, double>) {
    if (!j.is_number()) fail("a number");
    return j.get<double>();
  } else {
    // List of numbers; a bare number is a one-element list.
    if (j.is_number()) return V{j.get<double>()};
    if (!j.is_array()) fail("a number or a list of numbers");
    V out;
    for (const json& e : j) {
      if (!e.is_number()) fail("a number or a list of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
}

std::string KeyOf(const std::string& flags) {
  std::string key = flags.substr(flags.rfind("--") + 2);
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

template <typename Field>
OptionDef Def(std::string flags, Field RunConfig::*member,
              std::vector<Mode> modes, std::string help, bool scaled = false) {
  using V = typename Unwrap<Field>::type;
  OptionDef d;
  d.key = KeyOf(flags);
  d.flags = std::move(flags);
  d.scaled_block = scaled;
  d.modes = std::move(modes);
  d.help = std::move(help);
  d.add_to = [flags = d.flags, help = d.help, member](
                 CLI::App& app, RunConfig& config) -> CLI::Option* {
    if constexpr (std::is_same_v<V, bool>) {
      return app.add_flag(flags, config.*member, help);
    } else {
      CLI::Option* opt = app.add_option_function<V>(
          flags, [&config, member](const V& v) { config.*member = v; }, help);
      if constexpr (std::is_same_v<V, std::vector<double>>) {
        opt->delimiter(',');
      }
      return opt;
    }
  };
  d.read = [key = d.key, member](const json& j, RunConfig& config) {
    config.*member = ReadValue<V>(j, key);
  };
  d.write = [key = d.key, member](const RunConfig& config, ordered_json& out) {
    const Field& value = config.*member;
    if constexpr (kIsOptional<Field>) {
      if (value) out[key] = *value;
    } else if constexpr (std::is_same_v<V, std::vector<double>>) {
      if (!value.empty()) out[key] = value;
    } else {
      out[key] = value;
    }
  };
  d.copy = [member](const RunConfig& from, RunConfig& to) {
    to.*member = from.*member;
  };
  return d;
}

}  // namespace

bool OptionDef::Applies(Mode mode) const {
  return std::find(modes.begin(), modes.end(), mode) != modes.end();
}

bool TakesParameters(Mode mode) {
  return mode == Mode::kSpectrum || mode == Mode::kCurve ||
         mode == Mode::kEvolve || mode == Mode::kValidate;
}

const std::vector<OptionDef>& OptionTable() {
  using M = Mode;
  const M spectrum = M::kSpectrum, curve = M::kCurve, threshold = M::kThreshold,
          evolve = M::kEvolve, mass = M::kMassStudy, validate = M::kValidate;
  static const std::vector<OptionDef> kTable = {
      Def("--delta21", &RunConfig::delta21, {spectrum, curve, evolve, validate},
          "Pump-probe detuning (omega2 - omega1) / (4 omega_r), "
          "dimensionless. Sweeps along alpha_beta take it as the fixed "
          "value(s); default 0.",
          true),
      Def("--alpha-beta", &RunConfig::alpha_beta,
          {spectrum, curve, evolve, validate},
          "Coupling product alpha*beta, dimensionless. curve: comma list of "
          "fixed values, default 0.1,0.5,1,5,10; validate: default 1.",
          true),
      Def("--alpha", &RunConfig::alpha, {spectrum, evolve},
          "Pump-intensity control alpha, dimensionless. Use with --beta "
          "instead of --alpha-beta.",
          true),
      Def("--beta", &RunConfig::beta, {spectrum, evolve},
          "Density control beta, dimensionless. Use with --alpha.", true),
      Def("--eta", &RunConfig::eta, {spectrum, threshold, evolve},
          "Regime: 0 ray optics (RAO), 1 wave optics (WAO). Default 1."),
      Def("--regimes", &RunConfig::regimes, {curve, mass, validate},
          "rao, wao or both. Default both."),
      Def("--axis", &RunConfig::axis, {curve, validate},
          "Swept parameter: delta21 or alpha_beta. Default delta21."),
      Def("--from", &RunConfig::from, {curve, mass, validate},
          "Axis start, dimensionless. Default -2 (delta21) or 0.02 "
          "(alpha_beta). mass-study: delta21 in m = m0 units."),
      Def("--to", &RunConfig::to, {curve, mass, validate},
          "Axis stop, dimensionless. Default 6 (delta21) or 10 (alpha_beta)."),
      Def("--points", &RunConfig::points, {curve, mass, validate},
          "Number of axis points, >= 2. Default 801 (delta21) or 500 "
          "(alpha_beta)."),
      Def("--delta21-from", &RunConfig::delta21_from, {threshold},
          "Map delta21 start, dimensionless. Default -2."),
      Def("--delta21-to", &RunConfig::delta21_to, {threshold},
          "Map delta21 stop, dimensionless. Default 6."),
      Def("--alpha-beta-from", &RunConfig::alpha_beta_from, {threshold},
          "Map alpha*beta start, dimensionless. Default 1e-3."),
      Def("--alpha-beta-to", &RunConfig::alpha_beta_to, {threshold},
          "Map alpha*beta stop, dimensionless. Default 10."),
      Def("--resolution", &RunConfig::resolution, {threshold},
          "Grid cells per axis, >= 16. Default 256."),
      Def("--refine-tol", &RunConfig::refine_tol, {threshold},
          "Vertex bisection tolerance, dimensionless. Default 1e-8."),
      Def("--tau-end", &RunConfig::tau_end, {evolve},
          "End time in scaled units tau = 4 omega_r t. Default 100."),
      Def("--dt", &RunConfig::dt, {evolve, validate},
          "RK4 step in scaled time. Default 1e-3."),
      Def("--stride", &RunConfig::stride, {evolve},
          "Steps between output samples. Default 100."),
      Def("--seed-amplitude", &RunConfig::seed_amplitude, {evolve, validate},
          "Initial probe amplitude |A1(0)| (B = dB/dtau = 0), "
          "dimensionless. Default 1e-6."),
      Def("--max-local-error", &RunConfig::max_local_error, {evolve},
          "Step-doubling rejection threshold, relative; <= 0 disables. "
          "Default 1e-6."),
      Def("--fit-from", &RunConfig::fit_from, {evolve},
          "Growth-fit window start, scaled time. Default 30/Gamma when "
          "growing."),
      Def("--fit-to", &RunConfig::fit_to, {evolve},
          "Growth-fit window stop, scaled time. Default 60/Gamma."),
      Def("--residual-bound", &RunConfig::residual_bound, {evolve},
          "RMS residual of ln|A1| above which the fit is non-exponential. "
          "Default 1e-2."),
      Def("--alpha-beta-base", &RunConfig::alpha_beta_base, {mass},
          "alpha*beta at m = m0; ratio s runs at base*s^2. Default 5."),
      Def("--ratios", &RunConfig::ratios, {mass},
          "Comma list of mass ratios m/m0. Default 1,10,100."),
      Def("--samples", &RunConfig::samples, {validate},
          "Number of random grid points to integrate. Default 20."),
      Def("--seed", &RunConfig::seed, {validate},
          "Sampling RNG seed. Default 1."),
      Def("--tolerance", &RunConfig::tolerance, {validate},
          "Relative agreement required between fit and spectrum. "
          "Default 0.01."),
      Def("--tau-max", &RunConfig::tau_max, {validate},
          "Skip samples whose fit window ends after this scaled time. "
          "Default 5000."),
      Def("-o,--output", &RunConfig::output,
          {spectrum, curve, threshold, evolve, mass, validate},
          "Output file. Default: stdout (spectrum: summary only)."),
      Def("--format", &RunConfig::format,
          {spectrum, curve, threshold, evolve, mass, validate},
          "csv or json. Default csv."),
      Def("--timestamp", &RunConfig::timestamp,
          {spectrum, curve, threshold, evolve, mass, validate},
          "Record the UTC run time in the output metadata."),
      Def("--threads", &RunConfig::threads,
          {spectrum, curve, threshold, evolve, mass, validate},
          "Sweep worker threads; 0 uses CARL_THREADS or the machine "
          "parallelism. Output does not depend on it."),
  };
  return kTable;
}

}  // namespace carl::cli
