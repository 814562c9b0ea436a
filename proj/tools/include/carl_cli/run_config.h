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

#ifndef CARL_CLI_RUN_CONFIG_H_
#define CARL_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carl/errors.h"
#include "carl/params.h"

namespace carl::cli {

// Bad flags, bad config files, unwritable outputs. Maps to exit status 1.
class ConfigError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

enum class Mode { kSpectrum, kCurve, kThreshold, kEvolve, kMassStudy, kValidate };

std::string_view ModeName(Mode mode);
Mode ParseMode(std::string_view name);  // throws ConfigError
const std::vector<Mode>& AllModes();

// One run of the tool. Flags and JSON config files fill the same struct;
// see OptionTable() for the mapping. Scaled quantities are dimensionless:
// detunings in units of 4 omega_r, time tau = 4 omega_r t.
struct RunConfig {
  Mode mode = Mode::kSpectrum;

  // Scaled parameter block. Lists are used by sweeps; single-point modes
  // take exactly one value.
  std::vector<double> delta21;
  std::vector<double> alpha_beta;
  std::optional<double> alpha;
  std::optional<double> beta;
  // SI parameter block, exclusive with the scaled one.
  std::optional<PhysicalParams> physical;
  int eta = 1;
  std::string regimes = "both";

  // Sweep grid; unset values take axis-dependent defaults.
  std::string axis = "delta21";
  std::optional<double> from;
  std::optional<double> to;
  std::optional<int> points;

  // Threshold map.
  double delta21_from = -2.0;
  double delta21_to = 6.0;
  double alpha_beta_from = 1e-3;
  double alpha_beta_to = 10.0;
  int resolution = 256;
  double refine_tol = 1e-8;

  // Integration, shared by evolve and validate.
  double tau_end = 100.0;
  double dt = 1e-3;
  int stride = 100;
  double seed_amplitude = 1e-6;
  double max_local_error = 1e-6;
  std::optional<double> fit_from;
  std::optional<double> fit_to;
  double residual_bound = 1e-2;

  // Mass study.
  double alpha_beta_base = 5.0;
  std::vector<double> ratios = {1.0, 10.0, 100.0};

  // Validate.
  int samples = 20;
  std::uint64_t seed = 1;
  double tolerance = 0.01;
  double tau_max = 5000.0;

  // Output. An empty path means stdout, except for spectrum where it means
  // "summary only".
  std::string output;
  std::string format = "csv";
  bool timestamp = false;
  int threads = 0;  // 0: CARL_THREADS, else machine parallelism
};

// JSON config -> RunConfig. `mode_hint` fills a missing "mode" key and must
// agree with it when both are present. Throws ConfigError naming the key.
RunConfig ConfigFromJson(std::string_view text,
                         std::optional<Mode> mode_hint = std::nullopt);
RunConfig LoadConfigFile(const std::string& path,
                         std::optional<Mode> mode_hint = std::nullopt);

// Full config for the mode, defaults included; ConfigFromJson inverts it.
std::string ConfigToJson(const RunConfig& config);

// SI block keys: mu, V, m, N, k0, omega0, omega1, omega2, a2_0.
PhysicalParams PhysicalFromJson(std::string_view text);
PhysicalParams LoadPhysicalFile(const std::string& path);

// Cross-field checks: block exclusivity, list sizes, enum strings.
void CheckConfig(const RunConfig& config);

}  // namespace carl::cli

#endif  // CARL_CLI_RUN_CONFIG_H_
