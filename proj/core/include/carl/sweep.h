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

#ifndef CARL_SWEEP_H_
#define CARL_SWEEP_H_

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "carl/params.h"
#include "carl/spectrum.h"

namespace carl {

enum class SweepAxis { kDelta21, kAlphaBeta };

std::string_view AxisName(SweepAxis axis);  // "delta21" / "alpha_beta"
SweepAxis ParseAxis(std::string_view name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kDelta21;
  double start = -2.0;
  double stop = 6.0;
  int num_points = 801;
  // Fixed values; the one named by `axis` is ignored.
  double delta21 = 0.0;
  double alpha_beta = 1.0;
  std::vector<Regime> regimes = {Regime::kRayOptics, Regime::kWaveOptics};

  void Validate() const;
  // Linear spacing; the last point is exactly `stop`.
  double AxisValue(int index) const;
  ScaledParams PointParams(int index, Regime regime) const;
};

struct SweepRecord {
  double axis_value = 0.0;
  Regime regime = Regime::kRayOptics;
  double gamma = 0.0;
  StabilityCase case_tag = StabilityCase::kCaseI;
  bool boundary = false;
  std::array<std::complex<double>, 3> lambdas{};
};

struct SweepResult {
  SweepSpec spec;
  // Axis ascending; for each axis point the regimes in spec order.
  std::vector<SweepRecord> records;
  // Set by MassStudy: records are then in m0 units.
  std::optional<double> mass_ratio;
};

struct ParallelOptions {
  // 0 selects std::thread::hardware_concurrency().
  int threads = 0;
};

// Runs body(i) for i in [0, n) on up to `threads` workers. Callers write
// results by index, so output order never depends on scheduling.
void ParallelFor(int n, const ParallelOptions& options,
                 const std::function<void(int)>& body);

SweepResult GainCurve(const SweepSpec& spec,
                      const ParallelOptions& parallel = {});

// For each mass ratio s the scaled system runs at ab = base s^2 and
// delta21 = s D0, where D0 is the detuning in m0 units. Gamma and lambda
// are reported in m0 units by dividing by s. `axis` supplies the D0 grid
// (its axis must be delta21) and the regimes.
std::vector<SweepResult> MassStudy(double alpha_beta_base,
                                   const std::vector<double>& mass_ratios,
                                   const SweepSpec& axis,
                                   const ParallelOptions& parallel = {});

// max over the axis of |Gamma_WAO - Gamma_RAO| / max Gamma_RAO. Requires
// both regimes in the result.
double RegimeGap(const SweepResult& result);

struct ThresholdMapSpec {
  double delta21_start = -2.0;
  double delta21_stop = 6.0;
  double alpha_beta_start = 1e-3;
  double alpha_beta_stop = 10.0;
  int resolution = 256;  // cells per axis
  Regime regime = Regime::kWaveOptics;
  double refine_tol = 1e-8;

  void Validate() const;
};

struct Polyline {
  int branch_id = 0;
  std::vector<std::pair<double, double>> points;  // (delta21, alpha_beta)
};

// Marching squares on the sign of ThresholdLhs, every vertex refined by
// bisection along its cell edge. Open branches are oriented with ascending
// delta21 at the ends.
std::vector<Polyline> ThresholdMap(const ThresholdMapSpec& spec);

struct ValidateOptions {
  std::uint64_t seed = 1;
  double dt = 1e-3;
  double seed_amplitude = 1e-6;
  double relative_tolerance = 0.01;
  // Samples whose horizon 60/Gamma exceeds this are skipped.
  double tau_max = 5000.0;
  // Below threshold a fit with |rate| under this is also accepted as
  // "no growth".
  double stable_rate_floor = 1e-3;
  int samples_per_window = 300;
};

enum class ValidationStatus { kAgree, kMismatch, kSkipped };

std::string_view StatusName(ValidationStatus status);

struct ValidationSample {
  int grid_index = 0;
  double axis_value = 0.0;
  Regime regime = Regime::kRayOptics;
  double gamma_spectrum = 0.0;
  StabilityCase case_tag = StabilityCase::kCaseI;
  std::optional<double> gamma_fit;
  double fit_residual = 0.0;
  bool fit_exponential = false;
  ValidationStatus status = ValidationStatus::kSkipped;
  std::string note;  // skip reason or mismatch detail
};

struct ValidationReport {
  std::vector<ValidationSample> samples;
  int agreed = 0;
  int mismatched = 0;
  int skipped = 0;
};

// Integrates the coupled-mode equations at n_samples random grid points
// and compares the fitted growth rate with the spectrum.
ValidationReport ValidateSweep(const SweepSpec& spec, int n_samples,
                               const ValidateOptions& options = {},
                               const ParallelOptions& parallel = {});

}  // namespace carl

#endif  // CARL_SWEEP_H_
