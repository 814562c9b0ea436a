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

#ifndef CARL_DYNAMICS_H_
#define CARL_DYNAMICS_H_

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "carl/params.h"

namespace carl {

// Probe amplitude, bunching and its derivative at scaled time tau.
struct TrajectoryState {
  double tau = 0.0;
  std::complex<double> A1;
  std::complex<double> B;
  std::complex<double> Bdot;

  Eigen::Vector3cd AsVector() const { return {A1, B, Bdot}; }
};

inline constexpr double kDefaultSeedAmplitude = 1e-6;

// A weak probe on an unbunched sample: A1 = seed, B = dB/dtau = 0.
TrajectoryState SeededState(double seed_amplitude = kDefaultSeedAmplitude);

struct Trajectory {
  std::vector<TrajectoryState> samples;  // strictly increasing tau
  ScaledParams params;
  double dt = 0.0;
  int output_stride = 1;
  // First tau at which |B| > 1, i.e. the linear model left its physical
  // regime. Flagged, not an error.
  std::optional<double> linearity_exit_tau;
};

struct EvolveOptions {
  int output_stride = 100;
  // Step-doubling estimate of the relative local error; a larger value
  // rejects the step with IntegrationError. Non-positive disables it.
  double max_local_error = 1e-6;
};

// Classic fixed-step RK4 on
//   dA1/dtau = i (D A1 + beta B),  dB/dtau = Bdot,
//   dBdot/dtau = -eta B + alpha A1.
// The last step is shortened to land on tau_end. Samples are taken every
// output_stride steps plus the initial and final states.
Trajectory Evolve(const ScaledParams& params, const TrajectoryState& init,
                  double tau_end, double dt, const EvolveOptions& options = {});

// M in d/dtau (A1, B, Bdot) = M (A1, B, Bdot).
Eigen::Matrix3cd SystemMatrix(const ScaledParams& params);

struct Propagator {
  Eigen::Matrix3cd matrix;
  bool used_series = false;  // scaling-and-squaring fallback taken
};

struct PropagatorOptions {
  // Relative eigenvalue separation below which the eigen-decomposition is
  // abandoned for the series.
  double degeneracy_tol = 1e-6;
};

// exp(M tau) from the spectrum-module eigenvalues and null vectors of
// M - lambda I.
Propagator ExactPropagator(const ScaledParams& params, double tau,
                           const PropagatorOptions& options = {});

// exp(A) by scaling and squaring a truncated Taylor series.
Eigen::Matrix3cd SeriesExponential(const Eigen::Matrix3cd& a);

struct GrowthFit {
  double rate = 0.0;       // slope of ln|A1| against tau
  double intercept = 0.0;
  double rms_residual = 0.0;
  int samples = 0;
  // rms_residual is within the configured bound.
  bool exponential = false;
};

struct FitOptions {
  double residual_bound = 1e-2;
};

// Least-squares fit of ln|A1(tau)| over samples with tau in [from, to].
GrowthFit FitGrowthRate(const Trajectory& trajectory, double from, double to,
                        const FitOptions& options = {});

}  // namespace carl

#endif  // CARL_DYNAMICS_H_
