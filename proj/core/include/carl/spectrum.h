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

#ifndef CARL_SPECTRUM_H_
#define CARL_SPECTRUM_H_

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "carl/cubic.h"
#include "carl/params.h"

namespace carl {

// Stability taxonomy of the linearized system.
enum class StabilityCase {
  kCaseI,   // all eigenvalues imaginary, stable
  kCaseII,  // one conjugate-broken pair, exponential growth
};

std::string_view CaseName(StabilityCase c);  // "I" or "II"

struct Spectrum {
  // Case II: lambdas[0] is the growing mode (Re > 0), lambdas[1] its mirror
  // (Re < 0) and lambdas[2] is purely imaginary. Case I: purely imaginary,
  // ordered by ascending imaginary part.
  std::array<std::complex<double>, 3> lambdas{};
  StabilityCase case_tag = StabilityCase::kCaseI;
  // max(0, max Re lambda); exactly 0 in Case I.
  double gamma = 0.0;
  // Classification fell inside the discriminant tolerance band.
  bool boundary = false;
};

struct SpectrumOptions {
  CubicSolveOptions solver;
};

// The real cubic obtained from the dispersion relation
//   lambda^3 - i D lambda^2 + eta lambda - i (ab + eta D) = 0
// under lambda = i x:
//   x^3 - D x^2 - eta x + (ab + eta D) = 0.
RealCubic DispersionCubic(double delta21, double alpha_beta, double eta);

// Left side of the dispersion relation at lambda.
std::complex<double> DispersionResidual(std::complex<double> lambda,
                                        double delta21, double alpha_beta,
                                        double eta);

Spectrum EigenSpectrum(double delta21, double alpha_beta, Regime regime,
                       const SpectrumOptions& options = {});

inline Spectrum EigenSpectrum(const ScaledParams& s,
                              const SpectrumOptions& options = {}) {
  s.Validate();
  return EigenSpectrum(s.delta21, s.alpha_beta(), s.regime, options);
}

// Closed-form ray-optics growth rate,
//   (sqrt(3)/2) (ab/4)^(1/3) |(1 + sqrt(d))^(2/3) - (1 - sqrt(d))^(2/3)|,
// d = 1 - 4 D^3 / (27 ab). Returns 0 at or below threshold (d <= 0) and for
// ab <= 0. For d > 1 (negative detuning) x^(2/3) is the real cube root of
// x^2.
double GammaRaoClosedForm(double delta21, double alpha_beta);

// Threshold polynomial, positive iff the system is unstable (Case II):
//   (ab/2)^2 + ab (D/3) [eta - (D/3)^2] - eta (D^2 - 1)^2 / 27.
// This is -1/108 times the discriminant of DispersionCubic. For eta = 0 it
// reduces to ab (ab/4 - D^3/27).
double ThresholdLhs(double delta21, double alpha_beta, double eta);

struct CriticalSearchOptions {
  double abs_tol = 1e-13;
  int max_iterations = 400;
};

// Smallest ab >= 0 at which ThresholdLhs turns positive, found by bracketing
// and bisection. Empty when the system is unstable for every ab > 0.
std::optional<double> CriticalAlphaBeta(double delta21, Regime regime,
                                        const CriticalSearchOptions& opts = {});

struct DetuningScan {
  double start = -10.0;
  double stop = 20.0;
  double step = 1e-3;
  double abs_tol = 1e-10;
};

// Detunings at which ThresholdLhs changes sign inside the scan window, in
// ascending order; these are the edges of the gain band.
std::vector<double> CriticalDelta21(double alpha_beta, Regime regime,
                                    const DetuningScan& scan = {});

// Worst-case deviations from the spectrum invariants.
struct SpectrumDiagnostics {
  double max_residual = 0.0;   // |dispersion(lambda)| / max(1, |coeffs|)
  double sum_error = 0.0;      // |sum - i D| / max(1, |D|)
  double pair_sum_error = 0.0;  // |l0 l1 + l0 l2 + l1 l2 - eta|
  double product_error = 0.0;  // |prod - i (ab + eta D)| / max(1, |.|)
  double pair_asymmetry = 0.0;  // Case II: |Re l0 + Re l1|
  double case_i_max_real = 0.0;  // Case I: max |Re lambda|
  bool gamma_consistent = true;
};

SpectrumDiagnostics Diagnose(const Spectrum& spectrum, double delta21,
                             double alpha_beta, double eta);

}  // namespace carl

#endif  // CARL_SPECTRUM_H_
