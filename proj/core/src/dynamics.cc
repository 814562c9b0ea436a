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

#include "carl/dynamics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "carl/errors.h"
#include "carl/spectrum.h"

namespace carl {
namespace {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
constexpr Complex kI(0.0, 1.0);

class CoupledModes {
 public:
  explicit CoupledModes(const ScaledParams& p)
      : delta_(p.delta21), alpha_(p.alpha), beta_(p.beta), eta_(p.eta()) {}

  Vec3 Derivative(const Vec3& y) const {
    return {kI * (delta_ * y(0) + beta_ * y(1)), y(2),
            -eta_ * y(1) + alpha_ * y(0)};
  }

  Vec3 Step(const Vec3& y, double h) const {
    const Vec3 k1 = Derivative(y);
    const Vec3 k2 = Derivative(y + (0.5 * h) * k1);
    const Vec3 k3 = Derivative(y + (0.5 * h) * k2);
    const Vec3 k4 = Derivative(y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

 private:
  double delta_;
  double alpha_;
  double beta_;
  double eta_;
};

TrajectoryState ToState(double tau, const Vec3& y) {
  return {tau, y(0), y(1), y(2)};
}

double MaxAbs(const Vec3& v) {
  return std::max({std::abs(v(0)), std::abs(v(1)), std::abs(v(2))});
}

// Bilinear cross product: rows r0, r1 of a rank-2 matrix are both
// orthogonal (without conjugation) to the result.
Vec3 Cross(const Eigen::RowVector3cd& a, const Eigen::RowVector3cd& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
          a(0) * b(1) - a(1) * b(0)};
}

Vec3 NullVector(const Eigen::Matrix3cd& m) {
  const Vec3 candidates[] = {Cross(m.row(0), m.row(1)),
                             Cross(m.row(0), m.row(2)),
                             Cross(m.row(1), m.row(2))};
  const Vec3* best = &candidates[0];
  for (const Vec3& c : candidates) {
    if (c.norm() > best->norm()) best = &c;
  }
  return best->normalized();
}

}  // namespace

TrajectoryState SeededState(double seed_amplitude) {
  return {0.0, Complex(seed_amplitude, 0.0), Complex(0.0), Complex(0.0)};
}

Trajectory Evolve(const ScaledParams& params, const TrajectoryState& init,
                  double tau_end, double dt, const EvolveOptions& options) {
  params.Validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidInputError("dt must be finite and positive");
  }
  if (!(tau_end > init.tau) || !std::isfinite(tau_end)) {
    throw InvalidInputError("tau_end must exceed the initial tau");
  }
  if (options.output_stride < 1) {
    throw InvalidInputError("output stride must be at least 1");
  }

  const CoupledModes system(params);
  Trajectory out;
  out.params = params;
  out.dt = dt;
  out.output_stride = options.output_stride;

  const double span = tau_end - init.tau;
  // Tolerate a final step that is a rounding error shorter than dt.
  const auto steps = static_cast<long long>(std::ceil(span / dt - 1e-9));
  out.samples.reserve(static_cast<size_t>(steps / options.output_stride + 2));

  Vec3 y = init.AsVector();
  out.samples.push_back(ToState(init.tau, y));
  if (std::abs(y(1)) > 1.0) out.linearity_exit_tau = init.tau;

  for (long long k = 1; k <= steps; ++k) {
    const double tau_prev = init.tau + static_cast<double>(k - 1) * dt;
    const double tau = k == steps ? tau_end : init.tau + static_cast<double>(k) * dt;
    const double h = tau - tau_prev;
    const Vec3 full = system.Step(y, h);
    if (options.max_local_error > 0.0) {
      const Vec3 half = system.Step(system.Step(y, 0.5 * h), 0.5 * h);
      const double scale = MaxAbs(half);
      const double error = scale > 0.0 ? MaxAbs(half - full) / scale : 0.0;
      if (!(error <= options.max_local_error)) {
        throw IntegrationError(
            "RK4 step rejected at tau = " + std::to_string(tau_prev) +
                ": local error " + std::to_string(error) + " exceeds " +
                std::to_string(options.max_local_error) + "; reduce dt",
            tau_prev, error);
      }
    }
    y = full;
    if (!std::isfinite(y(0).real()) || !std::isfinite(y(0).imag()) ||
        !std::isfinite(y(1).real()) || !std::isfinite(y(1).imag()) ||
        !std::isfinite(y(2).real()) || !std::isfinite(y(2).imag())) {
      throw IntegrationError("state became non-finite at tau = " +
                                 std::to_string(tau),
                             tau, INFINITY);
    }
    if (!out.linearity_exit_tau && std::abs(y(1)) > 1.0) {
      out.linearity_exit_tau = tau;
    }
    if (k % options.output_stride == 0 || k == steps) {
      out.samples.push_back(ToState(tau, y));
    }
  }
  return out;
}

Eigen::Matrix3cd SystemMatrix(const ScaledParams& params) {
  Eigen::Matrix3cd m;
  m << kI * params.delta21, kI * params.beta, 0.0,
       0.0, 0.0, 1.0,
       params.alpha, -params.eta(), 0.0;
  return m;
}

Eigen::Matrix3cd SeriesExponential(const Eigen::Matrix3cd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Eigen::Matrix3cd scaled = a / std::ldexp(1.0, squarings);
  Eigen::Matrix3cd result = Eigen::Matrix3cd::Identity();
  Eigen::Matrix3cd term = Eigen::Matrix3cd::Identity();
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Propagator ExactPropagator(const ScaledParams& params, double tau,
                           const PropagatorOptions& options) {
  params.Validate();
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InvalidInputError("tau must be finite and non-negative");
  }
  const Eigen::Matrix3cd m = SystemMatrix(params);
  if (tau == 0.0) return {Eigen::Matrix3cd::Identity(), false};

  const Spectrum spectrum = EigenSpectrum(params);
  double scale = 1.0;
  for (const Complex& l : spectrum.lambdas) scale = std::max(scale, std::abs(l));
  double min_gap = INFINITY;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      min_gap = std::min(min_gap,
                         std::abs(spectrum.lambdas[i] - spectrum.lambdas[j]));
    }
  }
  if (min_gap < options.degeneracy_tol * scale) {
    return {SeriesExponential(m * tau), true};
  }

  Eigen::Matrix3cd vectors;
  Eigen::Vector3cd exponentials;
  for (int k = 0; k < 3; ++k) {
    const Complex l = spectrum.lambdas[k];
    vectors.col(k) = NullVector(m - l * Eigen::Matrix3cd::Identity());
    exponentials(k) = std::exp(l * tau);
  }
  const Eigen::FullPivLU<Eigen::Matrix3cd> lu(vectors);
  if (lu.rcond() < options.degeneracy_tol) {
    return {SeriesExponential(m * tau), true};
  }
  return {vectors * exponentials.asDiagonal() * lu.inverse(), false};
}

GrowthFit FitGrowthRate(const Trajectory& trajectory, double from, double to,
                        const FitOptions& options) {
  if (trajectory.samples.empty()) {
    throw InvalidInputError("empty trajectory");
  }
  if (!(to > from) || from < trajectory.samples.front().tau ||
      to > trajectory.samples.back().tau) {
    throw InvalidInputError("fit window [" + std::to_string(from) + ", " +
                            std::to_string(to) +
                            "] is not inside the trajectory");
  }
  std::vector<double> taus;
  std::vector<double> logs;
  for (const TrajectoryState& s : trajectory.samples) {
    if (s.tau < from || s.tau > to) continue;
    const double amplitude = std::abs(s.A1);
    if (!(amplitude > 0.0)) {
      throw InvalidInputError("|A1| vanishes inside the fit window");
    }
    taus.push_back(s.tau);
    logs.push_back(std::log(amplitude));
  }
  const auto n = static_cast<int>(taus.size());
  if (n < 3) {
    throw InvalidInputError("fit window holds fewer than 3 samples");
  }
  double mean_t = 0.0;
  double mean_y = 0.0;
  for (int i = 0; i < n; ++i) {
    mean_t += taus[i];
    mean_y += logs[i];
  }
  mean_t /= n;
  mean_y /= n;
  double stt = 0.0;
  double sty = 0.0;
  for (int i = 0; i < n; ++i) {
    stt += (taus[i] - mean_t) * (taus[i] - mean_t);
    sty += (taus[i] - mean_t) * (logs[i] - mean_y);
  }
  GrowthFit fit;
  fit.samples = n;
  fit.rate = sty / stt;
  fit.intercept = mean_y - fit.rate * mean_t;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = logs[i] - (fit.intercept + fit.rate * taus[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  fit.exponential = fit.rms_residual <= options.residual_bound;
  return fit;
}

}  // namespace carl
