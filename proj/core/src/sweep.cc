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

#include "carl/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "carl/dynamics.h"
#include "carl/errors.h"

namespace carl {

std::string_view AxisName(SweepAxis axis) {
  return axis == SweepAxis::kDelta21 ? "delta21" : "alpha_beta";
}

SweepAxis ParseAxis(std::string_view name) {
  if (name == "delta21") return SweepAxis::kDelta21;
  if (name == "alpha_beta" || name == "alpha-beta") return SweepAxis::kAlphaBeta;
  throw InvalidInputError("unknown sweep axis '" + std::string(name) +
                          "' (expected delta21 or alpha_beta)");
}

void SweepSpec::Validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw InvalidInputError("sweep range requires finite start < stop");
  }
  if (num_points < 2) throw InvalidInputError("sweep needs at least 2 points");
  if (regimes.empty()) throw InvalidInputError("sweep needs at least one regime");
  if (axis == SweepAxis::kAlphaBeta && start < 0.0) {
    throw InvalidInputError("alpha_beta axis must be non-negative");
  }
  if (!std::isfinite(delta21)) throw InvalidInputError("delta21 must be finite");
  if (!std::isfinite(alpha_beta) || alpha_beta < 0.0) {
    throw InvalidInputError("alpha_beta must be finite and non-negative");
  }
}

double SweepSpec::AxisValue(int index) const {
  if (index == num_points - 1) return stop;
  return start + (stop - start) * static_cast<double>(index) /
                     static_cast<double>(num_points - 1);
}

ScaledParams SweepSpec::PointParams(int index, Regime regime) const {
  const double value = AxisValue(index);
  if (axis == SweepAxis::kDelta21) {
    return ScaledParams::FromProduct(value, alpha_beta, regime);
  }
  return ScaledParams::FromProduct(delta21, value, regime);
}

void ParallelFor(int n, const ParallelOptions& options,
                 const std::function<void(int)>& body) {
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(n, 1));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

SweepResult GainCurve(const SweepSpec& spec, const ParallelOptions& parallel) {
  spec.Validate();
  SweepResult result;
  result.spec = spec;
  const int per_point = static_cast<int>(spec.regimes.size());
  result.records.resize(static_cast<size_t>(spec.num_points) * per_point);
  ParallelFor(spec.num_points, parallel, [&](int i) {
    for (int r = 0; r < per_point; ++r) {
      const Regime regime = spec.regimes[r];
      const Spectrum s = EigenSpectrum(spec.PointParams(i, regime));
      SweepRecord& rec = result.records[static_cast<size_t>(i) * per_point + r];
      rec.axis_value = spec.AxisValue(i);
      rec.regime = regime;
      rec.gamma = s.gamma;
      rec.case_tag = s.case_tag;
      rec.boundary = s.boundary;
      rec.lambdas = s.lambdas;
    }
  });
  return result;
}

std::vector<SweepResult> MassStudy(double alpha_beta_base,
                                   const std::vector<double>& mass_ratios,
                                   const SweepSpec& axis,
                                   const ParallelOptions& parallel) {
  if (axis.axis != SweepAxis::kDelta21) {
    throw InvalidInputError("mass study sweeps the delta21 axis");
  }
  if (!(alpha_beta_base > 0.0) || !std::isfinite(alpha_beta_base)) {
    throw InvalidInputError("alpha_beta base must be finite and positive");
  }
  std::vector<SweepResult> out;
  out.reserve(mass_ratios.size());
  for (const double s : mass_ratios) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw InvalidInputError("mass ratios must be finite and positive");
    }
    SweepSpec scaled = axis;
    scaled.start = axis.start * s;
    scaled.stop = axis.stop * s;
    scaled.alpha_beta = alpha_beta_base * s * s;
    SweepResult r = GainCurve(scaled, parallel);
    r.spec = axis;
    r.spec.alpha_beta = scaled.alpha_beta;
    r.mass_ratio = s;
    const int per_point = static_cast<int>(axis.regimes.size());
    for (size_t k = 0; k < r.records.size(); ++k) {
      SweepRecord& rec = r.records[k];
      rec.axis_value = axis.AxisValue(static_cast<int>(k / per_point));
      rec.gamma /= s;
      for (auto& l : rec.lambdas) l /= s;
    }
    out.push_back(std::move(r));
  }
  return out;
}

double RegimeGap(const SweepResult& result) {
  std::map<double, std::pair<std::optional<double>, std::optional<double>>>
      by_axis;
  double max_rao = 0.0;
  for (const SweepRecord& rec : result.records) {
    auto& slot = by_axis[rec.axis_value];
    if (rec.regime == Regime::kRayOptics) {
      slot.first = rec.gamma;
      max_rao = std::max(max_rao, rec.gamma);
    } else {
      slot.second = rec.gamma;
    }
  }
  if (!(max_rao > 0.0)) {
    throw InvalidInputError("regime gap needs a positive RAO growth rate");
  }
  double gap = 0.0;
  for (const auto& [axis_value, pair] : by_axis) {
    if (!pair.first || !pair.second) {
      throw InvalidInputError("regime gap needs both RAO and WAO records");
    }
    gap = std::max(gap, std::abs(*pair.second - *pair.first));
  }
  return gap / max_rao;
}

// -- Threshold map ---------------------------------------------------------

void ThresholdMapSpec::Validate() const {
  if (!(delta21_start < delta21_stop) || !(alpha_beta_start < alpha_beta_stop) ||
      !std::isfinite(delta21_start) || !std::isfinite(delta21_stop) ||
      !std::isfinite(alpha_beta_start) || !std::isfinite(alpha_beta_stop)) {
    throw InvalidInputError("threshold map ranges require finite start < stop");
  }
  if (resolution < 16) {
    throw InvalidInputError("threshold map resolution must be at least 16");
  }
  if (!(refine_tol > 0.0)) {
    throw InvalidInputError("threshold map refine tolerance must be positive");
  }
}

namespace {

class ContourGrid {
 public:
  explicit ContourGrid(const ThresholdMapSpec& spec)
      : spec_(spec), n_(spec.resolution), eta_(EtaOf(spec.regime)) {
    values_.resize(static_cast<size_t>(n_ + 1) * (n_ + 1));
    for (int j = 0; j <= n_; ++j) {
      for (int i = 0; i <= n_; ++i) {
        values_[Node(i, j)] = Lhs(X(i), Y(j));
      }
    }
  }

  double X(int i) const {
    return i == n_ ? spec_.delta21_stop
                   : spec_.delta21_start +
                         (spec_.delta21_stop - spec_.delta21_start) * i / n_;
  }
  double Y(int j) const {
    return j == n_ ? spec_.alpha_beta_stop
                   : spec_.alpha_beta_start +
                         (spec_.alpha_beta_stop - spec_.alpha_beta_start) * j /
                             n_;
  }
  bool Inside(int i, int j) const { return values_[Node(i, j)] > 0.0; }
  double Lhs(double x, double y) const { return ThresholdLhs(x, y, eta_); }
  int n() const { return n_; }

  // Edge ids: horizontal (i, j)-(i+1, j) first, then vertical
  // (i, j)-(i, j+1).
  int HorizontalEdge(int i, int j) const { return j * n_ + i; }
  int VerticalEdge(int i, int j) const {
    return n_ * (n_ + 1) + i * n_ + j;
  }

  std::pair<double, double> Crossing(int edge) const {
    const int horizontal_count = n_ * (n_ + 1);
    double x0, y0, x1, y1;
    if (edge < horizontal_count) {
      const int j = edge / n_;
      const int i = edge % n_;
      x0 = X(i), y0 = Y(j), x1 = X(i + 1), y1 = Y(j);
    } else {
      const int e = edge - horizontal_count;
      const int i = e / n_;
      const int j = e % n_;
      x0 = X(i), y0 = Y(j), x1 = X(i), y1 = Y(j + 1);
    }
    const bool inside0 = Lhs(x0, y0) > 0.0;
    for (int it = 0; it < 200; ++it) {
      if (std::max(std::abs(x1 - x0), std::abs(y1 - y0)) <= spec_.refine_tol) {
        break;
      }
      const double xm = 0.5 * (x0 + x1);
      const double ym = 0.5 * (y0 + y1);
      if ((Lhs(xm, ym) > 0.0) == inside0) {
        x0 = xm, y0 = ym;
      } else {
        x1 = xm, y1 = ym;
      }
    }
    return {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
  }

 private:
  size_t Node(int i, int j) const {
    return static_cast<size_t>(j) * (n_ + 1) + i;
  }

  ThresholdMapSpec spec_;
  int n_;
  double eta_;
  std::vector<double> values_;
};

}  // namespace

std::vector<Polyline> ThresholdMap(const ThresholdMapSpec& spec) {
  spec.Validate();
  const ContourGrid grid(spec);
  const int n = grid.n();

  // Segment adjacency keyed by edge id; each edge touches at most two cells.
  std::map<int, std::vector<int>> links;
  auto connect = [&](int a, int b) {
    links[a].push_back(b);
    links[b].push_back(a);
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool bl = grid.Inside(i, j);
      const bool br = grid.Inside(i + 1, j);
      const bool tr = grid.Inside(i + 1, j + 1);
      const bool tl = grid.Inside(i, j + 1);
      const int bottom = grid.HorizontalEdge(i, j);
      const int top = grid.HorizontalEdge(i, j + 1);
      const int left = grid.VerticalEdge(i, j);
      const int right = grid.VerticalEdge(i + 1, j);
      std::vector<int> cut;
      if (bl != br) cut.push_back(bottom);
      if (br != tr) cut.push_back(right);
      if (tr != tl) cut.push_back(top);
      if (tl != bl) cut.push_back(left);
      if (cut.size() == 2) {
        connect(cut[0], cut[1]);
      } else if (cut.size() == 4) {
        // Saddle: the center value decides which diagonal pair is joined.
        const bool center = grid.Lhs(0.5 * (grid.X(i) + grid.X(i + 1)),
                                     0.5 * (grid.Y(j) + grid.Y(j + 1))) > 0.0;
        if (center == bl) {
          connect(bottom, right);
          connect(top, left);
        } else {
          connect(left, bottom);
          connect(right, top);
        }
      }
    }
  }

  std::map<int, bool> visited;
  std::vector<Polyline> out;
  auto walk = [&](int start) {
    Polyline line;
    line.branch_id = static_cast<int>(out.size());
    int prev = -1;
    int cur = start;
    while (true) {
      visited[cur] = true;
      line.points.push_back(grid.Crossing(cur));
      int next = -1;
      for (int candidate : links[cur]) {
        if (candidate != prev && !visited[candidate]) {
          next = candidate;
          break;
        }
      }
      if (next < 0) {
        // Close cycles back onto their first vertex.
        for (int candidate : links[cur]) {
          if (candidate == start && candidate != prev && line.points.size() > 2) {
            line.points.push_back(line.points.front());
            break;
          }
        }
        break;
      }
      prev = cur;
      cur = next;
    }
    if (line.points.front().first > line.points.back().first) {
      std::reverse(line.points.begin(), line.points.end());
    }
    out.push_back(std::move(line));
  };
  for (const auto& [edge, adjacent] : links) {
    if (adjacent.size() == 1 && !visited[edge]) walk(edge);
  }
  for (const auto& [edge, adjacent] : links) {
    if (!visited[edge]) walk(edge);
  }
  return out;
}

// -- Dynamics cross-check --------------------------------------------------

std::string_view StatusName(ValidationStatus status) {
  switch (status) {
    case ValidationStatus::kAgree:
      return "agree";
    case ValidationStatus::kMismatch:
      return "mismatch";
    case ValidationStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

ValidationReport ValidateSweep(const SweepSpec& spec, int n_samples,
                               const ValidateOptions& options,
                               const ParallelOptions& parallel) {
  spec.Validate();
  if (n_samples < 1) throw InvalidInputError("n_samples must be at least 1");

  ValidationReport report;
  report.samples.resize(static_cast<size_t>(n_samples));
  std::mt19937_64 rng(options.seed);
  const auto regimes = static_cast<std::uint64_t>(spec.regimes.size());
  for (ValidationSample& sample : report.samples) {
    sample.grid_index =
        static_cast<int>(rng() % static_cast<std::uint64_t>(spec.num_points));
    sample.regime = spec.regimes[rng() % regimes];
    sample.axis_value = spec.AxisValue(sample.grid_index);
  }

  ParallelFor(n_samples, parallel, [&](int k) {
    ValidationSample& sample = report.samples[static_cast<size_t>(k)];
    const ScaledParams params = spec.PointParams(sample.grid_index, sample.regime);
    const Spectrum spectrum = EigenSpectrum(params);
    sample.gamma_spectrum = spectrum.gamma;
    sample.case_tag = spectrum.case_tag;
    if (spectrum.boundary) {
      sample.status = ValidationStatus::kSkipped;
      sample.note = "boundary";
      return;
    }
    const bool growing = spectrum.case_tag == StabilityCase::kCaseII;
    const double from = growing ? 30.0 / spectrum.gamma : 30.0;
    const double to = growing ? 60.0 / spectrum.gamma : 60.0;
    if (to > options.tau_max) {
      sample.status = ValidationStatus::kSkipped;
      sample.note = "slow-growth";
      return;
    }
    EvolveOptions evolve;
    evolve.output_stride = std::max(
        1, static_cast<int>((to - from) / options.dt / options.samples_per_window));
    try {
      const Trajectory traj = Evolve(params, SeededState(options.seed_amplitude),
                                     to, options.dt, evolve);
      const GrowthFit fit = FitGrowthRate(traj, from, to);
      sample.gamma_fit = fit.rate;
      sample.fit_residual = fit.rms_residual;
      sample.fit_exponential = fit.exponential;
      bool ok;
      if (growing) {
        ok = fit.exponential &&
             std::abs(fit.rate - spectrum.gamma) <=
                 options.relative_tolerance * spectrum.gamma;
      } else {
        ok = !fit.exponential || std::abs(fit.rate) < options.stable_rate_floor;
      }
      sample.status = ok ? ValidationStatus::kAgree : ValidationStatus::kMismatch;
      if (!ok) {
        sample.note = growing ? "fitted rate differs by more than tolerance"
                              : "exponential growth below threshold";
      }
    } catch (const IntegrationError& e) {
      sample.status = ValidationStatus::kMismatch;
      sample.note = std::string("integration-error: ") + e.what();
    }
  });

  for (const ValidationSample& s : report.samples) {
    switch (s.status) {
      case ValidationStatus::kAgree:
        ++report.agreed;
        break;
      case ValidationStatus::kMismatch:
        ++report.mismatched;
        break;
      case ValidationStatus::kSkipped:
        ++report.skipped;
        break;
    }
  }
  return report;
}

}  // namespace carl
