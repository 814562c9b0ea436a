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

#include "carl_cli/runner.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ctime>

#include "carl/dynamics.h"
#include "carl/io.h"
#include "carl/spectrum.h"

namespace carl::cli {
namespace {

std::string Short(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.5g", x);
  return buffer;
}

std::vector<Regime> ParseRegimes(const std::string& name) {
  if (name == "rao") return {Regime::kRayOptics};
  if (name == "wao") return {Regime::kWaveOptics};
  return {Regime::kRayOptics, Regime::kWaveOptics};
}

OutputMeta MakeMeta(const RunConfig& config) {
  OutputMeta meta;
  if (config.timestamp) {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    meta.timestamp = buffer;
  }
  meta.extra.emplace_back("mode", std::string(ModeName(config.mode)));
  return meta;
}

bool Json(const RunConfig& config) { return config.format == "json"; }

// Grid along config.axis with axis-dependent defaults.
SweepSpec BaseSpec(const RunConfig& config, SweepAxis axis) {
  SweepSpec spec;
  spec.axis = axis;
  const bool along_delta = axis == SweepAxis::kDelta21;
  spec.start = config.from.value_or(along_delta ? -2.0 : 0.02);
  spec.stop = config.to.value_or(along_delta ? 6.0 : 10.0);
  spec.num_points = config.points.value_or(along_delta ? 801 : 500);
  spec.regimes = ParseRegimes(config.regimes);
  return spec;
}

// Fixed values for the parameter that is not swept.
std::vector<double> FixedValues(const RunConfig& config, SweepAxis axis,
                                std::vector<double> fallback) {
  if (config.physical) {
    const ScaledParams p = ToScaled(*config.physical, Regime::kRayOptics);
    return {axis == SweepAxis::kDelta21 ? p.alpha_beta() : p.delta21};
  }
  const std::vector<double>& given =
      axis == SweepAxis::kDelta21 ? config.alpha_beta : config.delta21;
  return given.empty() ? fallback : given;
}

SweepSpec WithFixed(SweepSpec spec, double value) {
  if (spec.axis == SweepAxis::kDelta21) {
    spec.alpha_beta = value;
  } else {
    spec.delta21 = value;
  }
  return spec;
}

std::string SpectrumSummary(const Spectrum& s) {
  std::string out = "Γ = " + Short(s.gamma) + ", Case " +
                    std::string(CaseName(s.case_tag));
  if (s.boundary) out += " (threshold boundary)";
  return out;
}

std::string RunSpectrum(const RunConfig& config, std::ostream& data) {
  const ScaledParams p = ResolvePoint(config);
  const Spectrum s = EigenSpectrum(p);
  if (!config.output.empty()) {
    if (Json(config)) {
      WriteSpectrumJson(data, p, s, MakeMeta(config));
    } else {
      WriteSpectrumCsv(data, p, s, MakeMeta(config));
    }
  }
  return SpectrumSummary(s);
}

std::string RunCurve(const RunConfig& config, std::ostream& data) {
  const SweepAxis axis = ParseAxis(config.axis);
  const SweepSpec base = BaseSpec(config, axis);
  const std::vector<double> fixed =
      FixedValues(config, axis,
                  axis == SweepAxis::kDelta21
                      ? std::vector<double>{0.1, 0.5, 1.0, 5.0, 10.0}
                      : std::vector<double>{0.0});
  const ParallelOptions parallel = ResolveParallel(config);
  std::vector<SweepResult> results;
  size_t records = 0;
  const SweepRecord* best = nullptr;
  double best_fixed = 0.0;
  for (double value : fixed) {
    results.push_back(GainCurve(WithFixed(base, value), parallel));
  }
  for (size_t b = 0; b < results.size(); ++b) {
    records += results[b].records.size();
    for (const SweepRecord& rec : results[b].records) {
      if (!best || rec.gamma > best->gamma) {
        best = &rec;
        best_fixed = fixed[b];
      }
    }
  }
  if (Json(config)) {
    WriteSweepJson(data, results, MakeMeta(config));
  } else {
    WriteSweepCsv(data, results, MakeMeta(config));
  }
  const bool along_delta = axis == SweepAxis::kDelta21;
  return std::to_string(records) + " records in " +
         std::to_string(results.size()) + " block(s); max Γ = " +
         Short(best->gamma) + " at " + (along_delta ? "Δ21" : "αβ") + " = " +
         Short(best->axis_value) + " (" +
         std::string(RegimeName(best->regime)) + ", " +
         (along_delta ? "αβ" : "Δ21") + " = " + Short(best_fixed) + ")";
}

std::string RunThreshold(const RunConfig& config, std::ostream& data) {
  ThresholdMapSpec spec;
  spec.delta21_start = config.delta21_from;
  spec.delta21_stop = config.delta21_to;
  spec.alpha_beta_start = config.alpha_beta_from;
  spec.alpha_beta_stop = config.alpha_beta_to;
  spec.resolution = config.resolution;
  spec.refine_tol = config.refine_tol;
  spec.regime = RegimeFromEta(config.eta);
  const std::vector<Polyline> lines = ThresholdMap(spec);
  if (Json(config)) {
    WritePolylinesJson(data, lines, spec, MakeMeta(config));
  } else {
    WritePolylinesCsv(data, lines, spec, MakeMeta(config));
  }
  size_t vertices = 0;
  for (const Polyline& l : lines) vertices += l.points.size();
  return std::to_string(lines.size()) + " threshold branch(es), " +
         std::to_string(vertices) + " vertices (" +
         std::string(RegimeName(spec.regime)) + ")";
}

std::string RunEvolve(const RunConfig& config, std::ostream& data) {
  const ScaledParams p = ResolvePoint(config);
  const Spectrum s = EigenSpectrum(p);
  EvolveOptions opts;
  opts.output_stride = config.stride;
  opts.max_local_error = config.max_local_error;
  const Trajectory t = Evolve(p, SeededState(config.seed_amplitude),
                              config.tau_end, config.dt, opts);
  if (Json(config)) {
    WriteTrajectoryJson(data, t, MakeMeta(config));
  } else {
    WriteTrajectoryCsv(data, t, MakeMeta(config));
  }

  std::string summary = SpectrumSummary(s);
  std::optional<std::pair<double, double>> window;
  if (config.fit_from || config.fit_to) {
    if (!config.fit_from || !config.fit_to) {
      throw ConfigError("fit_from and fit_to must be given together");
    }
    window = {*config.fit_from, *config.fit_to};
  } else if (s.gamma > 0.0 && 60.0 / s.gamma <= config.tau_end) {
    window = {30.0 / s.gamma, 60.0 / s.gamma};
  }
  if (window) {
    FitOptions fit_opts;
    fit_opts.residual_bound = config.residual_bound;
    const GrowthFit fit =
        FitGrowthRate(t, window->first, window->second, fit_opts);
    summary += "; fitted rate " + Short(fit.rate) + " on τ ∈ [" +
               Short(window->first) + ", " + Short(window->second) + "] (" +
               (fit.exponential ? "exponential" : "non-exponential") + ")";
  }
  if (t.linearity_exit_tau) {
    summary += "; |B| > 1 from τ = " + Short(*t.linearity_exit_tau);
  }
  return summary;
}

std::string RunMassStudy(const RunConfig& config, std::ostream& data) {
  const SweepSpec axis = BaseSpec(config, SweepAxis::kDelta21);
  const std::vector<SweepResult> results = MassStudy(
      config.alpha_beta_base, config.ratios, axis, ResolveParallel(config));
  if (Json(config)) {
    WriteSweepJson(data, results, MakeMeta(config));
  } else {
    WriteSweepCsv(data, results, MakeMeta(config));
  }
  const bool both = axis.regimes.size() == 2;
  std::string summary = both ? "regime gap" : "max Γ";
  for (size_t i = 0; i < results.size(); ++i) {
    double value = 0.0;
    if (both) {
      value = RegimeGap(results[i]);
    } else {
      for (const SweepRecord& rec : results[i].records) {
        value = std::max(value, rec.gamma);
      }
    }
    summary += (i ? ", " : ": ") + std::string("m/m0 = ") +
               Short(config.ratios[i]) + " → " + Short(value);
  }
  return summary;
}

std::string RunValidate(const RunConfig& config, std::ostream& data) {
  const SweepAxis axis = ParseAxis(config.axis);
  const std::vector<double> fixed = FixedValues(
      config, axis,
      {axis == SweepAxis::kDelta21 ? 1.0 : 0.0});
  const SweepSpec spec = WithFixed(BaseSpec(config, axis), fixed.front());
  ValidateOptions opts;
  opts.seed = config.seed;
  opts.dt = config.dt;
  opts.seed_amplitude = config.seed_amplitude;
  opts.relative_tolerance = config.tolerance;
  opts.tau_max = config.tau_max;
  const ValidationReport report =
      ValidateSweep(spec, config.samples, opts, ResolveParallel(config));
  if (Json(config)) {
    WriteValidationJson(data, spec, report, MakeMeta(config));
  } else {
    WriteValidationCsv(data, spec, report, MakeMeta(config));
  }
  return "validate: " + std::to_string(report.agreed) + " agree, " +
         std::to_string(report.mismatched) + " mismatch, " +
         std::to_string(report.skipped) + " skipped of " +
         std::to_string(report.samples.size()) + " samples";
}

}  // namespace

ParallelOptions ResolveParallel(const RunConfig& config) {
  ParallelOptions parallel;
  if (config.threads > 0) {
    parallel.threads = config.threads;
    return parallel;
  }
  const char* env = std::getenv("CARL_THREADS");
  if (env && *env) {
    const std::string_view text(env);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
      throw ConfigError("CARL_THREADS must be a positive integer, got '" +
                        std::string(text) + "'");
    }
    parallel.threads = value;
  }
  return parallel;
}

ScaledParams ResolvePoint(const RunConfig& config) {
  const Regime regime = RegimeFromEta(config.eta);
  if (config.physical) return ToScaled(*config.physical, regime);
  const double delta21 = config.delta21.empty() ? 0.0 : config.delta21[0];
  ScaledParams p;
  if (config.alpha) {
    p.delta21 = delta21;
    p.alpha = *config.alpha;
    p.beta = *config.beta;
    p.regime = regime;
  } else {
    p = ScaledParams::FromProduct(delta21, config.alpha_beta.at(0), regime);
  }
  p.Validate();
  return p;
}

std::string Execute(const RunConfig& config, std::ostream& data) {
  switch (config.mode) {
    case Mode::kSpectrum: return RunSpectrum(config, data);
    case Mode::kCurve: return RunCurve(config, data);
    case Mode::kThreshold: return RunThreshold(config, data);
    case Mode::kEvolve: return RunEvolve(config, data);
    case Mode::kMassStudy: return RunMassStudy(config, data);
    case Mode::kValidate: return RunValidate(config, data);
  }
  return {};
}

}  // namespace carl::cli
