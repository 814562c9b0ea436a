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

#include "carl/io.h"

#include <charconv>
#include <cmath>
#include <iomanip>

#include "json.hpp"

namespace carl {
namespace {

using nlohmann::ordered_json;

void WriteMetaLines(std::ostream& out, const OutputMeta& meta) {
  out << "# carl " << CARL_VERSION << "\n";
  out << "# constants: " << constants::kSource
      << " hbar=" << FormatNumber(constants::kHbar)
      << " c=" << FormatNumber(constants::kSpeedOfLight)
      << " eps0=" << FormatNumber(constants::kVacuumPermittivity) << "\n";
  if (meta.timestamp) out << "# timestamp: " << *meta.timestamp << "\n";
  for (const auto& [key, value] : meta.extra) {
    out << "# " << key << ": " << value << "\n";
  }
}

ordered_json MetaJson(const OutputMeta& meta) {
  ordered_json j;
  j["version"] = CARL_VERSION;
  j["constants"] = {{"source", constants::kSource},
                    {"hbar", constants::kHbar},
                    {"c", constants::kSpeedOfLight},
                    {"eps0", constants::kVacuumPermittivity}};
  if (meta.timestamp) j["timestamp"] = *meta.timestamp;
  for (const auto& [key, value] : meta.extra) j[key] = value;
  return j;
}

void WriteHeader(std::ostream& out, const std::vector<std::string>& columns) {
  for (size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << "\n";
}

std::string RegimeList(const std::vector<Regime>& regimes) {
  std::string s;
  for (size_t i = 0; i < regimes.size(); ++i) {
    if (i) s += "+";
    s += RegimeName(regimes[i]);
  }
  return s;
}

std::string SpecLine(const SweepSpec& spec) {
  std::string s = "axis=" + std::string(AxisName(spec.axis)) +
                  " start=" + FormatNumber(spec.start) +
                  " stop=" + FormatNumber(spec.stop) +
                  " points=" + std::to_string(spec.num_points);
  if (spec.axis == SweepAxis::kDelta21) {
    s += " alpha_beta=" + FormatNumber(spec.alpha_beta);
  } else {
    s += " delta21=" + FormatNumber(spec.delta21);
  }
  return s + " regimes=" + RegimeList(spec.regimes);
}

ordered_json SpecJson(const SweepSpec& spec) {
  ordered_json j;
  j["axis"] = AxisName(spec.axis);
  j["start"] = spec.start;
  j["stop"] = spec.stop;
  j["points"] = spec.num_points;
  if (spec.axis == SweepAxis::kDelta21) {
    j["alpha_beta"] = spec.alpha_beta;
  } else {
    j["delta21"] = spec.delta21;
  }
  ordered_json regimes = ordered_json::array();
  for (Regime r : spec.regimes) regimes.push_back(RegimeName(r));
  j["regimes"] = regimes;
  return j;
}

std::string ParamsLine(const ScaledParams& p) {
  return "delta21=" + FormatNumber(p.delta21) + " alpha=" +
         FormatNumber(p.alpha) + " beta=" + FormatNumber(p.beta) +
         " eta=" + std::to_string(static_cast<int>(p.eta()));
}

ordered_json ParamsJson(const ScaledParams& p) {
  return {{"delta21", p.delta21},
          {"alpha", p.alpha},
          {"beta", p.beta},
          {"eta", static_cast<int>(p.eta())}};
}

ordered_json LambdasJson(const std::array<std::complex<double>, 3>& lambdas) {
  ordered_json j = ordered_json::array();
  for (const auto& l : lambdas) j.push_back({l.real(), l.imag()});
  return j;
}

}  // namespace

const std::vector<std::string>& SweepColumns() {
  static const std::vector<std::string> kColumns = {
      "axis_name", "axis_value", "regime", "gamma", "case", "re_l1",
      "im_l1",     "re_l2",      "im_l2",  "re_l3", "im_l3"};
  return kColumns;
}

const std::vector<std::string>& TrajectoryColumns() {
  static const std::vector<std::string> kColumns = {
      "tau",   "re_A1", "im_A1",   "abs_A1",  "re_B",
      "im_B",  "abs_B", "re_Bdot", "im_Bdot"};
  return kColumns;
}

const std::vector<std::string>& PolylineColumns() {
  static const std::vector<std::string> kColumns = {"branch_id", "delta21",
                                                    "alpha_beta"};
  return kColumns;
}

std::string FormatNumber(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepResult>& results,
                   const OutputMeta& meta) {
  WriteMetaLines(out, meta);
  WriteHeader(out, SweepColumns());
  for (size_t b = 0; b < results.size(); ++b) {
    const SweepResult& r = results[b];
    if (b) out << "\n\n";
    out << "# block " << b << ": " << SpecLine(r.spec);
    if (r.mass_ratio) {
      out << " mass_ratio=" << FormatNumber(*r.mass_ratio) << " units=m0";
    }
    out << "\n";
    const std::string_view axis = AxisName(r.spec.axis);
    for (const SweepRecord& rec : r.records) {
      out << axis << ',' << FormatNumber(rec.axis_value) << ','
          << RegimeName(rec.regime) << ',' << FormatNumber(rec.gamma) << ','
          << CaseName(rec.case_tag);
      for (const auto& l : rec.lambdas) {
        out << ',' << FormatNumber(l.real()) << ',' << FormatNumber(l.imag());
      }
      out << '\n';
    }
  }
}

void WriteSweepJson(std::ostream& out, const std::vector<SweepResult>& results,
                    const OutputMeta& meta) {
  ordered_json doc;
  doc["meta"] = MetaJson(meta);
  ordered_json blocks = ordered_json::array();
  for (const SweepResult& r : results) {
    ordered_json block;
    block["spec"] = SpecJson(r.spec);
    if (r.mass_ratio) {
      block["mass_ratio"] = *r.mass_ratio;
      block["units"] = "m0";
    }
    ordered_json records = ordered_json::array();
    for (const SweepRecord& rec : r.records) {
      ordered_json j;
      j["axis_name"] = AxisName(r.spec.axis);
      j["axis_value"] = rec.axis_value;
      j["regime"] = RegimeName(rec.regime);
      j["gamma"] = rec.gamma;
      j["case"] = CaseName(rec.case_tag);
      for (int k = 0; k < 3; ++k) {
        j["re_l" + std::to_string(k + 1)] = rec.lambdas[k].real();
        j["im_l" + std::to_string(k + 1)] = rec.lambdas[k].imag();
      }
      records.push_back(std::move(j));
    }
    block["records"] = std::move(records);
    blocks.push_back(std::move(block));
  }
  doc["results"] = std::move(blocks);
  out << doc.dump(2) << "\n";
}

void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory,
                        const OutputMeta& meta) {
  WriteMetaLines(out, meta);
  out << "# params: " << ParamsLine(trajectory.params) << "\n";
  out << "# dt: " << FormatNumber(trajectory.dt)
      << " stride: " << trajectory.output_stride << "\n";
  if (!trajectory.samples.empty()) {
    out << "# seed_amplitude: "
        << FormatNumber(std::abs(trajectory.samples.front().A1)) << "\n";
  }
  if (trajectory.linearity_exit_tau) {
    out << "# linearity_exit_tau: "
        << FormatNumber(*trajectory.linearity_exit_tau) << "\n";
  }
  WriteHeader(out, TrajectoryColumns());
  for (const TrajectoryState& s : trajectory.samples) {
    out << FormatNumber(s.tau) << ',' << FormatNumber(s.A1.real()) << ','
        << FormatNumber(s.A1.imag()) << ',' << FormatNumber(std::abs(s.A1))
        << ',' << FormatNumber(s.B.real()) << ',' << FormatNumber(s.B.imag())
        << ',' << FormatNumber(std::abs(s.B)) << ','
        << FormatNumber(s.Bdot.real()) << ',' << FormatNumber(s.Bdot.imag())
        << '\n';
  }
}

void WriteTrajectoryJson(std::ostream& out, const Trajectory& trajectory,
                         const OutputMeta& meta) {
  ordered_json doc;
  doc["meta"] = MetaJson(meta);
  doc["params"] = ParamsJson(trajectory.params);
  doc["dt"] = trajectory.dt;
  doc["stride"] = trajectory.output_stride;
  if (!trajectory.samples.empty()) {
    doc["seed_amplitude"] = std::abs(trajectory.samples.front().A1);
  }
  doc["linearity_exit_tau"] =
      trajectory.linearity_exit_tau ? ordered_json(*trajectory.linearity_exit_tau)
                                    : ordered_json(nullptr);
  ordered_json samples = ordered_json::array();
  for (const TrajectoryState& s : trajectory.samples) {
    samples.push_back({{"tau", s.tau},
                       {"re_A1", s.A1.real()},
                       {"im_A1", s.A1.imag()},
                       {"abs_A1", std::abs(s.A1)},
                       {"re_B", s.B.real()},
                       {"im_B", s.B.imag()},
                       {"abs_B", std::abs(s.B)},
                       {"re_Bdot", s.Bdot.real()},
                       {"im_Bdot", s.Bdot.imag()}});
  }
  doc["samples"] = std::move(samples);
  out << doc.dump(2) << "\n";
}

void WritePolylinesCsv(std::ostream& out, const std::vector<Polyline>& lines,
                       const ThresholdMapSpec& spec, const OutputMeta& meta) {
  WriteMetaLines(out, meta);
  out << "# threshold map: eta=" << static_cast<int>(EtaOf(spec.regime))
      << " delta21=[" << FormatNumber(spec.delta21_start) << ","
      << FormatNumber(spec.delta21_stop) << "] alpha_beta=["
      << FormatNumber(spec.alpha_beta_start) << ","
      << FormatNumber(spec.alpha_beta_stop)
      << "] resolution=" << spec.resolution << "\n";
  WriteHeader(out, PolylineColumns());
  for (const Polyline& line : lines) {
    for (const auto& [d, ab] : line.points) {
      out << line.branch_id << ',' << FormatNumber(d) << ',' << FormatNumber(ab)
          << '\n';
    }
  }
}

void WritePolylinesJson(std::ostream& out, const std::vector<Polyline>& lines,
                        const ThresholdMapSpec& spec, const OutputMeta& meta) {
  ordered_json doc;
  doc["meta"] = MetaJson(meta);
  doc["spec"] = {{"eta", static_cast<int>(EtaOf(spec.regime))},
                 {"delta21", {spec.delta21_start, spec.delta21_stop}},
                 {"alpha_beta", {spec.alpha_beta_start, spec.alpha_beta_stop}},
                 {"resolution", spec.resolution}};
  ordered_json branches = ordered_json::array();
  for (const Polyline& line : lines) {
    ordered_json points = ordered_json::array();
    for (const auto& [d, ab] : line.points) points.push_back({d, ab});
    branches.push_back({{"branch_id", line.branch_id}, {"points", points}});
  }
  doc["branches"] = std::move(branches);
  out << doc.dump(2) << "\n";
}

void WriteSpectrumCsv(std::ostream& out, const ScaledParams& params,
                      const Spectrum& spectrum, const OutputMeta& meta) {
  WriteMetaLines(out, meta);
  out << "# params: " << ParamsLine(params) << "\n";
  out << "delta21,alpha_beta,eta,gamma,case,boundary,re_l1,im_l1,re_l2,im_l2,"
         "re_l3,im_l3\n";
  out << FormatNumber(params.delta21) << ',' << FormatNumber(params.alpha_beta())
      << ',' << static_cast<int>(params.eta()) << ','
      << FormatNumber(spectrum.gamma) << ',' << CaseName(spectrum.case_tag)
      << ',' << (spectrum.boundary ? 1 : 0);
  for (const auto& l : spectrum.lambdas) {
    out << ',' << FormatNumber(l.real()) << ',' << FormatNumber(l.imag());
  }
  out << '\n';
}

void WriteSpectrumJson(std::ostream& out, const ScaledParams& params,
                       const Spectrum& spectrum, const OutputMeta& meta) {
  ordered_json doc;
  doc["meta"] = MetaJson(meta);
  doc["params"] = ParamsJson(params);
  doc["alpha_beta"] = params.alpha_beta();
  doc["gamma"] = spectrum.gamma;
  doc["case"] = CaseName(spectrum.case_tag);
  doc["boundary"] = spectrum.boundary;
  doc["lambdas"] = LambdasJson(spectrum.lambdas);
  out << doc.dump(2) << "\n";
}

void WriteValidationCsv(std::ostream& out, const SweepSpec& spec,
                        const ValidationReport& report,
                        const OutputMeta& meta) {
  WriteMetaLines(out, meta);
  out << "# sweep: " << SpecLine(spec) << "\n";
  out << "# agreed=" << report.agreed << " mismatched=" << report.mismatched
      << " skipped=" << report.skipped << "\n";
  out << "grid_index,axis_value,regime,gamma_spectrum,case,gamma_fit,"
         "fit_residual,status,note\n";
  for (const ValidationSample& s : report.samples) {
    out << s.grid_index << ',' << FormatNumber(s.axis_value) << ','
        << RegimeName(s.regime) << ',' << FormatNumber(s.gamma_spectrum) << ','
        << CaseName(s.case_tag) << ','
        << (s.gamma_fit ? FormatNumber(*s.gamma_fit) : std::string()) << ','
        << FormatNumber(s.fit_residual) << ',' << StatusName(s.status) << ','
        << s.note << '\n';
  }
}

void WriteValidationJson(std::ostream& out, const SweepSpec& spec,
                         const ValidationReport& report,
                         const OutputMeta& meta) {
  ordered_json doc;
  doc["meta"] = MetaJson(meta);
  doc["spec"] = SpecJson(spec);
  doc["agreed"] = report.agreed;
  doc["mismatched"] = report.mismatched;
  doc["skipped"] = report.skipped;
  ordered_json samples = ordered_json::array();
  for (const ValidationSample& s : report.samples) {
    samples.push_back(
        {{"grid_index", s.grid_index},
         {"axis_value", s.axis_value},
         {"regime", RegimeName(s.regime)},
         {"gamma_spectrum", s.gamma_spectrum},
         {"case", CaseName(s.case_tag)},
         {"gamma_fit", s.gamma_fit ? ordered_json(*s.gamma_fit)
                                   : ordered_json(nullptr)},
         {"fit_residual", s.fit_residual},
         {"status", StatusName(s.status)},
         {"note", s.note}});
  }
  doc["samples"] = std::move(samples);
  out << doc.dump(2) << "\n";
}

}  // namespace carl
