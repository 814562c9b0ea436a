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

#ifndef CARL_IO_H_
#define CARL_IO_H_

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "carl/dynamics.h"
#include "carl/spectrum.h"
#include "carl/sweep.h"

namespace carl {

// Column names of the sweep record table, in file order.
const std::vector<std::string>& SweepColumns();
const std::vector<std::string>& TrajectoryColumns();
const std::vector<std::string>& PolylineColumns();

// Metadata shared by every output file. Files written with the same
// metadata and data are byte-identical.
struct OutputMeta {
  std::optional<std::string> timestamp;
  // Extra "key: value" lines, e.g. the command that produced the file.
  std::vector<std::pair<std::string, std::string>> extra;
};

// Shortest round-trip decimal form of a double.
std::string FormatNumber(double value);

// CSV with '#' metadata lines and one header row. Several results are
// written as gnuplot index blocks, each introduced by a "# block" line.
void WriteSweepCsv(std::ostream& out, const std::vector<SweepResult>& results,
                   const OutputMeta& meta = {});
void WriteSweepJson(std::ostream& out, const std::vector<SweepResult>& results,
                    const OutputMeta& meta = {});

void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory,
                        const OutputMeta& meta = {});
void WriteTrajectoryJson(std::ostream& out, const Trajectory& trajectory,
                         const OutputMeta& meta = {});

void WritePolylinesCsv(std::ostream& out, const std::vector<Polyline>& lines,
                       const ThresholdMapSpec& spec,
                       const OutputMeta& meta = {});
void WritePolylinesJson(std::ostream& out, const std::vector<Polyline>& lines,
                        const ThresholdMapSpec& spec,
                        const OutputMeta& meta = {});

void WriteSpectrumCsv(std::ostream& out, const ScaledParams& params,
                      const Spectrum& spectrum, const OutputMeta& meta = {});
void WriteSpectrumJson(std::ostream& out, const ScaledParams& params,
                       const Spectrum& spectrum, const OutputMeta& meta = {});

void WriteValidationCsv(std::ostream& out, const SweepSpec& spec,
                        const ValidationReport& report,
                        const OutputMeta& meta = {});
void WriteValidationJson(std::ostream& out, const SweepSpec& spec,
                         const ValidationReport& report,
                         const OutputMeta& meta = {});

}  // namespace carl

#endif  // CARL_IO_H_
