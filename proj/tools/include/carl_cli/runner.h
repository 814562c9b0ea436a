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

#ifndef CARL_CLI_RUNNER_H_
#define CARL_CLI_RUNNER_H_

#include <ostream>
#include <string>

#include "carl/sweep.h"
#include "carl_cli/run_config.h"

namespace carl::cli {

// Worker count: config.threads, else CARL_THREADS, else 0 (machine).
ParallelOptions ResolveParallel(const RunConfig& config);

// The single parameter point of spectrum and evolve.
ScaledParams ResolvePoint(const RunConfig& config);

// Runs a checked config, writing the data file to `data`, and returns the
// one-line summary. Library errors propagate.
std::string Execute(const RunConfig& config, std::ostream& data);

}  // namespace carl::cli

#endif  // CARL_CLI_RUNNER_H_
