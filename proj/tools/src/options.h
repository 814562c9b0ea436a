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

#ifndef CARL_CLI_OPTIONS_H_
#define CARL_CLI_OPTIONS_H_

#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "carl_cli/run_config.h"
#include "json.hpp"

namespace carl::cli {

// One configurable field. The flag --foo-bar and the config key foo_bar
// always address the same RunConfig member.
struct OptionDef {
  std::string flags;  // CLI11 spelling, e.g. "-o,--output"
  std::string key;    // config-file key
  bool scaled_block = false;  // lives under "scaled" in config files
  std::vector<Mode> modes;
  std::string help;

  std::function<CLI::Option*(CLI::App&, RunConfig&)> add_to;
  std::function<void(const nlohmann::json&, RunConfig&)> read;
  // Adds the key unless the value is unset.
  std::function<void(const RunConfig&, nlohmann::ordered_json&)> write;
  std::function<void(const RunConfig&, RunConfig&)> copy;

  bool Applies(Mode mode) const;
};

const std::vector<OptionDef>& OptionTable();

// Modes that read a scaled or SI parameter block.
bool TakesParameters(Mode mode);

}  // namespace carl::cli

#endif  // CARL_CLI_OPTIONS_H_
