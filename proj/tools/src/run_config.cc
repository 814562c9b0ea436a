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

#include "carl_cli/run_config.h"

#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "options.h"

namespace carl::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct PhysicalKey {
  const char* key;
  double PhysicalParams::*member;
};

constexpr std::array<PhysicalKey, 9> kPhysicalKeys = {{
    {"mu", &PhysicalParams::dipole_moment},
    {"V", &PhysicalParams::quantization_volume},
    {"m", &PhysicalParams::atom_mass},
    {"N", &PhysicalParams::atom_number},
    {"k0", &PhysicalParams::wavenumber_k0},
    {"omega0", &PhysicalParams::omega0},
    {"omega1", &PhysicalParams::omega1},
    {"omega2", &PhysicalParams::omega2},
    {"a2_0", &PhysicalParams::pump_amplitude},
}};

json ParseJson(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(what + " is not valid JSON: " + e.what());
  }
}

std::string ReadFile(const std::string& path, const std::string& what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + what + " '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PhysicalParams PhysicalFromObject(const json& j) {
  if (!j.is_object()) throw ConfigError("'physical' must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const PhysicalKey& k : kPhysicalKeys) known |= key == k.key;
    if (!known) throw ConfigError("unknown key 'physical." + key + "'");
  }
  PhysicalParams p;
  for (const PhysicalKey& k : kPhysicalKeys) {
    if (!j.contains(k.key)) {
      throw ConfigError(std::string("physical block is missing key '") +
                        k.key + "'");
    }
    const json& v = j.at(k.key);
    if (!v.is_number()) {
      throw ConfigError(std::string("key 'physical.") + k.key +
                        "' expects a number");
    }
    p.*k.member = v.get<double>();
  }
  return p;
}

const OptionDef* FindOption(const std::string& key, bool scaled, Mode mode) {
  for (const OptionDef& def : OptionTable()) {
    if (def.key == key && def.scaled_block == scaled && def.Applies(mode)) {
      return &def;
    }
  }
  return nullptr;
}

bool HasScaledValues(const RunConfig& c) {
  return !c.delta21.empty() || !c.alpha_beta.empty() || c.alpha || c.beta;
}

}  // namespace

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kSpectrum: return "spectrum";
    case Mode::kCurve: return "curve";
    case Mode::kThreshold: return "threshold";
    case Mode::kEvolve: return "evolve";
    case Mode::kMassStudy: return "mass-study";
    case Mode::kValidate: return "validate";
  }
  return "?";
}

const std::vector<Mode>& AllModes() {
  static const std::vector<Mode> kModes = {
      Mode::kSpectrum, Mode::kCurve,     Mode::kThreshold,
      Mode::kEvolve,   Mode::kMassStudy, Mode::kValidate};
  return kModes;
}

Mode ParseMode(std::string_view name) {
  for (Mode m : AllModes()) {
    if (ModeName(m) == name) return m;
  }
  throw ConfigError("unknown mode '" + std::string(name) + "'");
}

RunConfig ConfigFromJson(std::string_view text, std::optional<Mode> mode_hint) {
  const json doc = ParseJson(text, "config");
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig config;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ConfigError("'mode' must be a string");
    config.mode = ParseMode(doc["mode"].get<std::string>());
    if (mode_hint && *mode_hint != config.mode) {
      throw ConfigError("config mode '" + std::string(ModeName(config.mode)) +
                        "' conflicts with command '" +
                        std::string(ModeName(*mode_hint)) + "'");
    }
  } else if (mode_hint) {
    config.mode = *mode_hint;
  } else {
    throw ConfigError("config is missing key 'mode'");
  }
  const Mode mode = config.mode;
  const std::string mode_name(ModeName(mode));

  if (doc.contains("scaled") && doc.contains("physical")) {
    throw ConfigError("conflicting parameter blocks 'scaled' and 'physical'");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "mode") continue;
    if (key == "scaled" && TakesParameters(mode)) {
      if (!value.is_object()) throw ConfigError("'scaled' must be an object");
      for (const auto& [sub, v] : value.items()) {
        const OptionDef* def = FindOption(sub, true, mode);
        if (!def) {
          throw ConfigError("unknown key 'scaled." + sub + "' for mode " +
                            mode_name);
        }
        def->read(v, config);
      }
      continue;
    }
    if (key == "physical" && TakesParameters(mode)) {
      config.physical = PhysicalFromObject(value);
      continue;
    }
    const OptionDef* def = FindOption(key, false, mode);
    if (!def) {
      throw ConfigError("unknown key '" + key + "' for mode " + mode_name);
    }
    def->read(value, config);
  }
  return config;
}

RunConfig LoadConfigFile(const std::string& path,
                         std::optional<Mode> mode_hint) {
  return ConfigFromJson(ReadFile(path, "config file"), mode_hint);
}

std::string ConfigToJson(const RunConfig& config) {
  ordered_json doc;
  doc["mode"] = ModeName(config.mode);
  if (TakesParameters(config.mode)) {
    if (config.physical) {
      ordered_json p;
      for (const PhysicalKey& k : kPhysicalKeys) p[k.key] = *config.physical.*k.member;
      doc["physical"] = p;
    } else {
      ordered_json scaled = ordered_json::object();
      for (const OptionDef& def : OptionTable()) {
        if (def.scaled_block && def.Applies(config.mode)) {
          def.write(config, scaled);
        }
      }
      doc["scaled"] = scaled;
    }
  }
  for (const OptionDef& def : OptionTable()) {
    if (!def.scaled_block && def.Applies(config.mode)) def.write(config, doc);
  }
  return doc.dump(2) + "\n";
}

PhysicalParams PhysicalFromJson(std::string_view text) {
  return PhysicalFromObject(ParseJson(text, "physical parameter file"));
}

PhysicalParams LoadPhysicalFile(const std::string& path) {
  return PhysicalFromJson(ReadFile(path, "physical parameter file"));
}

void CheckConfig(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json") {
    throw ConfigError("format must be csv or json, got '" + c.format + "'");
  }
  if (c.eta != 0 && c.eta != 1) {
    throw ConfigError("eta must be 0 or 1, got " + std::to_string(c.eta));
  }
  if (c.regimes != "rao" && c.regimes != "wao" && c.regimes != "both") {
    throw ConfigError("regimes must be rao, wao or both, got '" + c.regimes +
                      "'");
  }
  if (c.axis != "delta21" && c.axis != "alpha_beta") {
    throw ConfigError("axis must be delta21 or alpha_beta, got '" + c.axis +
                      "'");
  }
  if (c.threads < 0) throw ConfigError("threads must be >= 0");
  if (c.physical && HasScaledValues(c)) {
    throw ConfigError(
        "conflicting parameter blocks: physical parameters exclude "
        "delta21, alpha_beta, alpha and beta");
  }

  switch (c.mode) {
    case Mode::kSpectrum:
    case Mode::kEvolve:
      if (c.delta21.size() > 1 || c.alpha_beta.size() > 1) {
        throw ConfigError(std::string(ModeName(c.mode)) +
                          " takes a single delta21 and alpha_beta");
      }
      if (c.alpha.has_value() != c.beta.has_value()) {
        throw ConfigError("alpha and beta must be given together");
      }
      if (c.alpha && !c.alpha_beta.empty()) {
        throw ConfigError("give either alpha_beta or alpha and beta, not both");
      }
      if (!c.physical && !c.alpha && c.alpha_beta.empty()) {
        throw ConfigError(
            "missing parameter: alpha_beta (or alpha and beta, or a "
            "physical block)");
      }
      break;
    case Mode::kCurve:
    case Mode::kValidate:
      if (c.axis == "delta21" && !c.delta21.empty()) {
        throw ConfigError("delta21 is the swept axis; use from/to/points");
      }
      if (c.axis == "alpha_beta" && !c.alpha_beta.empty()) {
        throw ConfigError("alpha_beta is the swept axis; use from/to/points");
      }
      if (c.mode == Mode::kValidate &&
          (c.delta21.size() > 1 || c.alpha_beta.size() > 1)) {
        throw ConfigError("validate takes a single fixed parameter value");
      }
      break;
    case Mode::kThreshold:
    case Mode::kMassStudy:
      break;
  }
}

}  // namespace carl::cli
