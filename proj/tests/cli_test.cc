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

#include "carl_cli/cli.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "carl/params.h"
#include "carl_cli/plot_script.h"
#include "carl_cli/run_config.h"
#include "json.hpp"
#include "options.h"

namespace carl::cli {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult Carl(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"carl"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  RunResult r;
  r.code = Main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs a shell command and returns its stdout lines.
std::vector<std::string> Shell(const std::string& command) {
  std::vector<std::string> lines;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return lines;
  char buffer[4096];
  while (std::fgets(buffer, sizeof(buffer), pipe)) {
    std::string line(buffer);
    if (!line.empty() && line.back() == '\n') line.pop_back();
    lines.push_back(line);
  }
  pclose(pipe);
  return lines;
}

size_t RecordCount(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') ++n;
  }
  return n == 0 ? 0 : n - 1;  // header row
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("carl_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("CARL_THREADS");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void WriteFile(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, SpectrumSummaries) {
  RunResult r = Carl({"spectrum", "--delta21", "0", "--alpha-beta", "1", "--eta", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "Γ = 0.56228, Case II\n");
  r = Carl({"spectrum", "--delta21", "0", "--alpha-beta", "0.1", "--eta", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "Γ = 0, Case I\n");
  r = Carl({"spectrum", "--alpha", "2", "--beta", "0.5", "--eta", "0"});
  EXPECT_EQ(r.out, "Γ = 0.86603, Case II\n");
}

TEST_F(CliTest, CurveRecordCount) {
  const RunResult r =
      Carl({"curve", "--axis", "delta21", "--from", "-2", "--to", "6",
           "--points", "801", "--alpha-beta", "1", "--regimes", "both", "-o",
           Path("gain.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(RecordCount(Slurp(Path("gain.csv"))), 1602u);
  EXPECT_NE(r.out.find("1602 records"), std::string::npos);
}

TEST_F(CliTest, StdoutDataMovesSummaryToStderr) {
  const RunResult r = Carl({"curve", "--alpha-beta", "1", "--points", "5"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(RecordCount(r.out), 10u);
  EXPECT_NE(r.err.find("10 records"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Carl({"spectrum", "--alpha-beta", "1", "--bogus", "2"}).code,
            kExitConfigError);
  EXPECT_EQ(Carl({"spectrum", "--delta21", "0"}).code, kExitConfigError);
  EXPECT_EQ(Carl({"spectrum", "--alpha-beta", "1", "--eta", "2"}).code,
            kExitConfigError);
  EXPECT_EQ(Carl({"spectrum", "--alpha-beta", "-1"}).code, kExitConfigError);
  EXPECT_EQ(Carl({"curve", "--points", "1"}).code, kExitConfigError);
  EXPECT_EQ(Carl({"curve", "-o", Path("no/such/dir/x.csv")}).code,
            kExitConfigError);
  const RunResult r = Carl({"evolve", "--alpha-beta", "1", "--dt", "0.5",
                           "-o", Path("t.csv")});
  EXPECT_EQ(r.code, kExitNumericalFailure);
  EXPECT_NE(r.err.find("reduce dt"), std::string::npos);
  EXPECT_EQ(Carl({}).code, kExitConfigError);
  EXPECT_EQ(Carl({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ConfigErrorsNameTheKey) {
  WriteFile("unknown.json",
            R"({"mode": "spectrum", "scaled": {"alpha_beta": 1}, "colour": 2})");
  RunResult r = Carl({"--config", Path("unknown.json")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("'colour'"), std::string::npos);

  WriteFile("both.json", R"({"mode": "spectrum", "scaled": {"alpha_beta": 1},
      "physical": {"mu": 1}})");
  r = Carl({"--config", Path("both.json")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("conflicting"), std::string::npos);

  WriteFile("wrong_mode_key.json", R"({"mode": "threshold", "dt": 0.1})");
  r = Carl({"--config", Path("wrong_mode_key.json")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("'dt'"), std::string::npos);

  WriteFile("type.json", R"({"mode": "curve", "points": 1.5})");
  r = Carl({"--config", Path("type.json")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("'points'"), std::string::npos);

  WriteFile("phys.json", R"({"mu": 1, "V": 1})");
  r = Carl({"spectrum", "--physical", Path("phys.json")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("'m'"), std::string::npos);

  WriteFile("mode.json", R"({"mode": "curve"})");
  r = Carl({"--config", Path("mode.json"), "threshold"});
  EXPECT_EQ(r.code, kExitConfigError);
}

TEST_F(CliTest, FlagAndConfigRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> runs = {
      {"spectrum", "--delta21", "0.3", "--alpha", "0.5", "--beta", "3",
       "--eta", "0", "--format", "json"},
      {"curve", "--axis", "alpha_beta", "--from", "0.1", "--to", "2",
       "--points", "21", "--delta21", "0,1", "--regimes", "wao"},
      {"threshold", "--eta", "0", "--resolution", "32"},
      {"evolve", "--delta21", "1", "--alpha-beta", "1", "--tau-end", "5",
       "--dt", "0.01", "--stride", "7"},
      {"mass-study", "--ratios", "1,10", "--points", "41", "--format", "json"},
      {"validate", "--samples", "3", "--from", "-1", "--to", "1", "--points",
       "11", "--alpha-beta", "1.5", "--seed", "9"},
  };
  for (size_t i = 0; i < runs.size(); ++i) {
    const std::string a = Path("a" + std::to_string(i));
    const std::string b = Path("b" + std::to_string(i));
    std::vector<std::string> flag_run = runs[i];
    flag_run.insert(flag_run.end(), {"-o", a});
    ASSERT_EQ(Carl(flag_run).code, kExitOk) << runs[i][0];

    std::vector<std::string> dump = {"--dump-config"};
    dump.insert(dump.end(), flag_run.begin(), flag_run.end());
    const RunResult config = Carl(dump);
    ASSERT_EQ(config.code, kExitOk);
    WriteFile("config.json", config.out);
    ASSERT_EQ(Carl({"--config", Path("config.json"), runs[i][0], "-o", b}).code,
              kExitOk);
    EXPECT_EQ(Slurp(a), Slurp(b)) << runs[i][0];
    // The dumped config is a fixed point.
    EXPECT_EQ(ConfigToJson(ConfigFromJson(config.out)), config.out);
  }
}

TEST(OptionTable, EveryFlagHasAConfigKey) {
  for (Mode mode : AllModes()) {
    RunConfig config;
    config.mode = mode;
    config.delta21 = {0.5};
    config.alpha_beta = {1.5};
    config.from = 0.0;
    config.to = 1.0;
    config.points = 3;
    config.fit_from = 1.0;
    config.fit_to = 2.0;
    const nlohmann::json doc = nlohmann::json::parse(ConfigToJson(config));
    for (const OptionDef& def : OptionTable()) {
      if (!def.Applies(mode)) continue;
      if (def.key == "alpha" || def.key == "beta") continue;  // unset optionals
      const nlohmann::json& where = def.scaled_block ? doc["scaled"] : doc;
      EXPECT_TRUE(where.contains(def.key))
          << ModeName(mode) << " lacks config key " << def.key;
      EXPECT_EQ(def.flags.substr(def.flags.rfind("--") + 2),
                [&] {
                  std::string k = def.key;
                  std::replace(k.begin(), k.end(), '_', '-');
                  return k;
                }());
    }
  }
}

TEST_F(CliTest, HelpListsEveryOptionWithUnits) {
  for (Mode mode : AllModes()) {
    const RunResult r = Carl({std::string(ModeName(mode)), "--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("Units:"), std::string::npos);
    EXPECT_NE(r.out.find("dimensionless"), std::string::npos);
    for (const OptionDef& def : OptionTable()) {
      if (!def.Applies(mode)) continue;
      EXPECT_NE(r.out.find(def.flags.substr(def.flags.rfind("--"))),
                std::string::npos)
          << ModeName(mode) << " help lacks " << def.flags;
    }
  }
}

TEST_F(CliTest, PhysicalBlockMatchesScaledFlags) {
  const double w0 = 2 * M_PI * 384.23e12;
  const double w2 = w0 - 2 * M_PI * 10e9;
  PhysicalParams p;
  p.dipole_moment = 3.58e-29;
  p.quantization_volume = 1e-9;
  p.atom_mass = 1.44316e-25;
  p.atom_number = 1e6;
  p.wavenumber_k0 = 2 * M_PI / 780e-9;
  p.omega0 = w0;
  p.omega1 = w2;
  p.omega2 = w2;
  p.pump_amplitude = 1e3;
  nlohmann::json j = {{"mu", p.dipole_moment}, {"V", p.quantization_volume},
                      {"m", p.atom_mass},      {"N", p.atom_number},
                      {"k0", p.wavenumber_k0}, {"omega0", p.omega0},
                      {"omega1", p.omega1},    {"omega2", p.omega2},
                      {"a2_0", p.pump_amplitude}};
  WriteFile("rb.json", j.dump());
  const ScaledParams s = ToScaled(p, Regime::kWaveOptics);
  const RunResult physical =
      Carl({"spectrum", "--physical", Path("rb.json"), "-o", Path("p.csv")});
  ASSERT_EQ(physical.code, kExitOk) << physical.err;
  char alpha[32], beta[32], delta[32];
  std::snprintf(alpha, sizeof(alpha), "%.17g", s.alpha);
  std::snprintf(beta, sizeof(beta), "%.17g", s.beta);
  std::snprintf(delta, sizeof(delta), "%.17g", s.delta21);
  const RunResult scaled = Carl({"spectrum", "--delta21", delta, "--alpha",
                                alpha, "--beta", beta, "-o", Path("s.csv")});
  EXPECT_EQ(physical.out, scaled.out);
  EXPECT_EQ(Slurp(Path("p.csv")), Slurp(Path("s.csv")));
  EXPECT_EQ(Carl({"spectrum", "--physical", Path("rb.json"), "--alpha-beta", "1"})
                .code,
            kExitConfigError);
}

TEST_F(CliTest, ThreadsDoNotChangeOutput) {
  ASSERT_EQ(Carl({"curve", "--points", "101", "--threads", "1", "-o",
                 Path("one.csv")}).code,
            kExitOk);
  setenv("CARL_THREADS", "3", 1);
  ASSERT_EQ(Carl({"curve", "--points", "101", "-o", Path("env.csv")}).code,
            kExitOk);
  EXPECT_EQ(Slurp(Path("one.csv")), Slurp(Path("env.csv")));
  setenv("CARL_THREADS", "many", 1);
  EXPECT_EQ(Carl({"curve", "--points", "11", "-o", Path("x.csv")}).code,
            kExitConfigError);
}

TEST_F(CliTest, TimestampOnlyOnRequest) {
  Carl({"threshold", "--resolution", "16", "-o", Path("a.csv")});
  Carl({"threshold", "--resolution", "16", "--timestamp", "-o", Path("b.csv")});
  EXPECT_EQ(Slurp(Path("a.csv")).find("timestamp"), std::string::npos);
  EXPECT_NE(Slurp(Path("b.csv")).find("# timestamp: 20"), std::string::npos);
}

TEST_F(CliTest, EvolveFitsGrowthRate) {
  const RunResult r = Carl({"evolve", "--delta21", "0", "--alpha-beta", "1",
                           "--tau-end", "120", "-o", Path("t.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("fitted rate 0.562"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(exponential)"), std::string::npos);
}

TEST_F(CliTest, GainCurvePlotHasOneLinePerRegimeAndValue) {
  ASSERT_EQ(Carl({"curve", "--alpha-beta", "0.1,1,5", "--points", "41", "-o",
                 Path("gain.csv")}).code,
            kExitOk);
  const PlotScript script = EmitPlotScript(Path("gain.csv"));
  EXPECT_EQ(script.style, PlotStyle::kGainCurve);
  ASSERT_EQ(script.series.size(), 6u);
  for (const PlotSeries& s : script.series) {
    const auto rows = Shell(s.command);
    EXPECT_EQ(rows.size(), 41u) << s.title;
    EXPECT_EQ(s.dashed, s.title.rfind("RAO", 0) == 0);
  }
  EXPECT_NE(script.text.find("title 'WAO, αβ=5'"), std::string::npos);
  // The data pipelines reproduce the file's values.
  const auto rows = Shell(script.series[1].command);  // WAO, ab = 0.1
  EXPECT_EQ(rows.front(), "-2,0");
}

TEST_F(CliTest, MassStudyPlotIsSolidWaoDashedRao) {
  ASSERT_EQ(Carl({"mass-study", "--points", "21", "-o", Path("mass.csv")}).code,
            kExitOk);
  const RunResult r = Carl({"plot", Path("mass.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string text = Slurp(Path("mass.gp"));
  const PlotScript script = EmitPlotScript(Path("mass.csv"));
  EXPECT_EQ(script.style, PlotStyle::kMassStudy);
  EXPECT_EQ(script.text, text);
  ASSERT_EQ(script.series.size(), 6u);
  for (const PlotSeries& s : script.series) {
    EXPECT_EQ(s.dashed, s.title.find("RAO") != std::string::npos);
    EXPECT_EQ(Shell(s.command).size(), 21u);
  }
  EXPECT_NE(text.find("dt 1 title 'WAO, m/m0=100'"), std::string::npos);
  EXPECT_NE(text.find("dt 2 title 'RAO, m/m0=100'"), std::string::npos);
}

TEST_F(CliTest, PlotRejectsEmptyAndMismatchedFiles) {
  WriteFile("empty.csv", "");
  RunResult r = Carl({"plot", Path("empty.csv")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_FALSE(fs::exists(Path("empty.gp")));

  WriteFile("header_only.csv", "# carl\naxis_name,axis_value,regime,gamma\n");
  EXPECT_EQ(Carl({"plot", Path("header_only.csv")}).code, kExitConfigError);

  WriteFile("partial.csv", "axis_name,axis_value,regime,case\ndelta21,0,RAO,I\n");
  r = Carl({"plot", Path("partial.csv")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("missing column 'gamma'"), std::string::npos);
  EXPECT_FALSE(fs::exists(Path("partial.gp")));

  ASSERT_EQ(Carl({"threshold", "--resolution", "16", "-o", Path("th.csv")}).code,
            kExitOk);
  r = Carl({"plot", Path("th.csv"), "--style", "curve"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("missing column 'axis_name'"), std::string::npos);
}

TEST_F(CliTest, ThresholdAndTrajectoryPlots) {
  Carl({"threshold", "--eta", "0", "--resolution", "32", "-o", Path("th.csv")});
  PlotScript script = EmitPlotScript(Path("th.csv"));
  EXPECT_EQ(script.style, PlotStyle::kThreshold);
  ASSERT_EQ(script.series.size(), 1u);
  EXPECT_GT(Shell(script.series[0].command).size(), 5u);

  Carl({"evolve", "--alpha-beta", "1", "--tau-end", "2", "--stride", "100",
       "-o", Path("t.csv")});
  script = EmitPlotScript(Path("t.csv"));
  EXPECT_EQ(script.style, PlotStyle::kTrajectory);
  EXPECT_EQ(Shell(script.series[0].command).size(), 21u);
}

#ifdef CARL_BINARY
TEST(Binary, SpectrumExample) {
  FILE* pipe = popen(CARL_BINARY " spectrum --delta21 0 --alpha-beta 1 --eta 1",
                     "r");
  ASSERT_NE(pipe, nullptr);
  char buffer[256] = {};
  ASSERT_NE(std::fgets(buffer, sizeof(buffer), pipe), nullptr);
  const int status = pclose(pipe);
  EXPECT_EQ(std::string(buffer), "Γ = 0.56228, Case II\n");
  EXPECT_EQ(WEXITSTATUS(status), 0);
}

TEST(Binary, ExitStatusContract) {
  auto status = [](const std::string& args) {
    const std::string command =
        std::string(CARL_BINARY) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(command.c_str()));
  };
  EXPECT_EQ(status("spectrum --alpha-beta 1"), 0);
  EXPECT_EQ(status("spectrum --alpha-beta 1 --nope"), 1);
  EXPECT_EQ(status("evolve --alpha-beta 1 --dt 0.5 -o /dev/null"), 2);
}
#endif

}  // namespace
}  // namespace carl::cli
