// Copyright 2026 The Conesmooth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "conesmooth/cli.h"

namespace {

using Json = nlohmann::json;
namespace cli = conesmooth::cli;

const std::string kData = CONESMOOTH_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "conesmooth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Checks the single-line machine-readable diagnostic and returns its code.
std::string DiagnosticCode(const Outcome& o) {
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 1) << o.out;
  EXPECT_FALSE(o.err.empty());
  const Json j = Json::parse(o.out);
  EXPECT_TRUE(j.contains("message"));
  return j.at("error").get<std::string>();
}

TEST(Cli, HypothesisWindowOnTetrahedronPasses) {
  const auto o = RunCli({"certify", "--input", kData + "/tetrahedron.json", "--mode", "hypothesis", "--K", "2"});
  EXPECT_EQ(o.code, cli::kExitSuccess) << o.out << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_NEAR(j["window"][0].get<double>(), std::numbers::pi, 1e-15);
}

TEST(Cli, SmoothVerifyIcosahedron) {
  const auto o = RunCli({"smooth-verify", "--input", kData + "/icosahedron.off"});
  EXPECT_EQ(o.code, cli::kExitSuccess) << o.out << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_NEAR(j["curvature"]["bound"].get<double>(), 163.84, 1e-9);
  EXPECT_LT(j["curvature"]["sup"].get<double>(), j["curvature"]["bound"].get<double>());
  EXPECT_NEAR(j["K_hyp"].get<double>(), 1.2, 1e-12);
  EXPECT_EQ(j["cones"].size(), 12u);
}

TEST(Cli, ValidateNonManifoldNamesTheEdge) {
  const auto o = RunCli({"validate", "--input", kData + "/nonmanifold.json"});
  EXPECT_EQ(o.code, cli::kExitInputError);
  EXPECT_EQ(DiagnosticCode(o), "NonManifoldEdge");
  EXPECT_NE(o.out.find("(0, 1)"), std::string::npos) << o.out;
}

TEST(Cli, ValidateReportsStatistics) {
  const auto o = RunCli({"validate", "--input", kData + "/genus2_octagon.json"});
  ASSERT_EQ(o.code, cli::kExitSuccess) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["euler_characteristic"].get<int>(), -2);
  EXPECT_TRUE(j["closed"].get<bool>());
  const auto cube = Json::parse(RunCli({"validate", "--input", kData + "/cube.off"}).out);
  EXPECT_EQ(cube["faces"].get<int>(), 12);
}

TEST(Cli, CertificationFailureIsExitOne) {
  const auto o = RunCli({"certify", "--input", kData + "/icosahedron.off", "--mode", "lipschitz", "--M", "10"});
  EXPECT_EQ(o.code, cli::kExitCertificationFailed);
  EXPECT_FALSE(Json::parse(o.out)["pass"].get<bool>());
  const auto needle = RunCli({"certify", "--input", kData + "/needle_pillow.json", "--mode", "lipschitz", "--M", "2"});
  EXPECT_EQ(needle.code, cli::kExitCertificationFailed);
}

TEST(Cli, MinimalM) {
  const auto o = RunCli({"certify", "--input", kData + "/tetrahedron.json", "--mode", "lipschitz", "--minimal"});
  EXPECT_EQ(o.code, cli::kExitSuccess);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["minimal_M"].get<int>(), 7);
  EXPECT_EQ(j["M"].get<int>(), 7);
  const auto qc = RunCli({"certify", "--input", kData + "/icosahedron.off", "--mode", "quasiconformal", "--minimal", "--M", "5"});
  EXPECT_EQ(qc.code, cli::kExitCertificationFailed);
  EXPECT_EQ(Json::parse(qc.out)["minimal_M"].get<int>(), 11);
}

TEST(Cli, AnglesOnGenusTwo) {
  const auto o = RunCli({"angles", "--input", kData + "/genus2_octagon.json"});
  ASSERT_EQ(o.code, cli::kExitSuccess);
  const Json j = Json::parse(o.out);
  EXPECT_NEAR(j["total_defect"].get<double>(), -4 * std::numbers::pi, 1e-9);
  const auto csv = RunCli({"angles", "--input", kData + "/tetrahedron.json", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "vertex,cone_angle,defect,boundary");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 5);
}

TEST(Cli, SampleCsvAndJson) {
  const auto csv = RunCli({"sample", "--input", kData + "/tetrahedron.json", "--vertex", "1", "--grid", "50", "--format", "csv"});
  ASSERT_EQ(csv.code, cli::kExitSuccess) << csv.err;
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "r,phi,g_theta_theta,curvature");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 51);
  const auto json = RunCli({"sample", "--input", kData + "/tetrahedron.json", "--vertex", "1", "--grid", "50"});
  EXPECT_EQ(Json::parse(json.out).size(), 50u);
  const auto unknown = RunCli({"sample", "--input", kData + "/tetrahedron.json", "--vertex", "99"});
  EXPECT_EQ(unknown.code, cli::kExitInputError);
  EXPECT_EQ(DiagnosticCode(unknown), "UnknownVertex");
}

TEST(Cli, UsageErrors) {
  const std::string tet = kData + "/tetrahedron.json";
  const std::vector<std::vector<std::string>> cases = {
      {},
      {"validate"},
      {"certify", "--input", tet},
      {"certify", "--input", tet, "--mode", "lipschitz"},
      {"certify", "--input", tet, "--mode", "hypothesis"},
      {"certify", "--input", tet, "--mode", "sideways", "--M", "3"},
      {"certify", "--input", tet, "--mode", "lipschitz", "--M", "0"},
      {"certify", "--input", tet, "--mode", "hypothesis", "--K", "0.5"},
      {"smooth-verify", "--input", tet, "--grid", "-3"},
      {"smooth-verify", "--input", tet, "--format", "csv"},
      {"sample", "--input", tet},
      {"frobnicate", "--input", tet},
      {"validate", "angles", "--input", tet},
  };
  for (const auto& args : cases) {
    const auto o = RunCli(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(o.code, cli::kExitUsageError) << joined;
    EXPECT_EQ(DiagnosticCode(o), "UsageError") << joined;
  }
}

TEST(Cli, InputErrors) {
  const auto missing = RunCli({"validate", "--input", kData + "/does_not_exist.json"});
  EXPECT_EQ(missing.code, cli::kExitInputError);
  EXPECT_EQ(DiagnosticCode(missing), "MalformedDocument");

  const auto forced = RunCli({"validate", "--input", kData + "/icosahedron.off", "--format-in", "json"});
  EXPECT_EQ(forced.code, cli::kExitInputError);
  EXPECT_EQ(DiagnosticCode(forced), "MalformedDocument");

  const auto boundary = RunCli({"smooth-verify", "--input", kData + "/hexagonal_fan.json"});
  EXPECT_EQ(boundary.code, cli::kExitInputError);
  EXPECT_EQ(DiagnosticCode(boundary), "BoundaryNotSupported");
}

TEST(Cli, OutputFileAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path() / "conesmooth_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "report.json").string();
  const std::vector<std::string> args = {"smooth-verify", "--input", kData + "/tetrahedron.json", "--grid", "500"};
  auto with_output = args;
  with_output.insert(with_output.end(), {"--output", path});
  const auto written = RunCli(with_output);
  EXPECT_EQ(written.code, cli::kExitSuccess);
  EXPECT_TRUE(written.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  const auto first = RunCli(args), second = RunCli(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(file.str(), first.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExecutableExitCodes) {
  // Exercises the installed binary end to end, including the process exit code.
  auto run = [](const std::string& args) {
    const std::string command = std::string(CONESMOOTH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
  };
  EXPECT_EQ(run("certify --input " + kData + "/tetrahedron.json --mode hypothesis --K 2"), 0);
  EXPECT_EQ(run("certify --input " + kData + "/tetrahedron.json --mode hypothesis --K 1.9"), 1);
  EXPECT_EQ(run("validate --input " + kData + "/nonmanifold.json"), 2);
  EXPECT_EQ(run("validate"), 64);
  EXPECT_EQ(run("--help"), 0);
}

}  // namespace
