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

#include "conesmooth/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "conesmooth/assemble.h"
#include "conesmooth/certify.h"
#include "conesmooth/error.h"
#include "conesmooth/mesh.h"
#include "conesmooth/report_json.h"

namespace conesmooth::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

PolyhedralSurface LoadSurface(const CommandInvocation& inv) {
  std::ifstream in(inv.input_path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMalformedDocument, "cannot read input file '" + inv.input_path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  std::string format;
  if (inv.input_format) {
    format = *inv.input_format;
  } else {
    const std::string path = Lower(inv.input_path);
    format = path.size() >= 4 && path.ends_with(".off") ? "off" : "json";
  }
  return format == "off" ? IngestOff(text.str()) : ParseSurface(text.str());
}

void RequireJson(const CommandInvocation& inv) {
  if (inv.format != "json") {
    throw UsageError(std::string(SubcommandName(inv.subcommand)) + " only writes JSON");
  }
}

RunResult RunValidate(const CommandInvocation& inv) {
  RequireJson(inv);
  const PolyhedralSurface s = LoadSurface(inv);
  std::size_t boundary = 0;
  for (VertexId v : s.vertices()) boundary += s.is_boundary_vertex(v) ? 1 : 0;
  Json j;
  j["valid"] = true;
  j["vertices"] = s.num_vertices();
  j["edges"] = s.num_edges();
  j["faces"] = s.num_faces();
  j["boundary_vertices"] = boundary;
  j["closed"] = s.is_closed();
  j["euler_characteristic"] = s.euler_characteristic();
  return {kExitSuccess, j.dump(2) + "\n"};
}

RunResult RunAngles(const CommandInvocation& inv) {
  const PolyhedralSurface s = LoadSurface(inv);
  if (inv.format == "csv") {
    std::string out = "vertex,cone_angle,defect,boundary\n";
    char line[128];
    for (VertexId v : s.vertices()) {
      const ConeAngle a = VertexConeAngle(s, v);
      std::snprintf(line, sizeof line, "%llu,%.17g,%.17g,%d\n",
                    static_cast<unsigned long long>(v.value), a.radians, kTwoPi - a.radians,
                    a.boundary ? 1 : 0);
      out += line;
    }
    return {kExitSuccess, out};
  }
  Json j;
  j["vertices"] = Json::array();
  for (VertexId v : s.vertices()) {
    const ConeAngle a = VertexConeAngle(s, v);
    Json row;
    row["vertex"] = v.value;
    row["cone_angle"] = a.radians;
    row["boundary"] = a.boundary;
    if (a.boundary) {
      row["defect"] = nullptr;
    } else {
      row["defect"] = kTwoPi - a.radians;
    }
    j["vertices"].push_back(row);
  }
  j["total_defect"] = TotalAngleDefect(s);
  j["euler_characteristic"] = s.euler_characteristic();
  j["closed"] = s.is_closed();
  if (s.is_closed()) j["defect_target"] = kTwoPi * static_cast<double>(s.euler_characteristic());
  return {kExitSuccess, j.dump(2) + "\n"};
}

CertificationMode ParseMode(const std::string& mode) {
  if (mode == "lipschitz") return CertificationMode::kLipschitz;
  if (mode == "quasiconformal") return CertificationMode::kQuasiconformal;
  if (mode == "hypothesis") return CertificationMode::kAngleHypothesis;
  if (mode == "obstruction") return CertificationMode::kAngleObstruction;
  throw UsageError("unknown mode '" + mode + "'");
}

RunResult RunCertify(const CommandInvocation& inv) {
  RequireJson(inv);
  if (!inv.mode) throw UsageError("certify needs --mode");
  const CertificationMode mode = ParseMode(*inv.mode);
  const bool angle_mode =
      mode == CertificationMode::kAngleHypothesis || mode == CertificationMode::kAngleObstruction;
  if (angle_mode) {
    if (!inv.K) throw UsageError("mode " + *inv.mode + " needs --K");
    if (inv.minimal) throw UsageError("--minimal applies to lipschitz and quasiconformal modes");
  } else if (!inv.M && !inv.minimal) {
    throw UsageError("mode " + *inv.mode + " needs --M or --minimal");
  }

  const PolyhedralSurface s = LoadSurface(inv);
  CertificationReport report;
  if (angle_mode) {
    report = AngleWindowCheck(s, *inv.K, mode);
  } else {
    std::optional<int> minimal;
    if (inv.minimal) minimal = MinimalM(s, mode);
    const int M = inv.M ? *inv.M : *minimal;
    report = mode == CertificationMode::kLipschitz ? CertifyLipschitz(s, M) : CertifyQuasiconformal(s, M);
    report.minimal_m = minimal;
  }
  return {report.pass ? kExitSuccess : kExitCertificationFailed, ToJson(report)};
}

RunResult RunSmoothVerify(const CommandInvocation& inv) {
  RequireJson(inv);
  const PolyhedralSurface s = LoadSurface(inv);
  VerificationOptions options;
  options.grid = inv.grid;
  options.quadrature_tol = inv.tolerance;
  const VerificationReport report = GlobalVerification(SmoothSurface(s), options);
  return {report.pass ? kExitSuccess : kExitCertificationFailed, ToJson(report)};
}

RunResult RunSample(const CommandInvocation& inv) {
  if (!inv.vertex) throw UsageError("sample needs --vertex");
  const PolyhedralSurface s = LoadSurface(inv);
  const auto rows = SampleFields(SmoothSurface(s), VertexId{*inv.vertex}, inv.grid);
  if (inv.format == "csv") return {kExitSuccess, WriteFieldCsv(rows)};
  Json j = Json::array();
  for (const FieldSample& row : rows) {
    j.push_back({{"r", row.r}, {"phi", row.phi}, {"g_theta_theta", row.g_theta_theta},
                 {"curvature", row.curvature}});
  }
  return {kExitSuccess, j.dump(2) + "\n"};
}

std::string OneLineDiagnostic(const std::string& code, const std::string& message) {
  return Json{{"error", code}, {"message", message}}.dump() + "\n";
}

}  // namespace

const char* SubcommandName(Subcommand subcommand) {
  switch (subcommand) {
    case Subcommand::kValidate: return "validate";
    case Subcommand::kAngles: return "angles";
    case Subcommand::kCertify: return "certify";
    case Subcommand::kSmoothVerify: return "smooth-verify";
    case Subcommand::kSample: return "sample";
  }
  return "unknown";
}

RunResult Run(const CommandInvocation& inv) {
  if (inv.format != "json" && inv.format != "csv") throw UsageError("--format must be json or csv");
  if (inv.input_format && *inv.input_format != "json" && *inv.input_format != "off") {
    throw UsageError("--format-in must be json or off");
  }
  switch (inv.subcommand) {
    case Subcommand::kValidate: return RunValidate(inv);
    case Subcommand::kAngles: return RunAngles(inv);
    case Subcommand::kCertify: return RunCertify(inv);
    case Subcommand::kSmoothVerify: return RunSmoothVerify(inv);
    case Subcommand::kSample: return RunSample(inv);
  }
  throw UsageError("unknown subcommand");
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intrinsic polyhedral surfaces: validation, certification and cone smoothing"};
  app.require_subcommand(1, 1);

  CommandInvocation inv;
  std::string mode, format_in;
  int M = 0;
  double K = 0.0;
  std::uint64_t vertex = 0;
  std::size_t grid = inv.grid;
  std::string output;

  app.option_defaults()->always_capture_default();
  app.add_option("--input", inv.input_path, "Surface file (.json intrinsic or .off)")->required();
  app.add_option("--output", output, "Write the report here instead of stdout");
  app.add_option("--format", inv.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--format-in", format_in, "Input format, overriding the file extension")
      ->check(CLI::IsMember({"json", "off"}));
  auto* m_opt = app.add_option("--M", M, "Simplex-count and bi-Lipschitz bound")
                    ->check(CLI::PositiveNumber);
  auto* k_opt = app.add_option("--K", K, "Cone-angle window parameter")->check(CLI::Range(1.0, 1e300));
  auto* mode_opt = app.add_option("--mode", mode, "Certification mode")
                       ->check(CLI::IsMember({"lipschitz", "quasiconformal", "hypothesis", "obstruction"}));
  app.add_option("--grid", grid, "Curvature grid size, or sample count for `sample`")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", inv.tolerance, "Quadrature tolerance")->check(CLI::PositiveNumber);
  auto* vertex_opt = app.add_option("--vertex", vertex, "Vertex id for `sample`");
  app.add_flag("--minimal", inv.minimal, "Also search for the smallest passing M");

  struct Entry {
    Subcommand id;
    const char* help;
  };
  const std::vector<Entry> entries = {
      {Subcommand::kValidate, "Check the surface and print its statistics"},
      {Subcommand::kAngles, "Per-vertex cone angles and defects"},
      {Subcommand::kCertify, "Lipschitz, quasiconformal or cone-angle certification"},
      {Subcommand::kSmoothVerify, "Smooth every vertex and verify the curvature bound"},
      {Subcommand::kSample, "Sample the smoothed metric around one vertex"},
  };
  std::vector<std::pair<CLI::App*, Subcommand>> subcommands;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(SubcommandName(e.id), e.help);
    sub->fallthrough();
    subcommands.emplace_back(sub, e.id);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    out << OneLineDiagnostic("UsageError", e.what());
    err << "conesmooth: usage error: " << e.what() << "\n";
    return kExitUsageError;
  }

  for (const auto& [sub, id] : subcommands) {
    if (sub->parsed()) inv.subcommand = id;
  }
  if (*m_opt) inv.M = M;
  if (*k_opt) inv.K = K;
  if (*mode_opt) inv.mode = mode;
  if (*vertex_opt) inv.vertex = vertex;
  if (!format_in.empty()) inv.input_format = format_in;
  if (!output.empty()) inv.output_path = output;
  inv.grid = grid;

  try {
    const RunResult result = Run(inv);
    if (inv.output_path) {
      std::ofstream file(*inv.output_path, std::ios::binary);
      if (!file || !(file << result.document)) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write output file '" + *inv.output_path + "'");
      }
    } else {
      out << result.document;
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    out << OneLineDiagnostic("UsageError", e.what());
    err << "conesmooth: usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    out << OneLineDiagnostic(std::string(ErrorCodeName(e.code())), e.what());
    err << "conesmooth: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace conesmooth::cli
