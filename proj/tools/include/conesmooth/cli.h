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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace conesmooth::cli {

enum class Subcommand { kValidate, kAngles, kCertify, kSmoothVerify, kSample };

const char* SubcommandName(Subcommand subcommand);

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCertificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUsageError = 64;

/// A fully parsed command line. Fields that a subcommand does not use are
/// ignored by it.
struct CommandInvocation {
  Subcommand subcommand = Subcommand::kValidate;
  std::string input_path;
  std::optional<std::string> output_path;
  std::optional<std::string> input_format;  // "json" or "off"; sniffed when absent
  std::string format = "json";               // "json" or "csv"
  std::optional<int> M;
  std::optional<double> K;
  std::optional<std::string> mode;
  std::size_t grid = 10'000;
  double tolerance = 1e-8;
  std::optional<std::uint64_t> vertex;
  bool minimal = false;
};

/// Thrown for invocations that are well formed for the parser but invalid
/// for the chosen subcommand, e.g. `certify` without a mode.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  int exit_code = kExitSuccess;
  std::string document;  // report written to --output or stdout
};

/**
 * Executes one subcommand. Reports a verdict through the exit code (0 pass,
 * 1 certification failure); input and library errors propagate as
 * conesmooth::Error, invalid option combinations as UsageError.
 */
RunResult Run(const CommandInvocation& invocation);

/// Full entry point: parses argv, runs, writes the report, and converts
/// errors into a one-line JSON diagnostic on `out` plus text on `err`.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conesmooth::cli
