// Copyright 2026 The wignerlab Authors
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

#ifndef WIGNERLAB_SUITE_H
#define WIGNERLAB_SUITE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace wignerlab {

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

enum class OutputFormat { kJson, kCsv, kText };

enum class Fault {
  kNone,
  kFlipBoundarySign,     // H^+ gets the antiperiodic boundary term
  kNontrivialProjector,  // D^ built with (1 + eta)/2 instead of the ancilla projector
};

inline constexpr size_t kDefaultDenseCap = 10;
inline constexpr size_t kGaussCap = 5;

struct RunConfig {
  std::string command;
  std::string model;           ///< spectrum only
  std::string circuit = "u2";  ///< verify-automorphism only
  size_t L = 3;
  int sign = 1;
  uint64_t seed = 0;
  double tol_scale = 1.0;
  OutputFormat format = OutputFormat::kText;
  std::string out_path;
  Fault fault = Fault::kNone;
  size_t dense_cap = kDefaultDenseCap;  ///< sites; WIGNERLAB_DENSE_CAP overrides
  size_t pairs = 100;                   ///< random pairs per transition experiment
  std::string dump_path;                ///< polar: operator dump
  std::string dump_format = "binary";   ///< binary | csv

  /// Throws UsageError for invalid values or combinations.
  void validate() const;
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& s);
std::string to_string(Fault f);
Fault parse_fault(const std::string& s);

enum class CheckStatus { kPass, kFail, kSkipped };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::optional<double> measured;
  std::optional<double> threshold;
  std::string comparator;  ///< "<", ">", "==", or empty for skipped
  std::string note;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<CheckRecord> records;
  nlohmann::json data = nlohmann::json::object();
  std::optional<std::vector<double>> eigenvalues;
  std::string timestamp;
  double wall_seconds = 0.0;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }

  /// The "timing" member is the only field that varies between identical runs.
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(OutputFormat f) const;

  // Helpers used by the commands.
  void less(std::string name, double measured, double threshold, std::string note = {});
  void greater(std::string name, double measured, double threshold, std::string note = {});
  void equal(std::string name, double measured, double expected, double tol, std::string note = {});
  void skip(std::string name, std::string note);
};

Report cmd_verify_automorphism(const RunConfig& config);
Report cmd_commutators(const RunConfig& config);
Report cmd_transition_check(const RunConfig& config);
Report cmd_polar(const RunConfig& config);
Report cmd_spectrum(const RunConfig& config);
Report cmd_gauge_equivalence(const RunConfig& config);
Report cmd_full_suite(const RunConfig& config);

/// Dispatches on config.command, fills timing. Throws UsageError for unknown commands.
Report run_command(const RunConfig& config);

std::vector<std::string> command_names();

}  // namespace wignerlab

#endif  // WIGNERLAB_SUITE_H
