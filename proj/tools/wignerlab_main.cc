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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wignerlab/errors.h"
#include "wignerlab/suite.h"

using wignerlab::RunConfig;
using wignerlab::UsageError;

namespace {

size_t env_dense_cap() {
  const char* v = std::getenv("WIGNERLAB_DENSE_CAP");
  if (!v || !*v) return wignerlab::kDefaultDenseCap;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw UsageError(std::string("WIGNERLAB_DENSE_CAP must be a positive integer, got '") + v + "'");
  return static_cast<size_t>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wignerlab: checks for dualities and non-invertible symmetries of the transverse-field Ising chain"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  std::string sign = "+";
  std::string format = "text";
  std::string fault = "none";
  app.add_option("--L", cfg.L, "number of matter sites")->capture_default_str();
  app.add_option("--sign", sign, "sector sign, + or -")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for random states")->capture_default_str();
  app.add_option("--format", format, "json | csv | text")->capture_default_str();
  app.add_option("--out", cfg.out_path, "write the report here instead of stdout");
  app.add_option("--tol-scale", cfg.tol_scale, "multiplies every pass threshold")->capture_default_str();
  app.add_option("--circuit", cfg.circuit, "u1 | u2 | u-gauged")->capture_default_str();
  app.add_option("--model", cfg.model, "h1 | h2 | h-periodic | h-antiperiodic | h-min-gauged | h-full-gauged");
  app.add_option("--inject-fault", fault, "none | flip-boundary-sign | nontrivial-projector")->capture_default_str();
  app.add_option("--pairs", cfg.pairs, "random pairs per transition experiment")->capture_default_str();
  app.add_option("--dump", cfg.dump_path, "polar: write the analysed operator here");
  app.add_option("--dump-format", cfg.dump_format, "binary | csv")->capture_default_str();

  for (const auto& name : wignerlab::command_names()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (sign == "+" || sign == "+1" || sign == "1") {
      cfg.sign = 1;
    } else if (sign == "-" || sign == "-1") {
      cfg.sign = -1;
    } else {
      throw UsageError("--sign must be + or -");
    }
    cfg.format = wignerlab::parse_output_format(format);
    cfg.fault = wignerlab::parse_fault(fault);
    cfg.dense_cap = env_dense_cap();

    const wignerlab::Report report = wignerlab::run_command(cfg);
    const std::string text = report.render(cfg.format);
    if (cfg.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out_path);
      if (!out) throw UsageError("cannot write " + cfg.out_path);
      out << text;
    }
    return report.exit_code();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const wignerlab::DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
