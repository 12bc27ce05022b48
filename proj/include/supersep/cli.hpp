/* Copyright 2026 The Supersep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SUPERSEP_CLI_HPP_
#define SUPERSEP_CLI_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace supersep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitContract = 3;

enum class OutputFormat { csv, json, text };

/// One invocation: subcommand, raw parameter strings keyed by flag name
/// without dashes ("b", "lambda", "window", ...), and where to write.
/// An empty output path or "-" means the `out` stream given to run().
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::string output_path;
  OutputFormat output_format = OutputFormat::csv;
};

/// Executes `config`. Returns 0 on success, 2 on validation errors
/// (diagnostic on `err`), 3 when a numerical contract check fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) into a RunConfig
/// and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace supersep::cli

#endif  // SUPERSEP_CLI_HPP_
