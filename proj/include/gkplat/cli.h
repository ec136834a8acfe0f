// Copyright 2026 The gkplat Authors
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

#ifndef GKPLAT_CLI_H
#define GKPLAT_CLI_H

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gkplat {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsageError = 2;

/// "start:stop:points", logarithmically spaced, inclusive of both ends. Throws
/// std::invalid_argument if malformed, non-positive, or points < 1.
std::vector<double> parse_log_grid(const std::string& spec);

/// printf("%.17g").
std::string format_number(double v);

/// Serializes JSON writing every floating-point number with format_number.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

std::string sha256_hex(const std::string& data);

/// Runs one subcommand. Output goes to --out when given, otherwise to `out`;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkplat

#endif  // GKPLAT_CLI_H
