// Copyright 2026 The sphqmc Authors
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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sphqmc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitOverflow = 3;

/// Largest m accepted by table1/compare without --allow-slow.
inline constexpr int kDefaultMaxM = 13;

/// Worst-case errors e^2 and scaled values N^{3/2} e^2 for the base-2
/// identity/Pascal nets lifted to the sphere, m = 1..20, as printed with
/// five significant digits in the literature.
struct ReferenceRow {
  int m;
  double e2;
  double scaled;
};
extern const std::array<ReferenceRow, 20> kReferenceTable;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

/// A table with '#'-comment metadata, renderable as CSV or JSON.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits; negative zero prints as 0.
std::string format_double(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Parses CSV emitted by to_csv: '#' lines become metadata (key=value
/// tokens), the first other line is the header. Throws std::invalid_argument.
Table parse_csv(const std::string& text);

}  // namespace sphqmc::cli
