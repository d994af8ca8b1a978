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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphqmc/discrepancy.hpp"
#include "sphqmc/netgen.hpp"
#include "sphqmc/quadrature.hpp"
#include "sphqmc/sphere.hpp"

namespace sphqmc::cli {

const std::array<ReferenceRow, 20> kReferenceTable{{
    {1, 6.2622e-01, 1.7712},  {2, 2.1149e-01, 1.6920},  {3, 8.1448e-02, 1.8430},
    {4, 3.5091e-02, 2.2459},  {5, 8.0526e-03, 1.4577},  {6, 2.6309e-03, 1.3470},
    {7, 9.4336e-04, 1.3661},  {8, 3.4501e-04, 1.4132},  {9, 1.3374e-04, 1.5495},
    {10, 4.6029e-05, 1.5083}, {11, 1.8846e-05, 1.7468}, {12, 6.4670e-06, 1.6953},
    {13, 1.7873e-06, 1.3252}, {14, 5.6815e-07, 1.1915}, {15, 1.9912e-07, 1.1811},
    {16, 6.3194e-08, 1.0602}, {17, 2.4122e-08, 1.1447}, {18, 9.1906e-09, 1.2335},
    {19, 3.7001e-09, 1.4047}, {20, 1.3068e-09, 1.4032},
}};

namespace {

/// Configuration errors that map to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Target { square, sphere };
enum class Format { csv, json };

/// A measure requested on the command line: a discrepancy kind or the
/// squared worst-case error.
struct Measure {
  std::string name;
  std::optional<DiscrepancyKind> kind;
};

Measure parse_measure(const std::string& raw) {
  static const std::map<std::string, Measure> names = {
      {"star", {"star", DiscrepancyKind::planar_star}},
      {"planar_star", {"star", DiscrepancyKind::planar_star}},
      {"extreme", {"extreme", DiscrepancyKind::planar_extreme}},
      {"planar_extreme", {"extreme", DiscrepancyKind::planar_extreme}},
      {"sphere_star", {"sphere_star", DiscrepancyKind::sphere_rect_star}},
      {"sphere_rect_star", {"sphere_star", DiscrepancyKind::sphere_rect_star}},
      {"sphere_extreme", {"sphere_extreme", DiscrepancyKind::sphere_rect_extreme}},
      {"sphere_rect_extreme", {"sphere_extreme", DiscrepancyKind::sphere_rect_extreme}},
      {"cap_l2", {"cap_l2", DiscrepancyKind::cap_l2}},
      {"l2", {"cap_l2", DiscrepancyKind::cap_l2}},
      {"cuifreeden", {"cuifreeden", DiscrepancyKind::cui_freeden}},
      {"cui_freeden", {"cuifreeden", DiscrepancyKind::cui_freeden}},
      {"wce", {"wce", std::nullopt}},
      {"e2", {"wce", std::nullopt}},
  };
  const auto it = names.find(raw);
  if (it == names.end()) throw ConfigError("unknown measure '" + raw + "'");
  return it->second;
}

PrimeBase make_base(std::uint32_t b) {
  if (!is_prime(b)) throw ConfigError("base " + std::to_string(b) + " is not prime");
  return PrimeBase(b);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of Monte Carlo replicate `replicate` at size exponent m.
std::uint64_t replicate_seed(std::uint64_t seed, int m, int replicate) {
  return splitmix64(splitmix64(seed ^ (static_cast<std::uint64_t>(m) << 32)) +
                    static_cast<std::uint64_t>(replicate));
}

void emit(const Table& table, Format format, const std::string& output, std::ostream& out) {
  const std::string text = format == Format::csv ? to_csv(table) : to_json(table);
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + output + "'");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

struct CommonOptions {
  std::uint32_t base = 2;
  std::optional<std::uint64_t> scramble_seed;
  std::string format = "csv";
  std::string output;
};

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::csv;
  if (f == "json") return Format::json;
  throw ConfigError("unknown format '" + f + "'");
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--base", o.base, "Prime base b")->capture_default_str();
  cmd->add_option("--scramble-seed", o.scramble_seed, "Seed for linear scrambling + digital shift");
  cmd->add_option("--format", o.format, "csv or json")->capture_default_str();
  cmd->add_option("-o,--output", o.output, "Output path (default: standard output)");
}

void add_generator_metadata(Table& t, PrimeBase base, const std::optional<std::uint64_t>& seed) {
  t.metadata.emplace_back("base", std::to_string(base.value()));
  t.metadata.emplace_back("matrices", "identity_pascal");
  if (seed) {
    t.metadata.emplace_back("scramble_seed", std::to_string(*seed));
    t.metadata.emplace_back("scramble_rng", std::string(kScrambleRngName));
  } else {
    t.metadata.emplace_back("scramble", "none");
  }
}

UnitSquarePointSet build_points(PrimeBase base, std::optional<int> m,
                                std::optional<std::uint64_t> count,
                                const std::optional<std::uint64_t>& seed) {
  UnitSquarePointSet points = [&] {
    if (count) {
      if (*count == 0) throw ConfigError("--count must be >= 1");
      int depth = 0;
      while (checked_power(base, depth) < *count) ++depth;
      if (m) {
        if (*m < depth) throw ConfigError("--m is too small for --count");
        depth = *m;
      }
      return digital_sequence_prefix(base, *count, std::max(depth, 1));
    }
    if (!m) throw ConfigError("either --m or --count is required");
    if (*m < 1) throw ConfigError("--m must be >= 1");
    (void)checked_power(base, *m);
    return digital_net(DigitalNetSpec::identity_pascal(base, *m));
  }();
  if (seed) {
    const int depth = std::max(points.digits(), scramble_depth(base));
    points = scramble(points, ScrambleState::from_seed(base, depth, *seed));
  }
  return points;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  CommonOptions common;
  std::optional<int> m;
  std::optional<std::uint64_t> count;
  std::string target = "square";
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const PrimeBase base = make_base(o.common.base);
  const Format format = parse_format(o.common.format);
  Target target;
  if (o.target == "square") {
    target = Target::square;
  } else if (o.target == "sphere") {
    target = Target::sphere;
  } else {
    throw ConfigError("unknown target '" + o.target + "'");
  }
  const auto points = build_points(base, o.m, o.count, o.common.scramble_seed);

  Table t;
  t.metadata.emplace_back("command", "gen");
  add_generator_metadata(t, base, o.common.scramble_seed);
  if (o.m) t.metadata.emplace_back("m", std::to_string(*o.m));
  if (o.count) t.metadata.emplace_back("count", std::to_string(*o.count));
  t.metadata.emplace_back("digits", std::to_string(points.digits()));
  t.metadata.emplace_back("points", std::to_string(points.size()));
  t.metadata.emplace_back("target", o.target);
  if (target == Target::square) {
    t.columns = {"n", "x1", "x2", "u1", "u2", "denominator"};
    const auto denom = static_cast<std::int64_t>(points.denominator());
    for (std::size_t k = 0; k < points.size(); ++k) {
      const auto& u = points.numerators()[k];
      const auto& x = points.coords()[k];
      t.rows.push_back({static_cast<std::int64_t>(k), x[0], x[1], static_cast<std::int64_t>(u[0]),
                        static_cast<std::int64_t>(u[1]), denom});
    }
  } else {
    t.columns = {"n", "x", "y", "z"};
    const auto sphere = lift(points);
    for (std::size_t k = 0; k < sphere.size(); ++k) {
      const auto& p = sphere.points()[k];
      t.rows.push_back({static_cast<std::int64_t>(k), p.x, p.y, p.z});
    }
  }
  emit(t, format, o.common.output, out);
  return kExitOk;
}

// ---------------------------------------------------------------- measure

struct MeasureOptions {
  CommonOptions common;
  std::optional<int> m;
  std::optional<std::uint64_t> count;
  std::vector<std::string> measures;
  std::size_t exact_limit = kDefaultExtremeExactLimit;
  std::string input;
  std::string cui_variant = "log_of_square";
};

/// Point data for measurement: either exact numerators or sphere points.
struct Loaded {
  std::optional<UnitSquarePointSet> square;
  std::optional<SpherePointSet> sphere;
  std::vector<std::array<double, 2>> planar;
};

std::string lookup(const Table& t, const std::string& key) {
  for (const auto& [k, v] : t.metadata) {
    if (k == key) return v;
  }
  return {};
}

std::size_t column_index(const Table& t, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  if (it == t.columns.end()) throw ConfigError("input lacks column '" + name + "'");
  return static_cast<std::size_t>(it - t.columns.begin());
}

const std::string& text_cell(const std::vector<Cell>& row, std::size_t i) {
  if (i >= row.size()) throw ConfigError("short row in input");
  return std::get<std::string>(row[i]);
}

Loaded load_input(const std::string& path) {
  const Table t = parse_csv(read_file(path));
  Loaded loaded;
  const bool square = std::find(t.columns.begin(), t.columns.end(), "u1") != t.columns.end();
  if (square) {
    const std::string base_text = lookup(t, "base");
    const std::string digits_text = lookup(t, "digits");
    if (base_text.empty() || digits_text.empty()) {
      throw ConfigError("square input needs base= and digits= metadata");
    }
    const PrimeBase base = make_base(static_cast<std::uint32_t>(std::stoul(base_text)));
    const int digits = std::stoi(digits_text);
    const auto iu1 = column_index(t, "u1");
    const auto iu2 = column_index(t, "u2");
    std::vector<UnitSquarePointSet::Numerators> nums;
    for (const auto& row : t.rows) {
      nums.push_back({std::stoull(text_cell(row, iu1)), std::stoull(text_cell(row, iu2))});
    }
    loaded.square.emplace(base, digits, std::move(nums));
    loaded.sphere.emplace(lift(*loaded.square));
    loaded.planar = loaded.square->coords();
  } else {
    const auto ix = column_index(t, "x");
    const auto iy = column_index(t, "y");
    const auto iz = column_index(t, "z");
    std::vector<SpherePoint> pts;
    for (const auto& row : t.rows) {
      pts.push_back({std::stod(text_cell(row, ix)), std::stod(text_cell(row, iy)),
                     std::stod(text_cell(row, iz))});
    }
    loaded.sphere.emplace(std::move(pts));
    for (const auto& p : loaded.sphere->points()) loaded.planar.push_back(inverse_phi(p));
  }
  return loaded;
}

int cmd_measure(const MeasureOptions& o, std::ostream& out) {
  const Format format = parse_format(o.common.format);
  if (o.measures.empty()) throw ConfigError("--measures must name at least one measure");
  std::vector<Measure> measures;
  for (const auto& raw : o.measures) measures.push_back(parse_measure(raw));
  LogTermVariant variant;
  if (o.cui_variant == "log_of_square") {
    variant = LogTermVariant::log_of_square;
  } else if (o.cui_variant == "square_of_log") {
    variant = LogTermVariant::square_of_log;
  } else {
    throw ConfigError("unknown --cui-variant '" + o.cui_variant + "'");
  }

  Table t;
  t.metadata.emplace_back("command", "measure");
  Loaded data;
  if (!o.input.empty()) {
    if (o.m || o.count || o.common.scramble_seed) {
      throw ConfigError("--input cannot be combined with --m, --count or --scramble-seed");
    }
    data = load_input(o.input);
    t.metadata.emplace_back("input", o.input);
  } else {
    const PrimeBase base = make_base(o.common.base);
    add_generator_metadata(t, base, o.common.scramble_seed);
    data.square.emplace(build_points(base, o.m, o.count, o.common.scramble_seed));
    data.sphere.emplace(lift(*data.square));
    data.planar = data.square->coords();
    if (o.m) t.metadata.emplace_back("m", std::to_string(*o.m));
    if (o.count) t.metadata.emplace_back("count", std::to_string(*o.count));
    t.metadata.emplace_back("digits", std::to_string(data.square->digits()));
  }
  t.metadata.emplace_back("points", std::to_string(data.sphere->size()));
  t.metadata.emplace_back("extreme_exact_limit", std::to_string(o.exact_limit));
  t.metadata.emplace_back("cui_variant", o.cui_variant);

  t.columns = {"kind", "value", "exact", "lower", "upper"};
  auto add_value = [&](const std::string& name, double v, bool exact) {
    t.rows.push_back({name, v, exact, v, v});
  };
  auto add_result = [&](const std::string& name, const ExtremeResult& r) {
    if (const auto* v = std::get_if<DiscrepancyValue>(&r)) {
      add_value(name, v->value, v->exact);
    } else {
      const auto& b = std::get<DiscrepancyBracket>(r);
      t.rows.push_back({name, std::monostate{}, false, b.lower, b.upper});
    }
  };
  const auto limit = o.exact_limit;
  for (const auto& m : measures) {
    if (!m.kind) {
      add_value(m.name, worst_case_error_sq(*data.sphere), true);
      continue;
    }
    switch (*m.kind) {
      case DiscrepancyKind::planar_star:
        add_value(m.name, star_discrepancy_exact(data.planar), true);
        break;
      case DiscrepancyKind::planar_extreme:
        if (data.planar.size() <= limit) {
          add_value(m.name, extreme_discrepancy_exact(data.planar), true);
        } else {
          const double star = star_discrepancy_exact(data.planar);
          add_result(m.name, DiscrepancyBracket{*m.kind, star, 4.0 * star});
        }
        break;
      case DiscrepancyKind::sphere_rect_star:
        add_result(m.name, sphere_rect_star_discrepancy(*data.sphere));
        break;
      case DiscrepancyKind::sphere_rect_extreme:
        add_result(m.name, sphere_rect_extreme_discrepancy(*data.sphere, limit));
        break;
      case DiscrepancyKind::cap_l2:
        add_result(m.name, cap_l2_discrepancy(*data.sphere));
        break;
      case DiscrepancyKind::cui_freeden:
        add_result(m.name, cui_freeden_discrepancy(*data.sphere, variant));
        break;
    }
  }
  emit(t, format, o.common.output, out);
  return kExitOk;
}

// ---------------------------------------------------------------- table1 / compare

struct TableOptions {
  CommonOptions common;
  int min_m = 1;
  int max_m = kDefaultMaxM;
  bool reference = false;
  bool allow_slow = false;
};

void check_range(int min_m, int max_m, bool allow_slow) {
  if (max_m < 1 || min_m < 1 || min_m > max_m) {
    throw ConfigError("empty m range [" + std::to_string(min_m) + ", " + std::to_string(max_m) + "]");
  }
  if (max_m > kDefaultMaxM && !allow_slow) {
    throw ConfigError("--max-m above " + std::to_string(kDefaultMaxM) + " needs --allow-slow");
  }
}

int cmd_table1(const TableOptions& o, std::ostream& out) {
  const Format format = parse_format(o.common.format);
  check_range(o.min_m, o.max_m, o.allow_slow);
  const PrimeBase base = make_base(o.common.base);
  NetRecipe recipe{base, o.common.scramble_seed};
  std::vector<int> ms(static_cast<std::size_t>(o.max_m - o.min_m + 1));
  std::iota(ms.begin(), ms.end(), o.min_m);
  for (int m : ms) (void)checked_power(base, m);
  const auto reports = convergence_table(ms, recipe);

  Table t;
  t.metadata.emplace_back("command", "table1");
  add_generator_metadata(t, base, o.common.scramble_seed);
  t.columns = {"m", "N", "e2", "n_pow_neg_1_5", "scaled_e2"};
  const bool with_reference = o.reference && base.value() == 2 && !o.common.scramble_seed;
  if (o.reference && !with_reference) {
    throw ConfigError("--reference applies only to unscrambled base-2 nets");
  }
  if (with_reference) {
    t.columns.insert(t.columns.end(),
                     {"reference_e2", "rel_dev_e2", "reference_scaled", "rel_dev_scaled"});
  }
  for (const auto& r : reports) {
    const double n = static_cast<double>(r.n);
    std::vector<Cell> row{static_cast<std::int64_t>(r.m), static_cast<std::int64_t>(r.n), r.e2,
                          std::pow(n, -1.5), r.e2_scaled};
    if (with_reference) {
      if (r.m >= 1 && r.m <= static_cast<int>(kReferenceTable.size())) {
        const auto& ref = kReferenceTable[static_cast<std::size_t>(r.m - 1)];
        row.insert(row.end(), {ref.e2, std::abs(r.e2 - ref.e2) / ref.e2, ref.scaled,
                               std::abs(r.e2_scaled - ref.scaled) / ref.scaled});
      } else {
        row.insert(row.end(), 4, std::monostate{});
      }
    }
    t.rows.push_back(std::move(row));
  }
  emit(t, format, o.common.output, out);
  return kExitOk;
}

struct CompareOptions {
  CommonOptions common;
  int min_m = 1;
  int max_m = 10;
  std::uint64_t seed = 1;
  int mc_seeds = 10;
  bool allow_slow = false;
};

int cmd_compare(const CompareOptions& o, std::ostream& out) {
  const Format format = parse_format(o.common.format);
  check_range(o.min_m, o.max_m, o.allow_slow);
  if (o.mc_seeds < 1) throw ConfigError("--mc-seeds must be >= 1");
  const PrimeBase base = make_base(o.common.base);
  NetRecipe recipe{base, o.common.scramble_seed};

  Table t;
  t.metadata.emplace_back("command", "compare");
  add_generator_metadata(t, base, o.common.scramble_seed);
  t.metadata.emplace_back("mc_seed", std::to_string(o.seed));
  t.metadata.emplace_back("mc_replicates", std::to_string(o.mc_seeds));
  t.metadata.emplace_back("mc_rng", "mt19937_64");
  t.columns = {"m", "N", "e2_net", "e2_mc", "n_pow_neg_1_5", "nine_quarters_n_pow_neg_1_5"};
  for (int m = o.min_m; m <= o.max_m; ++m) {
    const std::uint64_t count = checked_power(base, m);
    const double e2_net = worst_case_error_sq(lift(make_net(recipe, m)));
    CompensatedSum mc;
    for (int s = 0; s < o.mc_seeds; ++s) {
      mc.add(worst_case_error_sq(random_sphere_points(count, replicate_seed(o.seed, m, s))));
    }
    const double ref = std::pow(static_cast<double>(count), -1.5);
    t.rows.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(count), e2_net,
                      mc.value() / o.mc_seeds, ref, 2.25 * ref});
  }
  emit(t, format, o.common.output, out);
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------- rendering

std::string format_double(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string render_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      c);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string s;
  for (const auto& [k, v] : table.metadata) s += "# " + k + "=" + v + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    s += (i ? "," : "") + table.columns[i];
  }
  s += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ",";
      s += render_cell(row[i]);
    }
    s += "\n";
  }
  return s;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.metadata) doc["metadata"][k] = v;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      rec[table.columns[i]] = json_cell(row[i]);
    }
    doc["rows"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = line.substr(line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq != std::string::npos) t.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    auto fields = split(line, ',');
    if (!header) {
      t.columns = std::move(fields);
      header = true;
      continue;
    }
    if (fields.size() != t.columns.size()) throw std::invalid_argument("CSV row width mismatch");
    std::vector<Cell> row;
    for (auto& f : fields) row.emplace_back(std::move(f));
    t.rows.push_back(std::move(row));
  }
  if (!header) throw std::invalid_argument("CSV input has no header");
  return t;
}

// ---------------------------------------------------------------- entry point

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital nets lifted to the sphere: generation, discrepancy and worst-case error"};
  app.name("sphqmc");
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit net points in the square or on the sphere");
  add_common(gen_cmd, gen.common);
  gen_cmd->add_option("--m", gen.m, "Net exponent: N = b^m");
  gen_cmd->add_option("--count", gen.count, "Emit a prefix of the (0,2)-sequence instead");
  gen_cmd->add_option("--target", gen.target, "square or sphere")->capture_default_str();

  MeasureOptions measure;
  auto* measure_cmd = app.add_subcommand("measure", "Compute discrepancies and worst-case error");
  add_common(measure_cmd, measure.common);
  measure_cmd->add_option("--m", measure.m, "Net exponent: N = b^m");
  measure_cmd->add_option("--count", measure.count, "Measure a sequence prefix instead");
  measure_cmd->add_option("--measures", measure.measures,
                          "Comma-separated: star,extreme,sphere_star,sphere_extreme,cap_l2,"
                          "cuifreeden,wce")
      ->delimiter(',')
      ->required();
  measure_cmd->add_option("--exact-limit", measure.exact_limit,
                          "Largest N for exact extreme discrepancy")
      ->capture_default_str();
  measure_cmd->add_option("--input", measure.input, "Re-ingest points from a gen CSV file");
  measure_cmd->add_option("--cui-variant", measure.cui_variant,
                          "log_of_square or square_of_log")
      ->capture_default_str();

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table1", "Worst-case error of lifted base-b nets by m");
  add_common(table_cmd, table.common);
  table_cmd->add_option("--min-m", table.min_m)->capture_default_str();
  table_cmd->add_option("--max-m", table.max_m)->capture_default_str();
  table_cmd->add_flag("--reference", table.reference,
                      "Append published base-2 values and relative deviations");
  table_cmd->add_flag("--allow-slow", table.allow_slow, "Permit m above 13");

  CompareOptions compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Net vs Monte Carlo worst-case error with N^-3/2 guides");
  add_common(compare_cmd, compare.common);
  compare_cmd->add_option("--min-m", compare.min_m)->capture_default_str();
  compare_cmd->add_option("--max-m", compare.max_m)->capture_default_str();
  compare_cmd->add_option("--seed", compare.seed, "Monte Carlo base seed")->capture_default_str();
  compare_cmd->add_option("--mc-seeds", compare.mc_seeds, "Monte Carlo replicates per m")
      ->capture_default_str();
  compare_cmd->add_flag("--allow-slow", compare.allow_slow, "Permit m above 13");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "sphqmc: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*measure_cmd) return cmd_measure(measure, out);
    if (*table_cmd) return cmd_table1(table, out);
    if (*compare_cmd) return cmd_compare(compare, out);
  } catch (const OverflowError& e) {
    err << "sphqmc: overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::invalid_argument& e) {
    err << "sphqmc: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::domain_error& e) {
    err << "sphqmc: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "sphqmc: error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInvalidConfig;
}

}  // namespace sphqmc::cli
