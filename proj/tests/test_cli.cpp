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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using namespace sphqmc::cli;
using doctest::Approx;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cell(const Table& t, std::size_t row, const std::string& column) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), column);
  REQUIRE(it != t.columns.end());
  return std::get<std::string>(t.rows.at(row).at(static_cast<std::size_t>(it - t.columns.begin())));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sphqmc_test_" + name);
}

}  // namespace

TEST_CASE("number rendering round-trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  for (double v : {1.0 / 3.0, 2.0 / 7.0, 6.2622655214678569e-01, 1e-300, -123.456}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("gen square and sphere") {
  auto r = run_cli({"gen", "--base", "2", "--m", "1", "--target", "square"});
  REQUIRE(r.code == kExitOk);
  auto t = parse_csv(r.out);
  CHECK(t.columns == std::vector<std::string>{"n", "x1", "x2", "u1", "u2", "denominator"});
  REQUIRE(t.rows.size() == 2);
  CHECK(cell(t, 0, "x1") == "0");
  CHECK(cell(t, 1, "x1") == "0.5");
  CHECK(cell(t, 1, "x2") == "0.5");
  CHECK(cell(t, 1, "u2") == "1");
  CHECK(cell(t, 1, "denominator") == "2");

  r = run_cli({"gen", "--base", "2", "--m", "1", "--target", "sphere"});
  REQUIRE(r.code == kExitOk);
  t = parse_csv(r.out);
  CHECK(t.columns == std::vector<std::string>{"n", "x", "y", "z"});
  CHECK(cell(t, 0, "z") == "1");
  CHECK(cell(t, 1, "x") == "-1");
  CHECK(cell(t, 1, "y") == "0");
  CHECK(cell(t, 1, "z") == "0");

  r = run_cli({"gen", "--base", "3", "--count", "5"});
  REQUIRE(r.code == kExitOk);
  CHECK(parse_csv(r.out).rows.size() == 5);

  r = run_cli({"gen", "--m", "3", "--scramble-seed", "9"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("# scramble_seed=9") != std::string::npos);
  CHECK(r.out.find("# scramble_rng=mt19937_64") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"gen", "--base", "2", "--m", "64"}).code == kExitOverflow);
  CHECK(run_cli({"gen", "--base", "4", "--m", "2"}).code == kExitInvalidConfig);
  CHECK(run_cli({"gen"}).code == kExitInvalidConfig);
  CHECK(run_cli({"gen", "--m", "0"}).code == kExitInvalidConfig);
  CHECK(run_cli({"gen", "--m", "2", "--target", "torus"}).code == kExitInvalidConfig);
  CHECK(run_cli({"gen", "--m", "2", "--format", "xml"}).code == kExitInvalidConfig);
  CHECK(run_cli({"measure", "--m", "2"}).code == kExitInvalidConfig);
  CHECK(run_cli({"measure", "--m", "2", "--measures", "bogus"}).code == kExitInvalidConfig);
  CHECK(run_cli({"table1", "--max-m", "0"}).code == kExitInvalidConfig);
  CHECK(run_cli({"table1", "--max-m", "14"}).code == kExitInvalidConfig);
  CHECK(run_cli({"table1", "--max-m", "2", "--base", "3", "--reference"}).code ==
        kExitInvalidConfig);
  CHECK(run_cli({"compare", "--max-m", "3", "--mc-seeds", "0"}).code == kExitInvalidConfig);
  CHECK(run_cli({"frobnicate"}).code == kExitInvalidConfig);
  CHECK(run_cli({}).code == kExitInvalidConfig);
  const auto r = run_cli({"gen", "--base", "2", "--m", "64"});
  CHECK(r.out.empty());
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("measure") {
  auto r = run_cli({"measure", "--m", "1", "--measures", "wce"});
  REQUIRE(r.code == kExitOk);
  auto t = parse_csv(r.out);
  CHECK(t.columns == std::vector<std::string>{"kind", "value", "exact", "lower", "upper"});
  CHECK(std::stod(cell(t, 0, "value")) == Approx(6.2622e-01).epsilon(1e-3));

  r = run_cli({"measure", "--m", "2", "--measures", "star,extreme"});
  REQUIRE(r.code == kExitOk);
  t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 2);
  CHECK(std::stod(cell(t, 1, "value")) <= 4 * std::stod(cell(t, 0, "value")));

  r = run_cli({"measure", "--m", "2", "--measures", "cuifreeden"});
  REQUIRE(r.code == kExitOk);
  CHECK(std::stod(cell(parse_csv(r.out), 0, "value")) > 0.0);

  r = run_cli({"measure", "--m", "10", "--measures", "extreme", "--exact-limit", "100"});
  REQUIRE(r.code == kExitOk);
  t = parse_csv(r.out);
  CHECK(cell(t, 0, "value").empty());
  CHECK(cell(t, 0, "exact") == "false");
  CHECK(std::stod(cell(t, 0, "upper")) == 4 * std::stod(cell(t, 0, "lower")));
}

TEST_CASE("table1 and compare") {
  auto r = run_cli({"table1", "--max-m", "5", "--reference"});
  REQUIRE(r.code == kExitOk);
  auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 5);
  CHECK(std::stod(cell(t, 0, "e2")) == Approx(6.2622e-01).epsilon(1e-3));
  CHECK(std::stod(cell(t, 1, "e2")) == Approx(2.1149e-01).epsilon(1e-3));
  CHECK(std::stod(cell(t, 4, "e2")) == Approx(8.0526e-03).epsilon(1e-3));
  CHECK(std::stod(cell(t, 4, "n_pow_neg_1_5")) == Approx(5.5242e-03).epsilon(1e-4));
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::stod(cell(t, i, "rel_dev_e2")) < 1e-3);

  r = run_cli({"compare", "--max-m", "10", "--seed", "5"});
  REQUIRE(r.code == kExitOk);
  t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 10);
  for (std::size_t i = 4; i < 10; ++i) {
    CHECK(std::stod(cell(t, i, "e2_net")) < std::stod(cell(t, i, "nine_quarters_n_pow_neg_1_5")));
  }
  CHECK(run_cli({"compare", "--max-m", "10", "--seed", "5"}).out == r.out);
  CHECK(run_cli({"compare", "--max-m", "10", "--seed", "6"}).out != r.out);
}

TEST_CASE("json output mirrors csv fields") {
  const auto r = run_cli({"table1", "--max-m", "3", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metadata"]["command"] == "table1");
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["e2"].get<double>() == Approx(6.2622e-01).epsilon(1e-3));
  CHECK(doc["rows"][2]["N"].get<int>() == 8);
}

TEST_CASE("output file and re-ingest") {
  const auto path = temp_file("points.csv");
  REQUIRE(run_cli({"gen", "--m", "6", "--scramble-seed", "3", "-o", path.string()}).code == kExitOk);
  const std::vector<std::string> all{"--measures",
                                     "star,extreme,sphere_star,sphere_extreme,cap_l2,cuifreeden,wce"};
  auto direct_args = std::vector<std::string>{"measure", "--m", "6", "--scramble-seed", "3"};
  direct_args.insert(direct_args.end(), all.begin(), all.end());
  auto input_args = std::vector<std::string>{"measure", "--input", path.string()};
  input_args.insert(input_args.end(), all.begin(), all.end());
  const auto direct = parse_csv(run_cli(direct_args).out);
  const auto again = run_cli(input_args);
  REQUIRE(again.code == kExitOk);
  const auto reread = parse_csv(again.out);
  REQUIRE(reread.rows.size() == direct.rows.size());
  for (std::size_t i = 0; i < direct.rows.size(); ++i) {
    CHECK(cell(reread, i, "value") == cell(direct, i, "value"));
  }
  CHECK(run_cli({"measure", "--input", path.string(), "--m", "3", "--measures", "wce"}).code ==
        kExitInvalidConfig);
  CHECK(run_cli({"measure", "--input", "/nonexistent/x.csv", "--measures", "wce"}).code ==
        kExitInvalidConfig);
  std::filesystem::remove(path);
}

TEST_CASE("csv parser") {
  const auto t = parse_csv("# a=1\n#b=two\nx,y\n1,2\n\n3,4\n");
  CHECK(t.metadata.size() == 2);
  CHECK(t.metadata[1] == std::pair<std::string, std::string>{"b", "two"});
  CHECK(t.rows.size() == 2);
  CHECK_THROWS_AS((void)parse_csv("x,y\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_csv("# only\n"), std::invalid_argument);
}
