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

#include "gkplat/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gkplat/lattice_catalog.h"
#include "gkplat/lattice_io.h"
#include "oracles.h"

namespace gkplat {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    out.push_back(line);
  }
  return out;
}

std::vector<double> csv_row(const std::string& line) {
  std::vector<double> v;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    v.push_back(std::stod(cell));
  }
  return v;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gkplat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::setenv("GKPLAT_WORKERS", "2", 1);
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("GKPLAT_WORKERS");
  }
  fs::path dir_;
};

TEST(LogGrid, Parsing) {
  const auto g = parse_log_grid("1e-4:1e0:5");
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.front(), 1e-4);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_NEAR(g[2], 1e-2, 1e-16);
  EXPECT_EQ(parse_log_grid("3:7:1"), std::vector<double>{3.0});
  for (const char* bad : {"", "1:2", "1:2:3:4", "0:1:5", "-1:1:5", "1:2:0", "a:2:3", "1:2:3x", "1:inf:3"}) {
    EXPECT_THROW(parse_log_grid(bad), std::invalid_argument) << bad;
  }
}

TEST(Format, SeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(std::stod(format_number(std::numbers::pi)), std::numbers::pi);
  nlohmann::ordered_json j;
  j["x"] = 0.1;
  j["n"] = 3;
  j["s"] = "a";
  EXPECT_EQ(dump_json(j, -1), R"({"x":0.10000000000000001,"n":3,"s":"a"})");
}

TEST(Sha256, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(LatticeIo, RoundTrip) {
  for (const char* name : {"D4", "E8", "grid_qudit:3"}) {
    const Lattice lat = get_catalog_entry(name).lattice;
    const Lattice back = lattice_from_json(nlohmann::json::parse(lattice_to_json(lat).dump()));
    EXPECT_EQ(back.basis(), lat.basis());
    EXPECT_EQ(back.scale_sq(), lat.scale_sq());
  }
  const auto j = nlohmann::json::parse(R"({"n": 2, "lambda": 3, "basis": [[1, 0], ["1/2", "-1"]]})");
  const Lattice lat = lattice_from_json(j);
  EXPECT_EQ(lat.scale_sq(), 3);
  EXPECT_EQ(lat.basis()(1, 0), mpq_class(1, 2));
  EXPECT_THROW(lattice_from_json(nlohmann::json::parse(R"({"n": 2})")), std::invalid_argument);
  EXPECT_THROW(lattice_from_json(nlohmann::json::parse(R"({"n": 2, "lambda": 1, "basis": [[1, 0]]})")),
               std::invalid_argument);
  EXPECT_THROW(lattice_from_json(nlohmann::json::parse(R"({"n": 2, "lambda": 1, "basis": [[1, 0], [0, 0.5]]})")),
               std::invalid_argument);
  EXPECT_THROW(read_lattice_file("/nonexistent/lattice.json"), std::runtime_error);
}

TEST_F(CliTest, RatesCsvShape) {
  const fs::path out = dir_ / "rates.csv";
  const CliRun r = run({"rates", "--sigma-sq-grid", "1e-4:1e0:100", "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto text = slurp(out);
  const auto ls = lines(text);
  ASSERT_EQ(ls.size(), 102u);
  EXPECT_EQ(ls[0].rfind("# manifest_sha256=", 0), 0u);
  EXPECT_EQ(ls[1], "sigma_sq,coherent_info,hw_upper,sphere_packing,integer_lambda_rate");
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto row = csv_row(ls[i]);
    ASSERT_EQ(row.size(), 5u);
    EXPECT_LE(row[1], row[2]);
    EXPECT_LE(row[4], row[1]);
  }
  const std::string manifest = slurp(fs::path(out.string() + ".manifest.json"));
  EXPECT_EQ(ls[0], "# manifest_sha256=" + sha256_hex(manifest));
  const auto mj = nlohmann::json::parse(manifest);
  EXPECT_EQ(mj["rng"], "philox4x32-10");
  EXPECT_EQ(mj["version"], kArtifactVersion);
  EXPECT_EQ(mj["workers"], 2);
  EXPECT_EQ(mj["outputs"]["rows"], 100);
  const std::string body = text.substr(text.find('\n') + 1);
  EXPECT_EQ(mj["outputs"]["body_sha256"], sha256_hex(body));
}

TEST_F(CliTest, ConcatRatesBelowCoherentInformation) {
  const CliRun r = run({"concat-rates", "--sigma-grid", "0.01:0.5:25"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 27u);
  EXPECT_EQ(ls[1], "sigma_sq,d_opt,p,rate,c_sq,coherent_info");
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto row = csv_row(ls[i]);
    EXPECT_LE(row[3], row[5]) << ls[i];
  }
  EXPECT_NEAR(csv_row(ls[2])[0], 1e-4, 1e-18);
}

TEST_F(CliTest, ClassicalRatesBelowCapacity) {
  const CliRun r = run({"classical-rates", "--snr-grid", "1:1e6:40"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 42u);
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto row = csv_row(ls[i]);
    EXPECT_LE(row[2], row[1]);
    EXPECT_LE(row[3], row[1]);
    EXPECT_LE(row[5], row[1]);
  }
}

TEST_F(CliTest, SimulateMatchesOracle) {
  const CliRun r = run({"simulate", "--lattice", "grid_qudit:2", "--sigma-sq", "0.0225", "--trials", "1000000",
                     "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const double variance = 0.0225 / (2 * std::numbers::pi);
  const double exact = oracle::square_lattice_failure(2, 2, variance);
  const double half = 0.5 * (j["ci_high"].get<double>() - j["ci_low"].get<double>());
  EXPECT_LE(std::fabs(j["p_hat"].get<double>() - exact), 3 * half);
  EXPECT_EQ(j["trials"], 1000000);
  EXPECT_EQ(j["criterion"], "voronoi");
  EXPECT_EQ(j["code_dimension"], 2);
  EXPECT_EQ(j["manifest"]["seeds"][0], 7);
  EXPECT_EQ(j["manifest"]["rng"], "philox4x32-10");
}

TEST_F(CliTest, SimulateLargerNoise) {
  const CliRun r = run({"simulate", "--lattice", "grid_qudit:3", "--sigma-sq", "0.15", "--trials", "200000", "--seed",
                     "1", "--criterion", "coset"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["failures"].get<long>(), 0);
  EXPECT_EQ(j["criterion"], "coset");
}

TEST_F(CliTest, ByteDeterminism) {
  const std::vector<std::vector<std::string>> commands = {
      {"rates", "--sigma-sq-grid", "1e-3:1:7"},
      {"simulate", "--lattice", "D4", "--sigma-sq", "0.3", "--trials", "5000", "--seed", "3"},
      {"concat-sim", "--code", "shor9", "--d", "3", "--sigma-sq", "0.05", "--trials", "5000", "--seed", "4"},
      {"lattice-info", "E8"}};
  for (const auto& c : commands) {
    const CliRun a = run(c);
    const CliRun b = run(c);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  const fs::path p1 = dir_ / "a.csv";
  const fs::path p2 = dir_ / "b.csv";
  ASSERT_EQ(run({"classical-rates", "--snr-grid", "1:100:9", "--out", p1.string()}).code, kExitOk);
  ASSERT_EQ(run({"classical-rates", "--snr-grid", "1:100:9", "--out", p2.string()}).code, kExitOk);
  EXPECT_EQ(slurp(p1).substr(slurp(p1).find('\n')), slurp(p2).substr(slurp(p2).find('\n')));
}

TEST_F(CliTest, WorkerCountRecordedAndOutputStable) {
  const std::vector<std::string> c{"simulate", "--lattice", "grid_qudit:2", "--sigma-sq", "0.3", "--trials",
                                   "20000", "--seed", "9"};
  const auto a = nlohmann::json::parse(run(c).out);
  ::setenv("GKPLAT_WORKERS", "1", 1);
  const auto b = nlohmann::json::parse(run(c).out);
  EXPECT_EQ(a["failures"], b["failures"]);
  EXPECT_EQ(a["manifest"]["workers"], 2);
  EXPECT_EQ(b["manifest"]["workers"], 1);
}

TEST_F(CliTest, ConcatSim) {
  const CliRun r = run({"concat-sim", "--code", "trivial", "--d", "2", "--sigma-sq", "0.1", "--trials", "10000",
                     "--seed", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["code"], "trivial");
  EXPECT_GT(j["qudit_error_bound"].get<double>(), 0.0);
}

TEST_F(CliTest, LatticeInfo) {
  const CliRun r = run({"lattice-info", "grid_qudit:2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["symplectically_integral"], true);
  EXPECT_NEAR(j["normalizer_shortest_sq"].get<double>(), 0.5, 1e-15);
  const auto e8 = nlohmann::json::parse(run({"lattice-info", "E8"}).out);
  EXPECT_EQ(e8["shortest_sq"], 2.0);
  EXPECT_EQ(e8["det_basis"], "1/1");
  EXPECT_NEAR(e8["packing_radius"].get<double>(), std::sqrt(2.0) / 2, 1e-15);
}

TEST_F(CliTest, LatticeFile) {
  const fs::path p = dir_ / "lat.json";
  std::ofstream(p) << R"({"n": 2, "lambda": "5/1", "basis": [["1/1", "0/1"], ["0/1", "1/1"]]})";
  const auto j = nlohmann::json::parse(run({"lattice-info", p.string()}).out);
  EXPECT_EQ(j["m"], 5);
  const CliRun s = run({"simulate", "--lattice", p.string(), "--sigma-sq", "0.1", "--trials", "100", "--seed", "1"});
  EXPECT_EQ(s.code, kExitOk) << s.err;
}

TEST_F(CliTest, Decode) {
  const CliRun r = run({"decode", "Zn:2", "0.4,-0.3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["closest"], nlohmann::json::parse("[0.0, 0.0]"));
  EXPECT_NEAR(j["dist_sq"].get<double>(), 0.25, 1e-15);
  EXPECT_EQ(j["tie"], false);
  EXPECT_EQ(j["in_voronoi_cell"], true);
  EXPECT_EQ(nlohmann::json::parse(run({"decode", "Zn:2", "0.5,0"}).out)["tie"], true);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsageError);
  EXPECT_EQ(run({"rates", "--sigma-sq-grid", "1:2:3", "--bogus"}).code, kExitUsageError);
  EXPECT_EQ(run({"rates", "--sigma-sq-grid", "1:2"}).code, kExitUsageError);
  EXPECT_EQ(run({"rates", "--sigma-sq-grid", "0:2:4"}).code, kExitUsageError);
  EXPECT_EQ(run({"rates"}).code, kExitUsageError);
  EXPECT_EQ(run({"concat-rates"}).code, kExitUsageError);
  EXPECT_EQ(run({"concat-rates", "--sigma-grid", "0.1:1:3", "--sigma-sq-grid", "0.1:1:3"}).code, kExitUsageError);
  EXPECT_EQ(run({"simulate", "--lattice", "Zn:2", "--sigma-sq", "0.1", "--trials", "10", "--seed", "1",
                 "--criterion", "ml"})
                .code,
            kExitUsageError);
  EXPECT_EQ(run({"simulate", "--lattice", "Zn:2", "--sigma-sq", "-1", "--trials", "10", "--seed", "1"}).code,
            kExitUsageError);
  EXPECT_EQ(run({"simulate", "--lattice", "Zn:2", "--sigma-sq", "0.1", "--trials", "0", "--seed", "1"}).code,
            kExitUsageError);
  EXPECT_EQ(run({"decode", "Zn:2", "0.1,abc"}).code, kExitUsageError);
  EXPECT_EQ(run({"decode", "Zn:2", "0.1"}).code, kExitUsageError);
  EXPECT_EQ(run({"concat-sim", "--code", "steane", "--d", "2", "--sigma-sq", "0.1", "--trials", "10", "--seed",
                 "1"})
                .code,
            kExitUsageError);
  EXPECT_EQ(run({"simulate", "--lattice", (dir_ / "missing.json").string(), "--sigma-sq", "0.1", "--trials", "10",
                 "--seed", "1"})
                .code,
            kExitRuntimeError);
  EXPECT_EQ(run({"lattice-info", (dir_ / "missing.json").string()}).code, kExitRuntimeError);
  const fs::path bad = dir_ / "bad.json";
  std::ofstream(bad) << "{not json";
  const CliRun b = run({"lattice-info", bad.string()});
  EXPECT_EQ(b.code, kExitRuntimeError);
  EXPECT_NE(b.err.find("cannot parse"), std::string::npos);
  EXPECT_EQ(run({"rates", "--sigma-sq-grid", "1:2:3", "--out", (dir_ / "no" / "such" / "dir.csv").string()}).code,
            kExitRuntimeError);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("start:stop:points"), std::string::npos);
}

}  // namespace
}  // namespace gkplat
