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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "supersep/cli.hpp"
#include "supersep/error.hpp"
#include "supersep/io.hpp"

namespace io = supersep::io;
namespace cli = supersep::cli;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kCanon{"--b", "0.2mm", "--s", "1mm",
                                      "--lambda", "100nm", "--x", "1.8m"};

std::vector<std::string> with(std::vector<std::string> head,
                              const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(Units, Parsing) {
  EXPECT_DOUBLE_EQ(io::parse_length("0.2mm"), 0.2e-3);
  EXPECT_DOUBLE_EQ(io::parse_length("100 nm"), 100e-9);
  EXPECT_DOUBLE_EQ(io::parse_length("-2.7mm"), -2.7e-3);
  EXPECT_DOUBLE_EQ(io::parse_length("1.8m"), 1.8);
  EXPECT_DOUBLE_EQ(io::parse_angle("90deg"), oracle::kPi / 2);
  EXPECT_DOUBLE_EQ(io::parse_mass("12u"), 12 * 1.66053906660e-27);
  EXPECT_DOUBLE_EQ(io::parse_velocity("2m/s"), 2.0);
  EXPECT_THROW(io::parse_length("0.2"), supersep::InvalidInput);
  EXPECT_THROW(io::parse_length("0.2furlong"), supersep::InvalidInput);
  EXPECT_THROW(io::parse_length("mm"), supersep::InvalidInput);
  EXPECT_DOUBLE_EQ(io::parse_number("1/2"), 0.5);
  EXPECT_THROW(io::parse_number("1/0"), supersep::InvalidInput);
  EXPECT_EQ(io::parse_integer("-7"), -7);
  EXPECT_THROW(io::parse_integer("7.5"), supersep::InvalidInput);
  EXPECT_TRUE(io::parse_bool("yes"));
  EXPECT_THROW(io::parse_bool("maybe"), supersep::InvalidInput);
  const auto w = io::parse_window("-2.7mm:4.5mm");
  EXPECT_DOUBLE_EQ(w.lo, -2.7e-3);
  EXPECT_DOUBLE_EQ(w.hi, 4.5e-3);
  EXPECT_THROW(io::parse_window("1mm:1mm"), supersep::InvalidInput);
}

TEST(Csv, RoundTripIsBitExact) {
  oracle::Gen g(1);
  io::CsvTable t;
  t.comments = {"header one", "k=v"};
  t.columns = {"a", "b", "c"};
  for (int r = 0; r < 300; ++r)
    t.rows.push_back({g.normal() * 1e-30, g.uniform(-1, 1) * 1e300,
                      std::ldexp(g.uniform(0, 1), g.integer(-1000, 1000))});
  t.rows.push_back({0.0, -0.0, 5e-324});
  std::stringstream ss;
  io::write_csv(ss, t);
  const auto back = io::read_csv(ss);
  EXPECT_EQ(back.comments, t.comments);
  EXPECT_EQ(back.columns, t.columns);
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < 3; ++c)
      EXPECT_EQ(std::signbit(back.rows[r][c]), std::signbit(t.rows[r][c]));
  EXPECT_EQ(back.rows, t.rows);
  std::stringstream ragged("a,b\n1,2\n3\n");
  EXPECT_THROW(io::read_csv(ragged), supersep::InvalidInput);
}

TEST(Cli, PatternCsv) {
  const auto r = run(with({"pattern", "--n", "3", "--samples", "101"}, kCanon));
  ASSERT_EQ(r.code, 0) << r.err;
  std::stringstream ss(r.out);
  const auto t = io::read_csv(ss);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"u_m", "intensity"}));
  ASSERT_EQ(t.rows.size(), 101u);
  EXPECT_NEAR(t.rows[50][0], 0.0, 1e-18);
  EXPECT_NEAR(t.rows[50][1], 9 * std::pow(0.2e-3 / 1.8, 2), 1e-20);
  const auto a = run(with({"pattern", "--kind", "amplitude", "--samples", "5"},
                          kCanon));
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("u_m,re,im"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const auto args = with({"combine", "--samples", "512"}, kCanon);
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CombineJson) {
  const auto r = run(with({"combine", "--format", "json"}, kCanon));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_GT(j["discriminator"].get<double>(), 0.1);
  EXPECT_EQ(j["envelope_maxima_superseparable"].size(), 2u);
  EXPECT_EQ(j["envelope_maxima_coherent"].size(), 1u);
  const auto w = run(with({"combine", "--mode", "superseparable", "--window",
                           "-2.7mm:4.5mm", "--samples", "64"},
                          kCanon));
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_NE(w.out.find("u_m,intensity_superseparable\n"), std::string::npos);
}

TEST(Cli, ReehJson) {
  const auto r = run({"reeh", "--flux-quanta", "1", "--probe", "-1,1,2,2",
                      "--confines", "true", "--superseparable", "true"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["alpha"].get<double>(), 0.5);
  EXPECT_FALSE(j["weyl"].get<bool>());
  EXPECT_EQ(j["phase"].get<std::string>().substr(0, 2), "-1");
  EXPECT_EQ(j["outcome"], "TWO_DIFFRACTION_PEAKS");
  EXPECT_EQ(run({"reeh", "--alpha", "1/2", "--format", "csv"}).code,
            cli::kExitValidation);
  EXPECT_EQ(run({"reeh", "--alpha", "1", "--flux-quanta", "2"}).code,
            cli::kExitValidation);
  EXPECT_EQ(run({"reeh", "--alpha", "1", "--probe", "0,1,1,1"}).code,
            cli::kExitValidation);
}

TEST(Cli, SchmudgenIdentity) {
  const auto r = run({"schmudgen", "--z", "i", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["identity_holds"].get<bool>());
  const auto csv = run({"schmudgen", "--radius", "8", "--s-steps", "2",
                        "--t-steps", "2", "--field", "bump:0.125,0.125,0.3"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  std::stringstream ss(csv.out);
  const auto t = io::read_csv(ss);
  EXPECT_EQ(t.rows.size(), 17u * 17u);
  EXPECT_EQ(run({"schmudgen", "--s-steps", "0"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"schmudgen", "--z", "1,0"}).code, cli::kExitValidation);
}

TEST(Cli, SectorAndPlan) {
  const auto o = run({"sector", "--task", "orthogonality", "--pairs", "100"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(Json::parse(o.out)["max_abs_cross_inner"].get<double>(), 0.0);
  const auto b = run({"sector", "--task", "boxes", "--l1", "1", "--l2",
                      "sqrt(2)"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_FALSE(Json::parse(b.out)["equivalent"].get<bool>());
  const auto c = run({"sector", "--task", "classify", "--coupling", "0.5"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_FALSE(Json::parse(c.out)["sector_preserving"].get<bool>());

  const auto p = run({"plan", "--b", "0.2mm", "--s", "1mm", "--lambda", "100nm",
                      "--particle", "rb85", "--velocity", "2m/s"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_NE(p.out.find("x_detector_m=1.8"), std::string::npos);
  EXPECT_NE(p.out.find("de_broglie_m=2.349"), std::string::npos);
  const auto pj = run({"plan", "--b", "0.2mm", "--s", "1mm", "--lambda",
                       "100nm", "--format", "json"});
  ASSERT_EQ(pj.code, 0) << pj.err;
  EXPECT_EQ(Json::parse(pj.out)["quoted_figure_checks"].size(), 8u);
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(run({}).code, cli::kExitValidation);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"pattern", "--b", "0.2", "--lambda", "100nm", "--x", "1m"}).code,
            cli::kExitValidation);
  EXPECT_EQ(run({"pattern", "--b", "-0.2mm", "--lambda", "100nm", "--x", "1m"})
                .code,
            cli::kExitValidation);
  EXPECT_EQ(run(with({"combine", "--mode", "neither"}, kCanon)).code,
            cli::kExitValidation);
  EXPECT_EQ(run({"plan", "--b", "0.2mm", "--s", "1mm", "--lambda", "1mm"}).code,
            cli::kExitValidation);
  const auto r = run({"pattern", "--bogus", "1"});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, RunConfigAndContractExit) {
  cli::RunConfig cfg;
  cfg.subcommand = "schmudgen";
  cfg.output_format = cli::OutputFormat::json;
  cfg.parameters = {{"radius", "64"}, {"field", "gaussian:0,0,0.5,1.5"}};
  std::ostringstream out, err;
  EXPECT_EQ(cli::run(cfg, out, err), cli::kExitOk) << err.str();

  // With t s near 1e5 and a non-dyadic spacing the phase angles carry
  // rounding of order 1e-11; the identity then misses 1e-12 and the run
  // reports a contract violation.
  cfg.parameters = {{"radius", "640"},
                    {"spacing", "1.1"},
                    {"s-steps", "290"},
                    {"t-steps", "290"},
                    {"field", "gaussian:160,160,40,150"}};
  std::ostringstream out3, err3;
  EXPECT_EQ(cli::run(cfg, out3, err3), cli::kExitContract);
  EXPECT_NE(err3.str().find("contract"), std::string::npos);
  EXPECT_FALSE(nlohmann::json::parse(out3.str())["identity_holds"].get<bool>());

  cfg.parameters = {{"bogus", "1"}};
  EXPECT_EQ(cli::run(cfg, out, err), cli::kExitValidation);
}

TEST(Cli, WritesFileAndBinaryRuns) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "supersep_cli_test.csv").string();
  std::filesystem::remove(path);
  const auto r = run(with({"pattern", "--samples", "9", "--out", path}, kCanon));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto t = io::read_csv(in);
  EXPECT_EQ(t.rows.size(), 9u);
  EXPECT_EQ(run({"plan", "--b", "1mm", "--s", "1mm", "--lambda", "1nm", "--out",
                 (dir / "no/such/dir/x").string()})
                .code,
            cli::kExitValidation);

  const std::string cmd = std::string(SUPERSEP_CLI_PATH) +
                          " reeh --alpha 1/2 --probe -1,1,2,2 > " +
                          (dir / "supersep_cli_bin.json").string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream bin(dir / "supersep_cli_bin.json");
  const auto j = Json::parse(bin);
  EXPECT_EQ(j["bracket_product"].get<int>(), -4);
}
