#include "cli/commands.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "pawbar/measure_io.hpp"

namespace pawbar::cli {
namespace {

const std::string kConfigs = PAWBAR_CONFIG_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pawbar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { ::unsetenv("PAWBAR_SEED"); }
  void TearDown() override { ::unsetenv("PAWBAR_SEED"); }
  std::string write(const std::string& name, const std::string& text) {
    const std::string path = dir_.file(name);
    write_file(path, text);
    return path;
  }
  testing::TempDir dir_{"cli"};
};

TEST_F(CliTest, DistanceExamples) {
  auto r = invoke({"distance", kConfigs + "/measures/normal_0_1.json", kConfigs + "/measures/normal_0_1.json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0\n");
  r = invoke({"distance", kConfigs + "/measures/normal_0_1.json", kConfigs + "/measures/normal_2_4.json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NEAR(std::stod(r.out), std::sqrt(5.0), 1e-14);
  r = invoke({"distance", kConfigs + "/measures/points_01.json", kConfigs + "/measures/points_23.json"});
  EXPECT_EQ(r.out, "2\n");
}

TEST_F(CliTest, DistanceMixedClassIsInputError) {
  const auto r = invoke({"distance", kConfigs + "/measures/normal_0_1.json", kConfigs + "/measures/points_01.json"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("MixedClass"), std::string::npos) << r.err;
}

TEST_F(CliTest, ValidateExamples) {
  auto r = invoke({"validate", "-c", kConfigs + "/discrete_cycle.json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "ok\n");
  r = invoke({"validate", "-c", kConfigs + "/disconnected.json"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_EQ(r.out, "NotConnected\n");
  r = invoke({"validate", "-c", kConfigs + "/mixed_classes.json"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_EQ(r.out, "NonHomogeneous\n");
}

TEST_F(CliTest, SimulateDiracPair) {
  const std::string csv = dir_.file("trace.csv");
  const auto r = invoke({"simulate", "-c", kConfigs + "/dirac_pair.json", "-o", csv});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(read_file(csv), "t,i,j,spread,u_metric\n1,1,2,0,0\n");
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_EQ(summary["steps"], 1);
  EXPECT_EQ(summary["stop_reason"], "converged");
  EXPECT_EQ(summary["lambda"], nlohmann::json::parse("[0.5, 0.5]"));
  EXPECT_EQ(summary["final_measures"][0]["points"][0][0], 2.0);
}

TEST_F(CliTest, SimulateWritesSummaryFileAndErrorColumns) {
  const std::string csv = dir_.file("trace.csv");
  const std::string json = dir_.file("summary.json");
  const auto r = invoke({"simulate", "-c", kConfigs + "/gaussian_cycle.json", "-o", csv, "-s", json,
                         "--max-steps", "50", "--stop-tol", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string trace = read_file(csv);
  EXPECT_EQ(trace.substr(0, trace.find('\n')), "t,i,j,spread,u_metric,err_1,err_2,err_3,err_4,err_5");
  EXPECT_EQ(std::count(trace.begin(), trace.end(), '\n'), 51);
  EXPECT_EQ(nlohmann::json::parse(read_file(json))["steps"], 50);
}

TEST_F(CliTest, SimulateIsByteIdentical) {
  const std::string a = dir_.file("a.csv"), b = dir_.file("b.csv");
  const auto ra = invoke({"simulate", "-c", kConfigs + "/discrete_cycle.json", "-o", a});
  const auto rb = invoke({"simulate", "-c", kConfigs + "/discrete_cycle.json", "-o", b});
  ASSERT_EQ(ra.code, kOk) << ra.err;
  EXPECT_EQ(read_file(a), read_file(b));
  EXPECT_EQ(ra.out, rb.out);
}

TEST_F(CliTest, SeedPrecedence) {
  const std::string cfg = kConfigs + "/quantile_line.json";
  auto trace_with = [&](std::vector<std::string> extra) {
    const std::string csv = dir_.file("seed.csv");
    std::vector<std::string> args{"simulate", "-c", cfg, "-o", csv, "--max-steps", "40", "-s", dir_.file("s.json")};
    args.insert(args.end(), extra.begin(), extra.end());
    EXPECT_EQ(invoke(args).code, kOk);
    return read_file(csv);
  };
  const std::string from_config = trace_with({});
  const std::string seed_11 = trace_with({"--seed", "11"});
  const std::string seed_12 = trace_with({"--seed", "12"});
  EXPECT_EQ(from_config, seed_11);
  EXPECT_NE(seed_11, seed_12);
  ::setenv("PAWBAR_SEED", "12", 1);
  EXPECT_EQ(trace_with({}), seed_12);
  EXPECT_EQ(trace_with({"--seed", "11"}), seed_11);
  ::setenv("PAWBAR_SEED", "twelve", 1);
  EXPECT_EQ(invoke({"simulate", "-c", cfg, "-o", dir_.file("x.csv")}).code, kInputError);
}

TEST_F(CliTest, SimulateInputErrors) {
  const std::string bad = write("bad.json", "{\"graph\": ");
  auto r = invoke({"simulate", "-c", bad, "-o", dir_.file("t.csv")});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("SchemaError"), std::string::npos);
  r = invoke({"simulate", "-c", dir_.file("missing.json"), "-o", dir_.file("t.csv")});
  EXPECT_EQ(r.code, kInputError);
  r = invoke({"simulate", "-c", kConfigs + "/disconnected.json", "-o", dir_.file("t.csv")});
  EXPECT_EQ(r.code, kInputError);
  r = invoke({"simulate"});
  EXPECT_EQ(r.code, kInputError);
  r = invoke({});
  EXPECT_EQ(r.code, kInputError);
}

TEST_F(CliTest, BarycenterEchoesDegenerateWeight) {
  const std::string measures = write("m.json", R"([{"type":"discrete","points":[[0],[1]]},
                                                   {"type":"discrete","points":[[2],[3]]}])");
  const auto r = invoke({"barycenter", "-m", measures, "-l", "1,0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["barycenter"]["points"], nlohmann::json::parse("[[0.0],[1.0]]"));
  EXPECT_EQ(doc["functional"], 0.0);
}

TEST_F(CliTest, BarycenterQuantileAverage) {
  const std::string measures = write("q.json", R"([{"type":"quantile1d","quantiles":[0,2]},
                                                   {"type":"quantile1d","quantiles":[4,6]}])");
  const std::string out = dir_.file("out.json");
  const auto r = invoke({"barycenter", "-m", measures, "-l", "0.5,0.5", "-o", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(read_file(out));
  EXPECT_EQ(doc["barycenter"]["quantiles"], nlohmann::json::parse("[2.0, 4.0]"));
  EXPECT_EQ(doc["oracle"], "quantile1d");
}

TEST_F(CliTest, BarycenterGaussianReportsResidual) {
  const auto r = invoke({"barycenter", "-m", kConfigs + "/measures/gaussian_triple.json", "-l", "0.2,0.3,0.5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_LE(doc["residual"].get<double>(), 1e-10);
  EXPECT_EQ(doc["oracle"], "gaussian_fixed_point");
}

TEST_F(CliTest, BarycenterInputErrors) {
  const std::string mixed = write("mixed.json", R"([{"type":"quantile1d","quantiles":[0,2]},
                                                   {"type":"gaussian","mean":[0],"cov":[[1]]}])");
  EXPECT_EQ(invoke({"barycenter", "-m", mixed, "-l", "0.5,0.5"}).code, kInputError);
  const auto triple = kConfigs + "/measures/gaussian_triple.json";
  EXPECT_EQ(invoke({"barycenter", "-m", triple, "-l", "0.5,0.5,0.5"}).code, kInputError);
  EXPECT_EQ(invoke({"barycenter", "-m", triple, "-l", "0.5,x,0.5"}).code, kInputError);
}

}  // namespace
}  // namespace pawbar::cli
