#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cograph/checks.hpp"
#include "cograph/cli.hpp"
#include "cograph/experiment.hpp"
#include "json.hpp"

using namespace cograph;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CountLabeled) {
  const auto r = run({"count", "--kind", "labeled", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,l_n,m_n\n1,1,1\n2,1,2\n3,4,8\n4,26,52\n5,236,472\n6,2752,5504\n");
}

TEST(Cli, CountUnlabeled) {
  const auto r = run({"count", "--kind", "unlabeled", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4,5,10\n"), std::string::npos);
}

TEST(Cli, CountEmptyTable) {
  const auto r = run({"count", "--n", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,l_n,m_n\n");
  EXPECT_EQ(run({"count", "--n", "100000"}).code, 1);
}

TEST(Cli, CountJson) {
  const auto r = run({"count", "--n", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at(2).at("m"), "8");
}

TEST(Cli, Series) {
  const auto r = run({"series", "--kind", "D", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2,1/2\n"), std::string::npos) << r.out;
  EXPECT_EQ(run({"series", "--kind", "Q"}).code, 1);
}

TEST(Cli, SampleSingleLeaf) {
  EXPECT_EQ(run({"sample", "--n", "1"}).out, "1\n");
}

TEST(Cli, SampleIsDeterministic) {
  for (const std::string kind : {"labeled-exact", "unlabeled-exact", "labeled-boltzmann", "binary-decorated"}) {
    const std::vector<std::string> args{"sample", "--n", "200", "--seed", "42", "--kind", kind};
    const auto a = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, run(args).out);
  }
  const auto edges = run({"sample", "--n", "5", "--kind", "labeled-exact", "--format", "edges", "--connected"});
  EXPECT_EQ(edges.code, 0);
}

TEST(Cli, SampleJsonReportsSize) {
  const auto r = run({"sample", "--n", "500", "--kind", "labeled-boltzmann", "--format", "json", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto size = j.at("size").get<std::size_t>();
  EXPECT_GE(size, 450U);
  EXPECT_LE(size, 550U);
}

TEST(Cli, RenderProducesGraymap) {
  const auto r = run({"render", "--n", "10", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.starts_with("P5\n10 10\n255\n"));
  EXPECT_EQ(r.out.size(), std::string("P5\n10 10\n255\n").size() + 100);
}

TEST(Cli, StatsMetrics) {
  const auto r = run({"stats", "--metric", "kappa", "--n", "30", "--trials", "200", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("key,count,probability,stderr\n"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"check", "no-such-suite"}).code, 2);
  EXPECT_EQ(run({"sample", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, CheckSeriesIdentities) {
  const auto r = run({"check", "series-identities"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(Cli, CheckSuiteNames) {
  EXPECT_EQ(check_suite_names().size(), 12U);
  EXPECT_THROW(run_check("nope"), std::exception);
}

TEST(Experiment, JsonRoundTrip) {
  ExperimentSpec spec;
  spec.command = "stats";
  spec.sample.n = 2000;
  spec.sample.seed = 123456789012345ULL;
  spec.sample.kind = SamplerKind::UnlabeledExact;
  spec.sample.connected = true;
  spec.sample.epsilon = 0.05;
  spec.k = 4;
  spec.trials = 99;
  spec.metrics = {"kappa", "degree"};
  spec.tolerances = {{"tv", 0.02}};
  const nlohmann::json j = spec;
  EXPECT_EQ(j.get<ExperimentSpec>(), spec);
  EXPECT_EQ(nlohmann::json::parse(j.dump()).get<ExperimentSpec>(), spec);
  const auto partial = nlohmann::json::parse(R"({"sample": {"n": 7}})").get<ExperimentSpec>();
  EXPECT_EQ(partial.sample.n, 7U);
  EXPECT_EQ(partial.trials, ExperimentSpec{}.trials);
}

TEST(Cli, StatsFromSpecReportsVerdict) {
  const auto path = std::filesystem::temp_directory_path() / "cographs_stats_spec.json";
  ExperimentSpec spec;
  spec.command = "stats";
  spec.sample.n = 200;
  spec.sample.seed = 5;
  spec.k = 2;
  spec.trials = 4000;
  spec.metrics = {"induced"};
  spec.tolerances = {{"induced", 0.05}};
  std::ofstream(path) << nlohmann::json(spec).dump();
  const auto r = run({"stats", "--spec", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("metric"), "induced");
  EXPECT_EQ(j.at("tolerance"), 0.05);
  EXPECT_TRUE(j.at("pass").get<bool>()) << j.at("value");
  EXPECT_EQ(j.at("buckets").size(), 2U);
}
