#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commlab/cli.hpp"

using namespace commlab;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args, bool persist = false) {
  if (!persist) {
    args.push_back("--out");
    args.push_back("");
  }
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("commlab-test-" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cli, VerifyFiniteSummary) {
  const CliResult r = run({"verify-finite", "--trials", "20", "--n", "3", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("summary pass=20/20"), std::string::npos) << r.out;
}

TEST(Cli, VerifyFiniteZeroTrials) {
  const CliResult r = run({"verify-finite", "--trials", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pass=0/0"), std::string::npos);
}

TEST(Cli, BadFlagIsUsageError) {
  const CliResult r = run({"verify-finite", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify-finite", "--max-order", "50000"}).code, 2);
  EXPECT_EQ(run({"verify-finite", "--n", "3", "--weight-cap", "2"}).code, 2);
}

TEST(Cli, BrunnianSampling) {
  CliResult r = run({"brunnian", "--n", "4", "--samples", "100", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("brunnian=100/100"), std::string::npos);
  r = run({"brunnian", "--n", "2", "--samples", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("brunnian=5/5"), std::string::npos);
}

TEST(Cli, BrunnianCheck) {
  CliResult r = run({"brunnian", "--check", "s1 s1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("brunnian=true"), std::string::npos);
  r = run({"brunnian", "--check", "s1 s1", "--strands", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("brunnian=false"), std::string::npos);
  EXPECT_EQ(run({"brunnian", "--check", "s3", "--strands", "3"}).code, 2);
}

TEST(Cli, BrunnianCorpus) {
  const fs::path dir = scratch_dir("corpus");
  fs::create_directories(dir);
  const fs::path corpus = dir / "corpus.txt";
  EXPECT_EQ(run({"brunnian", "--n", "3", "--samples", "4", "--seed", "2", "--corpus", corpus.string()}).code, 0);
  std::ifstream in(corpus);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "# strands=3 seed=2");
  fs::remove_all(dir);
}

TEST(Cli, Homotopy) {
  CliResult r = run({"homotopy", "--pi", "3", "--samples", "500", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("certificate holds=true"), std::string::npos);
  r = run({"homotopy", "--pi", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("quotient_rank=1"), std::string::npos);
  r = run({"homotopy", "--pi", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unsupported: certificates implemented for n ≤ 3"), std::string::npos);
}

TEST(Cli, BraidToolsPrint) {
  CliResult r = run({"braid-tools", "--print", "A", "1", "2", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s1 s1\n");
  r = run({"braid-tools", "--print", "t", "2", "3"});
  EXPECT_EQ(r.out, "s2 s2\n");
  EXPECT_EQ(run({"braid-tools", "--print", "A", "3", "2", "4"}).code, 2);
  EXPECT_EQ(run({"braid-tools", "--print", "B", "1", "2"}).code, 2);
  EXPECT_EQ(run({"braid-tools"}).code, 2);
}

TEST(Cli, BraidToolsIdentitiesReportEachCheck) {
  const CliResult r = run({"braid-tools", "--identities", "--max-n", "4", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  std::size_t a0 = 0, a0_held = 0;
  for (const auto& row : doc["identities"])
    if (row["identity"] == "A0_forms") {
      ++a0;
      a0_held += row["holds"].get<bool>();
    }
  EXPECT_EQ(a0, 9u);
  EXPECT_EQ(a0_held, a0);
  EXPECT_EQ(r.code, doc["held"] == doc["checked"] ? 0 : 1);
}

TEST(Cli, JsonPayloadIsDeterministic) {
  const std::vector<std::string> args{"verify-finite", "--trials", "8", "--seed", "11", "--triples", "4", "--format", "json"};
  const CliResult a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["summary"]["pass"], 8);
  EXPECT_FALSE(doc.contains("timing"));
  for (const auto& t : doc["trials"]) EXPECT_TRUE(t.contains("seed"));
}

TEST(Cli, WritesReportAndLatestPointer) {
  const fs::path dir = scratch_dir("reports");
  const CliResult r = run({"homotopy", "--pi", "3", "--samples", "20", "--seed", "9", "--out", dir.string()}, true);
  EXPECT_EQ(r.code, 0);
  std::ifstream latest(dir / "latest");
  std::string name;
  std::getline(latest, name);
  EXPECT_EQ(name.rfind("homotopy-9-", 0), 0u) << name;
  std::ifstream report(dir / name);
  const auto doc = nlohmann::json::parse(report);
  EXPECT_EQ(doc["seed"], 9);
  EXPECT_TRUE(doc.contains("timing"));
  EXPECT_EQ(doc["sample_pass_counts"]["in_gamma3"], 20);
  // A second run with the same seed must not overwrite the first report.
  run({"homotopy", "--pi", "3", "--samples", "20", "--seed", "9", "--out", dir.string()}, true);
  std::size_t reports = 0;
  for (const auto& e : fs::directory_iterator(dir)) reports += e.path().extension() == ".json";
  EXPECT_EQ(reports, 2u);
  fs::remove_all(dir);
}
