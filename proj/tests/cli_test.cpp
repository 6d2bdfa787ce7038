#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace wlp::cli {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, HeadlineDeterminant) {
  const Outcome o = invoke({"det", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "12"});
  ASSERT_EQ(o.status, kOk) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(doc["command"]["name"], "det");
  EXPECT_EQ(doc["payload"]["determinant"], "-410893744849276115319750");
  EXPECT_TRUE(doc["payload"]["determinant"].is_string());
  EXPECT_TRUE(doc.contains("timing"));
}

TEST(Cli, HilbertCsv) {
  const Outcome o = invoke({"hilbert", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2", "--format", "csv"});
  ASSERT_EQ(o.status, kOk) << o.err;
  EXPECT_EQ(o.out, "degree,value\n0,1\n1,3\n2,6\n3,6\n4,3\n");
}

TEST(Cli, TilingsCount) {
  const Outcome o = invoke({"tilings", "--a", "1", "--b", "1", "--c", "1"});
  ASSERT_EQ(o.status, kOk) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["payload"]["count"], "2");
  EXPECT_EQ(doc["payload"]["oracle_count"], "2");

  const Outcome big = invoke({"tilings", "--a", "9", "--b", "2", "--c", "3", "--no-timing"});
  EXPECT_TRUE(nlohmann::json::parse(big.out)["payload"]["oracle_count"].is_null());
}

TEST(Cli, PrimesCsv) {
  const Outcome o =
      invoke({"primes", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "12", "--format", "csv"});
  ASSERT_EQ(o.status, kOk) << o.err;
  EXPECT_EQ(o.out,
            "kind,value,exponent\nsign,-1,\nprime,2,1\nprime,3,2\nprime,5,3\nprime,11,4\nprime,13,5\n"
            "prime,19,1\nprime,23,3\nprime,29,1\nprime,5011,1\ncofactor,1,\n");

  const Outcome zero = invoke({"primes", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2"});
  ASSERT_EQ(zero.status, kOk);
  EXPECT_EQ(nlohmann::json::parse(zero.out)["payload"]["fails_in_every_characteristic"], true);
}

TEST(Cli, WlpReportsBothMethods) {
  const Outcome o = invoke({"wlp", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "3", "--char", "0", "--char",
                            "2", "--no-timing"});
  ASSERT_EQ(o.status, kOk) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  const auto& v = doc["payload"]["verdicts"];
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0]["determinant"]["holds"], true);
  EXPECT_EQ(v[0]["direct"]["holds"], true);
  EXPECT_EQ(v[1]["determinant"]["holds"], false);
  EXPECT_EQ(v[1]["direct"]["holds"], false);
  EXPECT_EQ(doc["payload"]["agreement"], true);

  // direct method still runs where the determinant criterion does not apply
  const Outcome ia = invoke({"wlp", "--alpha", "0", "--beta", "1", "--gamma", "2", "--t", "2", "--no-timing"});
  ASSERT_EQ(ia.status, kOk) << ia.err;
  const auto iadoc = nlohmann::json::parse(ia.out);
  EXPECT_TRUE(iadoc["payload"]["verdicts"][0]["determinant"].is_null());
  EXPECT_EQ(iadoc["payload"]["verdicts"][0]["direct"]["holds"], true);
}

TEST(Cli, PredictAndMatrix) {
  const Outcome p = invoke({"predict", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "9", "--format", "csv"});
  ASSERT_EQ(p.status, kOk);
  EXPECT_EQ(p.out, "alpha,beta,gamma,t,case,wlp_holds,status,branch\n2,9,13,9,EXCEPTIONAL,false,COMPUTED,ii: exceptional tuple\n");

  const Outcome m = invoke({"matrix", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2", "--no-timing"});
  ASSERT_EQ(m.status, kOk);
  const auto doc = nlohmann::json::parse(m.out);
  EXPECT_EQ(doc["payload"]["entries"], nlohmann::json::parse(R"([["1","1"],["3","3"]])"));
}

TEST(Cli, ScanCsvAndSummary) {
  const Outcome o = invoke({"scan", "--box", "1,1,1,2", "--char", "0", "--char", "2", "--format", "csv"});
  ASSERT_EQ(o.status, kOk) << o.err;
  std::istringstream lines(o.out);
  std::string header, first, second, extra;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_EQ(header.rfind("alpha,beta,gamma,t,case,predicted_holds,status,check,determinant,characteristic", 0), 0u);
  EXPECT_EQ(first.rfind("1,1,1,2,CASE_III,false,PROVED,confirmed,0,0,false,false,true,2", 0), 0u);
  EXPECT_EQ(second.rfind("1,1,1,2,CASE_III,false,PROVED,confirmed,0,2,false,false,true,", 0), 0u);

  const Outcome empty = invoke({"scan", "--box", "3,0:2,0:2,1", "--no-timing"});
  ASSERT_EQ(empty.status, kOk);
  EXPECT_EQ(nlohmann::json::parse(empty.out)["payload"]["rows"].size(), 0u);
}

TEST(Cli, ExitCodes) {
  Outcome o = invoke({"det", "--alpha", "2", "--beta", "1", "--gamma", "3", "--t", "2"});
  EXPECT_EQ(o.status, kInvalidParameters);
  EXPECT_NE(o.err.find("alpha <= beta <= gamma"), std::string::npos);

  o = invoke({"det", "--alpha", "0", "--beta", "1", "--gamma", "2", "--t", "2"});
  EXPECT_EQ(o.status, kNotApplicable);
  EXPECT_NE(o.err.find("alpha >= 1"), std::string::npos);

  EXPECT_EQ(invoke({"primes", "--alpha", "1", "--beta", "1", "--gamma", "2", "--t", "2"}).status, kNotApplicable);
  EXPECT_EQ(invoke({"wlp", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2", "--char", "4"}).status,
            kInvalidParameters);
  EXPECT_EQ(invoke({"det", "--alpha", "1"}).status, kInvalidParameters);
  EXPECT_EQ(invoke({"frobnicate"}).status, kInvalidParameters);
  EXPECT_EQ(invoke({"hilbert", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2", "--format", "xml"}).status,
            kInvalidParameters);
  EXPECT_EQ(invoke({"scan", "--box", "0:1,0:1"}).status, kInvalidParameters);
  EXPECT_EQ(invoke({"scan", "--box", "0:x,0:1,0:1,1"}).status, kInvalidParameters);
  EXPECT_EQ(invoke({"tilings", "--a", "0", "--b", "1", "--c", "1"}).status, kInvalidParameters);
  EXPECT_EQ(invoke({"--help"}).status, kOk);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"hilbert", "--alpha", "1", "--beta", "2", "--gamma", "3", "--t", "3"},
      {"matrix", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "12"},
      {"det", "--alpha", "2", "--beta", "2", "--gamma", "2", "--t", "2"},
      {"wlp", "--alpha", "1", "--beta", "2", "--gamma", "3", "--t", "4", "--char", "0", "--char", "3"},
      {"primes", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "12", "--bound", "100"},
      {"tilings", "--a", "2", "--b", "4", "--c", "3"},
      {"predict", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2"},
      {"scan", "--box", "0:2,0:2,0:3,1:3", "--char", "0", "--char", "2"},
  };
  for (auto cmd : commands) {
    for (const std::string format : {"json", "csv", "text"}) {
      auto args = cmd;
      args.insert(args.end(), {"--format", format, "--no-timing"});
      const Outcome a = invoke(args);
      const Outcome b = invoke(args);
      ASSERT_EQ(a.status, kOk) << cmd.front() << " " << a.err;
      EXPECT_EQ(a.out, b.out) << cmd.front() << " " << format;
    }
    // csv never carries timing
    auto csv = cmd;
    csv.insert(csv.end(), {"--format", "csv"});
    EXPECT_EQ(invoke(csv).out, invoke(csv).out);
  }
}

TEST(Cli, JsonRoundTrips) {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"det", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "12"},
        std::vector<std::string>{"scan", "--box", "1:2,1:3,1:4,1:3"},
        std::vector<std::string>{"wlp", "--alpha", "2", "--beta", "2", "--gamma", "2", "--t", "3"}}) {
    const Outcome o = invoke(cmd);
    ASSERT_EQ(o.status, kOk);
    const auto doc = nlohmann::ordered_json::parse(o.out);
    EXPECT_EQ(doc.dump(2) + "\n", o.out);
    EXPECT_EQ(nlohmann::ordered_json::parse(doc.dump())["payload"], doc["payload"]);
  }
}

TEST(Cli, ScanThreadCapFromEnvironment) {
  const std::vector<std::string> args{"scan", "--box", "0:2,0:3,0:4,1:4", "--format", "csv"};
  ::setenv("LEFSCHETZ_THREADS", "1", 1);
  const Outcome serial = invoke(args);
  ::setenv("LEFSCHETZ_THREADS", "6", 1);
  const Outcome parallel = invoke(args);
  ::setenv("LEFSCHETZ_THREADS", "many", 1);
  const Outcome bad = invoke(args);
  ::unsetenv("LEFSCHETZ_THREADS");
  ASSERT_EQ(serial.status, kOk);
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(bad.status, kInvalidParameters);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "lefschetz_cli_test.csv";
  const Outcome o = invoke({"tilings", "--a", "2", "--b", "2", "--c", "2", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(o.status, kOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "a,b,c,count,oracle_count\n2,2,2,20,20\n");
  std::filesystem::remove(path);
}

TEST(Cli, BinaryExitStatus) {
  const std::string bin = LEFSCHETZ_BINARY;
  EXPECT_EQ(std::system((bin + " det --alpha 1 --beta 1 --gamma 1 --t 3 > /dev/null").c_str()), 0);
  const int rc = std::system((bin + " det --alpha 0 --beta 1 --gamma 2 --t 2 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(rc), kNotApplicable);
}

}  // namespace
}  // namespace wlp::cli
