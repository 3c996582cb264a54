#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gatesmith/cli.hpp"

using namespace gatesmith::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "gatesmith_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, HelpAndUnknownCommand) {
  EXPECT_EQ(run_args({"--help"}).code, kOk);
  EXPECT_EQ(run_args({"frobnicate"}).code, kPrecondition);
  EXPECT_EQ(run_args({"synthesize", "--eps"}).code, kPrecondition);
}

TEST(Cli, SynthesizeRejectsCliffordAngle) {
  const Outcome o = run_args({"synthesize", "--alpha", "pi/3", "--theta", "pi/2", "--eps", "0.1"});
  EXPECT_EQ(o.code, kPrecondition);
  EXPECT_NE(o.err.find("basis-changing"), std::string::npos) << o.err;
}

TEST(Cli, SynthesizeRejectsBadEpsAndPolicy) {
  EXPECT_EQ(run_args({"synthesize", "--eps", "0"}).code, kPrecondition);
  EXPECT_EQ(run_args({"synthesize", "--eps", "1.5"}).code, kPrecondition);
  EXPECT_EQ(run_args({"synthesize", "--policy", "recycled"}).code, kPrecondition);
  EXPECT_EQ(run_args({"synthesize", "--alpha", "nonsense"}).code, kPrecondition);
}

TEST(Cli, SynthesizeUnverifiedTinyEps) {
  const Outcome o = run_args({"synthesize", "--alpha", "pi/3", "--theta", "pi/6", "--eps", "1e-6"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json report = json::parse(o.out);
  EXPECT_FALSE(report["verified"].get<bool>());
  EXPECT_TRUE(report["achieved_error"].is_null());
  EXPECT_LE(report["bound_error"].get<double>(), 1e-6);
  EXPECT_FALSE(report["verification_note"].get<std::string>().empty());
}

TEST(Cli, SynthesizeWritesReportAndCircuit) {
  const auto report_path = scratch("report.json");
  const auto circuit_path = scratch("circuit.json");
  const Outcome o = run_args({"synthesize", "--alpha", "0.7", "--theta", "pi/6", "--eps", "0.2", "--out",
                              report_path.string(), "--circuit", circuit_path.string()});
  ASSERT_EQ(o.code, kOk) << o.err;
  std::ifstream rf(report_path), cf(circuit_path);
  const json report = json::parse(rf);
  const json circuit = json::parse(cf);
  EXPECT_EQ(report["total_qubits"].get<long>(), circuit["n_qubits"].get<long>());
  for (const char* key : {"alpha", "theta", "eps", "achieved_error", "bound_error", "verified", "gate_counts",
                          "size", "ancilla_count", "params", "ancilla_bits"}) {
    EXPECT_TRUE(report.contains(key)) << key;
  }
}

TEST(Cli, UnwritableOutputIsIoFailure) {
  EXPECT_EQ(run_args({"synthesize", "--eps", "0.2", "--alpha", "0.7", "--out", "/nonexistent/dir/r.json"}).code,
            kIoFailure);
  EXPECT_EQ(run_args({"bench", "--grid", "/nonexistent/grid.json"}).code, kIoFailure);
}

TEST(Cli, VerifyCompleteness) {
  const Outcome tof = run_args({"verify-completeness", "--case", "toffoli"});
  EXPECT_EQ(tof.code, kOk) << tof.out << tof.err;
  const json j = json::parse(tof.out);
  EXPECT_TRUE(j.contains("checks"));

  EXPECT_EQ(run_args({"verify-completeness", "--case", "cnot", "--theta", "pi/6"}).code, kOk);
  EXPECT_EQ(run_args({"verify-completeness", "--case", "cnot", "--theta", "pi/4"}).code, kPrecondition);
  EXPECT_EQ(run_args({"verify-completeness", "--case", "cnot"}).code, kPrecondition);
  EXPECT_EQ(run_args({"verify-completeness", "--case", "swap"}).code, kPrecondition);
}

TEST(Cli, BenchOnSmallGrid) {
  const auto grid = scratch("grid.json");
  std::ofstream(grid) << R"({"theta": ["pi/6"], "alpha": ["pi/3", 0.7], "eps": [0.2]})";
  const Outcome o = run_args({"bench", "--grid", grid.string()});
  ASSERT_EQ(o.code, kOk) << o.err;
  std::istringstream lines(o.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "theta,alpha,eps,size,ancillae,achieved_error,bound_error,verified,k1,k2,T,note");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line[0] != '#') ++rows;
  }
  EXPECT_EQ(rows, 2);

  const Outcome js = run_args({"bench", "--grid", grid.string(), "--format", "json"});
  ASSERT_EQ(js.code, kOk) << js.err;
  EXPECT_EQ(json::parse(js.out)["rows"].size(), 2u);
}

TEST(Cli, BenchRejectsEmptyAxis) {
  const auto grid = scratch("empty_grid.json");
  std::ofstream(grid) << R"({"theta": [], "alpha": [0.7], "eps": [0.1]})";
  EXPECT_EQ(run_args({"bench", "--grid", grid.string()}).code, kPrecondition);
}

TEST(Cli, DensityProbe) {
  const Outcome o = run_args({"density-probe", "--case", "cnot", "--theta", "pi/6", "--max-word-len", "3",
                              "--targets", "4"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_TRUE(j.contains("rows"));
  EXPECT_EQ(run_args({"density-probe", "--case", "cnot", "--theta", "pi/6", "--format", "csv",
                      "--max-word-len", "2", "--targets", "2"})
                .code,
            kOk);
}

TEST(Cli, MaxQubitsEnvironmentOverride) {
  ::unsetenv("GATESMITH_MAX_QUBITS");
  EXPECT_EQ(effective_max_qubits(12), 12);
  ::setenv("GATESMITH_MAX_QUBITS", "20", 1);
  EXPECT_EQ(effective_max_qubits(12), 20);
  ::setenv("GATESMITH_MAX_QUBITS", "garbage", 1);
  EXPECT_EQ(effective_max_qubits(12), 12);
  ::unsetenv("GATESMITH_MAX_QUBITS");
}
