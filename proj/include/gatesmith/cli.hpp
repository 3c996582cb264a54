#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gatesmith::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kPrecondition = 2,
  kIoFailure = 3,
};

struct SynthesizeArgs {
  std::string alpha = "pi/3";
  std::string theta = "pi/6";
  bool reflection = false;
  double eps = 0.1;
  std::string policy = "shared";
  std::string out;          // report path; stdout when empty
  std::string circuit_out;  // circuit path; not written when empty
  int max_qubits = 12;
};

struct VerifyArgs {
  std::string case_name;
  std::optional<std::string> theta;
  std::string out;
};

struct BenchArgs {
  std::string grid;  // JSON grid file; the 3 x 3 x 3 default when empty
  std::string out;
  std::string format = "csv";
  std::string policy = "shared";
  int max_qubits = 12;
  int threads = 0;  // 0: hardware concurrency
};

struct DensityArgs {
  std::string case_name = "toffoli";
  std::optional<std::string> theta;
  int max_word_len = 6;
  int targets = 16;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

int cmd_synthesize(const SynthesizeArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify_completeness(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
int cmd_density_probe(const DensityArgs& args, std::ostream& out, std::ostream& err);

/// GATESMITH_MAX_QUBITS when set and valid, `flag_value` otherwise.
int effective_max_qubits(int flag_value);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gatesmith::cli
