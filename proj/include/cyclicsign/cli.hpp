#pragma once

#include "cyclicsign/matrix_io.hpp"
#include "cyclicsign/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cyclicsign::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kNotInClass = 2,
  kParseOrIo = 3,
  kInvalidFlags = 4,
  kSoundnessAlarm = 5,
};

enum class Operation { Class, Graph, Scc, Sign, Solutions, PMatrix, Witness, Reach, Oracle };
enum class OutputFormat { Text, Json };

struct AnalysisRequest {
  std::string input_path;
  std::optional<std::string> inline_matrix;  // used instead of input_path when set
  MatrixFormat format = MatrixFormat::Csv;
  std::vector<Operation> operations;  // executed in enum order
  Rational lambda = 1;
  int root = 1;
  OutputFormat output = OutputFormat::Text;
  std::optional<std::string> dot_path;
};

// Parses a comma separated list such as "scc,sign". Throws InvalidArgument
// on an unknown name or an empty list.
std::vector<Operation> parse_operations(const std::string& list);

// Runs one analysis. The report goes to `out`, diagnostics to `err`.
int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err);

// Full command line entry point: analyze | gen | oracle. argv[0] is skipped.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclicsign::cli
