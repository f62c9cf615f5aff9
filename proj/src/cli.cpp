#include "cyclicsign/cli.hpp"

#include "cyclicsign/errors.hpp"
#include "cyclicsign/gap_graph.hpp"
#include "cyclicsign/instance_gen.hpp"
#include "cyclicsign/linear_exact.hpp"
#include "cyclicsign/pmatrix.hpp"
#include "cyclicsign/serialize.hpp"
#include "cyclicsign/sign_analysis.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cyclicsign::cli {
namespace {

using nlohmann::json;

struct OpName {
  Operation op;
  const char* name;
};

constexpr OpName kOpNames[] = {
    {Operation::Class, "class"},         {Operation::Graph, "graph"},     {Operation::Scc, "scc"},
    {Operation::Sign, "sign"},           {Operation::Solutions, "solutions"}, {Operation::PMatrix, "pmatrix"},
    {Operation::Witness, "witness"},     {Operation::Reach, "reach"},     {Operation::Oracle, "oracle"},
};

const char* name_of(Operation op) {
  for (const auto& entry : kOpNames) {
    if (entry.op == op) return entry.name;
  }
  return "";
}

// Sign that the oracle compares against. The fault-injection build flips it
// so tests can exercise the soundness alarm.
int certified_sign(const CyclicMatrix& a) {
  const int s = det_sign(a).sign;
#ifdef CYCLICSIGN_FAULT_INJECTION
  return s == 0 ? 1 : -s;
#else
  return s;
#endif
}

void render_text(std::ostream& os, const json& report, const std::vector<Operation>& ops) {
  for (Operation op : ops) {
    const json& r = report.at(name_of(op));
    os << "[" << name_of(op) << "]\n";
    switch (op) {
      case Operation::Class:
        os << "  in class: yes\n  row sums: ";
        for (std::size_t i = 0; i < r["row_sums"].size(); ++i) {
          os << (i ? ", " : "") << r["row_sums"][i].get<std::string>();
        }
        os << "\n  row sum class: " << r["row_sum_class"].get<std::string>() << "\n";
        break;
      case Operation::Graph:
        for (const auto& row : r["kappa"]) {
          os << " ";
          for (const auto& v : row) os << " " << v.get<int>();
          os << "\n";
        }
        break;
      case Operation::Scc:
        for (const auto& c : r["components"]) {
          os << "  " << (c["closed"].get<bool>() ? "closed " : "open   ") << "{";
          for (std::size_t k = 0; k < c["vertices"].size(); ++k) {
            os << (k ? "," : "") << c["vertices"][k].get<int>();
          }
          os << "}\n";
        }
        break;
      default:
        // Remaining sections read best as indented JSON.
        std::istringstream lines(r.dump(2));
        for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
        break;
    }
  }
}

int report_not_in_class(const std::vector<ClassViolation>& violations, std::ostream& err) {
  err << "error: matrix is not in the cyclically decreasing class (" << violations.size()
      << " violation" << (violations.size() == 1 ? "" : "s") << ")\n";
  for (const auto& v : violations) {
    err << "  row " << v.row << ": column " << v.column << " < column " << v.next_column << "\n";
  }
  return kNotInClass;
}

MatrixQ load(const AnalysisRequest& request) {
  if (request.inline_matrix) return parse_matrix(*request.inline_matrix, request.format);
  return read_matrix_file(request.input_path, request.format);
}

}  // namespace

std::vector<Operation> parse_operations(const std::string& list) {
  std::vector<Operation> ops;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    const auto it = std::find_if(std::begin(kOpNames), std::end(kOpNames),
                                 [&](const OpName& e) { return item == e.name; });
    if (it == std::end(kOpNames)) throw InvalidArgument("unknown operation '" + item + "'");
    ops.push_back(it->op);
  }
  if (ops.empty()) throw InvalidArgument("no operation requested");
  std::sort(ops.begin(), ops.end());
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  return ops;
}

int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err) {
  if (request.operations.empty()) {
    err << "error: no operation requested\n";
    return kInvalidFlags;
  }
  try {
    const MatrixQ raw = load(request);
    const ClassCheck check = validate_class(raw);
    if (!check.accepted()) return report_not_in_class(check.violations, err);
    const CyclicMatrix& a = *check.matrix;
    if (request.root < 1 || request.root > a.n()) {
      err << "error: --root must lie in 1.." << a.n() << "\n";
      return kInvalidFlags;
    }

    json report = json::object();
    bool alarm = false;
    const GapGraph graph = build_gap_graph(a);
    const SccPartition partition = scc_partition(graph);
    for (Operation op : request.operations) {
      switch (op) {
        case Operation::Class: report["class"] = class_check_json(check); break;
        case Operation::Graph: report["graph"] = gap_graph_json(graph); break;
        case Operation::Scc: report["scc"] = scc_json(partition); break;
        case Operation::Sign: report["sign"] = sign_report_json(det_sign(a)); break;
        case Operation::Solutions: report["solutions"] = solution_space_json(solution_space(a, request.lambda)); break;
        case Operation::PMatrix: report["pmatrix"] = pmatrix_json(a, is_p_matrix_exact(a)); break;
        case Operation::Witness: report["witness"] = witness_json(m_matrix_witness(a)); break;
        case Operation::Reach: report["reach"] = reachability_json(reachability_sets(a, request.root)); break;
        case Operation::Oracle: {
          const Rational det = det_exact(a.matrix());
          const int certified = certified_sign(a);
          const bool consistent = sign(det) == certified;
          alarm = alarm || !consistent;
          report["oracle"] = {{"determinant", to_string(det)},
                              {"oracle_sign", sign(det)},
                              {"certified_sign", certified},
                              {"consistent", consistent}};
          break;
        }
      }
    }

    if (request.dot_path) {
      std::ofstream dot(*request.dot_path, std::ios::binary);
      if (!dot || !(dot << to_dot(graph, partition))) {
        err << "error: cannot write '" << *request.dot_path << "'\n";
        return kParseOrIo;
      }
    }

    if (request.output == OutputFormat::Json) {
      out << report.dump(2) << "\n";
    } else {
      render_text(out, report, request.operations);
    }
    if (alarm) {
      err << "error: certified determinant sign disagrees with the exact determinant\n";
      return kSoundnessAlarm;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseOrIo;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidFlags;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

namespace {

int run_gen(const GenConfig& config, const std::optional<std::string>& pattern_path, MatrixFormat format,
            std::ostream& out, std::ostream& err) {
  try {
    std::optional<CyclicMatrix> a;
    if (pattern_path) {
      const MatrixQ p = read_matrix_file(*pattern_path, MatrixFormat::Csv);
      Eigen::MatrixXi pattern(p.rows(), p.cols());
      for (Eigen::Index i = 0; i < p.rows(); ++i) {
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
          if (p(i, j) != 0 && p(i, j) != 1) throw ParseError("gap pattern entries must be 0 or 1");
          pattern(i, j) = p(i, j) == 1 ? 1 : 0;
        }
      }
      a.emplace(generate_with_gap_pattern(pattern, config));
    } else {
      a.emplace(generate(config));
    }
    out << (format == MatrixFormat::Csv ? to_csv(a->matrix()) : to_json_text(a->matrix()));
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseOrIo;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidFlags;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign and structure analysis for cyclically decreasing matrices", "cyclicsign"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "csv";
  std::string ops = "class,scc,sign";
  std::string lambda = "1";
  int root = 1;
  std::string output = "text";
  std::string dot;

  auto* analyze = app.add_subcommand("analyze", "Analyze one matrix");
  analyze->add_option("--input", input, "Matrix file")->required();
  analyze->add_option("--format", format, "Input format")->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--ops", ops,
                      "Comma separated: class,graph,scc,sign,solutions,pmatrix,witness,reach,oracle");
  analyze->add_option("--lambda", lambda, "Right-hand side scale for 'solutions'");
  analyze->add_option("--root", root, "Root row for 'reach'");
  analyze->add_option("--out", output, "Report format")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--dot", dot, "Write the gap graph as Graphviz DOT");

  int gen_n = 5;
  int gen_bound = 5;
  bool gen_non_negative = false;
  std::string gen_row_sum = "any";
  std::uint64_t gen_seed = 0;
  std::uint64_t gen_stream = 0;
  std::string gen_pattern;
  std::string gen_format = "csv";
  auto* gen = app.add_subcommand("gen", "Generate a class member");
  gen->add_option("--n", gen_n, "Dimension");
  gen->add_option("--bound", gen_bound, "Entry bound");
  gen->add_flag("--non-negative", gen_non_negative, "Draw entries from [0, bound]");
  gen->add_option("--row-sum", gen_row_sum, "Row-sum regime")->check(CLI::IsMember({"any", "pos", "neg"}));
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--stream", gen_stream, "Stream index for the seed");
  gen->add_option("--gap-pattern", gen_pattern, "CSV 0-1 gap pattern to realize");
  gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::string oracle_input;
  std::string oracle_format = "csv";
  std::string oracle_output = "text";
  auto* oracle = app.add_subcommand("oracle", "Compare the certified sign with the exact determinant");
  oracle->add_option("--input", oracle_input, "Matrix file")->required();
  oracle->add_option("--format", oracle_format, "Input format")->check(CLI::IsMember({"csv", "json"}));
  oracle->add_option("--out", oracle_output, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidFlags;
  }

  if (*gen) {
    GenConfig config;
    config.n = gen_n;
    config.entry_bound = gen_bound;
    config.non_negative = gen_non_negative;
    config.row_sum = gen_row_sum == "pos"   ? RowSumMode::ForcePositive
                     : gen_row_sum == "neg" ? RowSumMode::ForceNegative
                                            : RowSumMode::Any;
    config.seed = gen_seed;
    config.stream = gen_stream;
    return run_gen(config, gen_pattern.empty() ? std::nullopt : std::optional<std::string>(gen_pattern),
                   parse_matrix_format(gen_format), out, err);
  }

  AnalysisRequest request;
  try {
    if (*oracle) {
      request.input_path = oracle_input;
      request.format = parse_matrix_format(oracle_format);
      request.operations = {Operation::Oracle};
      request.output = oracle_output == "json" ? OutputFormat::Json : OutputFormat::Text;
    } else {
      request.input_path = input;
      request.format = parse_matrix_format(format);
      request.operations = parse_operations(ops);
      request.lambda = parse_rational(lambda);
      request.root = root;
      request.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;
      if (!dot.empty()) request.dot_path = dot;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidFlags;
  }
  return run(request, out, err);
}

}  // namespace cyclicsign::cli
