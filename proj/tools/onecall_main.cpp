// onecall: compare two-query classical SAT decisions with their one-query
// protocols.
//
//   onecall run --f xor --a a.expr --b b.cnf [--trace]
//   onecall verify --exhaustive --max-vars 3 --max-nodes 5
//   onecall verify --random --pairs 1000 --vars 10 --clauses 42 --width 3 --seed 7
//   onecall contrast
//
// Exit status is 0 iff no mismatches and no determinism violations.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "onecall/dispatch.hpp"
#include "onecall/harness.hpp"

namespace {

using namespace onecall;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// *.cnf / *.dimacs are DIMACS, anything else is an infix expression.
Formula load_formula(const std::string& path) {
  std::string text = read_file(path);
  if (ends_with(path, ".cnf") || ends_with(path, ".dimacs")) return cnf_to_formula(parse_dimacs(text));
  return parse_expr(text);
}

nlohmann::ordered_json jsonl_array(const std::string& lines) {
  auto arr = nlohmann::ordered_json::array();
  std::istringstream in(lines);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) arr.push_back(nlohmann::ordered_json::parse(line));
  return arr;
}

struct RunArgs {
  std::string table;
  std::string a_path;
  std::string b_path;
  bool trace = false;
};

int cmd_run(const RunArgs& args, Backend backend) {
  TruthTable2 f = parse_truth_table(args.table);
  PairRun run = run_pair(f, load_formula(args.a_path), load_formula(args.b_path), backend);

  auto out = nlohmann::ordered_json::parse(record_to_json(run.record));
  out["oracle"] = to_string(backend);
  out["classical_log"] = jsonl_array(run.classical.log_jsonl());
  out["quantum_log"] = jsonl_array(run.quantum.log_jsonl());
  if (args.trace) out["trace"] = nlohmann::ordered_json::parse(trace_to_json(run.trace));
  std::cout << out.dump(2) << "\n";
  return run.record.agree && !run.record.determinism_violation ? 0 : 1;
}

struct VerifyArgs {
  bool exhaustive = false;
  bool random = false;
  Var max_vars = 3;
  std::size_t max_nodes = 5;
  std::size_t pair_limit = kDefaultPairLimit;
  std::size_t pairs = 1000;
  Var vars = 10;
  std::size_t clauses = 0;  // 0: round(4.2 * vars)
  std::size_t width = 3;
  std::uint64_t seed = 7;
  std::string records = "failures";
  unsigned threads = 1;
};

int cmd_verify(const VerifyArgs& args, Backend backend) {
  Corpus corpus;
  if (args.exhaustive) {
    corpus = enumerate_small(args.max_vars, args.max_nodes, args.pair_limit);
  } else {
    std::size_t clauses = args.clauses ? args.clauses : static_cast<std::size_t>(std::lround(4.2 * args.vars));
    corpus = random_corpus(args.pairs, args.vars, clauses, args.width, args.seed);
  }
  Report report = sweep(corpus, {backend, args.threads});
  std::cout << report_to_json(report, args.records == "all");
  std::cerr << summary_text(report);
  return report.summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One SAT query versus two: protocol dispatch and verification"};
  app.require_subcommand(1);

  std::string oracle = "dpll";
  app.add_option("--oracle", oracle, "SAT backend")
      ->check(CLI::IsMember({"dpll", "brute"}))
      ->capture_default_str();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Verify one decision function on one formula pair");
  run->add_option("--f", run_args.table, "Truth table: 4 bits f00f01f10f11 or a mnemonic")->required();
  run->add_option("--a", run_args.a_path, "First formula (.expr text or .cnf DIMACS)")->required();
  run->add_option("--b", run_args.b_path, "Second formula")->required();
  run->add_flag("--trace", run_args.trace, "Include the exact circuit trace");

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Sweep all 16 decision functions over a corpus");
  auto* ex = verify->add_flag("--exhaustive", v.exhaustive, "Enumerate all small formulas");
  auto* rnd = verify->add_flag("--random", v.random, "Random 3-CNF pairs");
  ex->excludes(rnd);
  verify->add_option("--max-vars", v.max_vars, "Exhaustive: variables (<= 3)")->capture_default_str();
  verify->add_option("--max-nodes", v.max_nodes, "Exhaustive: AST node bound")->capture_default_str();
  verify->add_option("--pair-limit", v.pair_limit, "Exhaustive: pair budget")->capture_default_str();
  verify->add_option("--pairs", v.pairs, "Random: number of pairs")->capture_default_str();
  verify->add_option("--vars", v.vars, "Random: variables per formula")->capture_default_str();
  verify->add_option("--clauses", v.clauses, "Random: clauses per formula (default 4.2 * vars)");
  verify->add_option("--width", v.width, "Random: literals per clause")->capture_default_str();
  verify->add_option("--seed", v.seed, "Random: 64-bit seed")->capture_default_str();
  verify->add_option("--records", v.records, "Records to list in the report")
      ->check(CLI::IsMember({"all", "failures"}))
      ->capture_default_str();
  verify->add_option("--threads", v.threads, "Worker threads")->capture_default_str();

  bool contrast_json = false;
  auto* contrast = app.add_subcommand("contrast", "Classical one-query decision trees in the black-box model");
  contrast->add_flag("--json", contrast_json, "Emit JSON instead of a table");

  CLI11_PARSE(app, argc, argv);

  try {
    const Backend backend = backend_from_string(oracle);
    if (*run) return cmd_run(run_args, backend);
    if (*verify) {
      if (!v.exhaustive && !v.random) {
        std::cerr << "verify: one of --exhaustive or --random is required\n";
        return 2;
      }
      return cmd_verify(v, backend);
    }
    if (*contrast) {
      auto rows = contrast_demo();
      std::cout << (contrast_json ? contrast_to_json(rows) : contrast_table(rows));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "onecall: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
