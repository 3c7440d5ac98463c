#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "onecall/dispatch.hpp"
#include "onecall/formula.hpp"
#include "onecall/oracle.hpp"
#include "onecall/qsim.hpp"

namespace onecall {

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

enum class CorpusMode { ExhaustiveSmall, Random };

/// Pair budget used by the exhaustive corpus when the full Cartesian square
/// is larger.
inline constexpr std::size_t kDefaultPairLimit = 40000;
inline constexpr std::size_t kMaxFormulaCount = 1'000'000;
inline constexpr std::size_t kMaxPairCount = 1'000'000;

struct CorpusParams {
  CorpusMode mode = CorpusMode::ExhaustiveSmall;
  // exhaustive-small
  Var max_vars = 0;
  std::size_t max_nodes = 0;
  std::size_t pair_limit = kDefaultPairLimit;
  // random
  std::size_t pairs = 0;
  Var vars = 0;
  std::size_t clauses = 0;
  std::size_t width = 0;
  std::uint64_t seed = 0;
};

struct Corpus {
  CorpusParams params;
  /// Distinct formulas the pairs are drawn from (exhaustive mode only).
  std::vector<Formula> formulas;
  std::vector<std::pair<Formula, Formula>> pairs;
};

/// Every AST with at most `max_nodes` nodes over variables x1..x`max_vars`
/// built from Var, true, false, Not and binary And/Or. Ordered by node
/// count, then serialized text; duplicates by serialization removed.
/// Throws BudgetExceeded for max_vars > 3 or more than kMaxFormulaCount
/// formulas.
std::vector<Formula> enumerate_formulas(Var max_vars, std::size_t max_nodes);

/// The formulas of enumerate_formulas and their ordered pairs. When the
/// square exceeds `pair_limit`, pairs are taken at a fixed stride through
/// the row-major square; the stride is coprime to the formula count, so
/// every formula appears in both positions.
Corpus enumerate_small(Var max_vars, std::size_t max_nodes, std::size_t pair_limit = kDefaultPairLimit);

/// Uniform random k-CNF: each clause has `width` distinct variables from
/// 1..vars with independent fair polarities. Fully determined by `seed`.
CnfFormula gen_random_cnf_clauses(Var vars, std::size_t clauses, std::size_t width, std::uint64_t seed);
Formula gen_random_cnf(Var vars, std::size_t clauses, std::size_t width, std::uint64_t seed);

/// `pairs` independent random CNF pairs; per-formula seeds are drawn from a
/// generator seeded with `seed`.
Corpus random_corpus(std::size_t pairs, Var vars, std::size_t clauses, std::size_t width,
                     std::uint64_t seed);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct VerifyRecord {
  TruthTable2 f;
  std::size_t pair_index = 0;
  std::string a;
  std::string b;
  std::string protocol;
  int classical_answer = -1;
  int quantum_answer = -1;
  std::size_t classical_queries = 0;
  std::size_t quantum_queries = 0;
  bool agree = false;
  /// A quantum circuit ran and its measurement was certified exact.
  bool certified = false;
  bool determinism_violation = false;
  std::string error;
};

/// Everything produced by one (F, a, b) comparison, including both oracles'
/// logs and the circuit trace when the protocol is quantum.
struct PairRun {
  VerifyRecord record;
  CountedOracle classical;
  CountedOracle quantum;
  Trace trace;
};

PairRun run_pair(TruthTable2 f, const Formula& a, const Formula& b, Backend backend = Backend::Dpll);

/// Classical two-query baseline against the dispatched protocol, each on a
/// fresh oracle. Failures are captured in the record, never thrown.
VerifyRecord verify_pair(TruthTable2 f, const Formula& a, const Formula& b, Backend backend = Backend::Dpll);

struct ReportSummary {
  std::size_t total = 0;
  std::size_t agreements = 0;
  std::size_t mismatches = 0;
  std::size_t determinism_violations = 0;
  std::size_t errors = 0;
  std::size_t quantum_runs = 0;
  std::size_t certified_runs = 0;
  std::size_t max_quantum_queries = 0;
  std::size_t min_classical_queries = 0;
  std::size_t max_classical_queries = 0;

  bool ok() const { return mismatches == 0 && determinism_violations == 0; }
};

struct Report {
  CorpusParams params;
  std::size_t pair_count = 0;
  Backend backend = Backend::Dpll;
  std::vector<VerifyRecord> records;
  ReportSummary summary;
};

struct SweepOptions {
  Backend backend = Backend::Dpll;
  unsigned threads = 1;
};

/// verify_pair for all 16 tables on every corpus pair. Records are ordered
/// by pair, then by table bits, independent of thread count.
Report sweep(const Corpus& corpus, const SweepOptions& options = {});

ReportSummary summarize(const std::vector<VerifyRecord>& records);

std::string record_to_json(const VerifyRecord& r);
/// Stable-field-order JSON. With `all_records` false only failing records
/// are listed.
std::string report_to_json(const Report& report, bool all_records);
std::string summary_text(const Report& report);

// ---------------------------------------------------------------------------
// Black-box contrast
// ---------------------------------------------------------------------------

/// A classical strategy that reads one of the two oracle bits and maps it
/// to an output.
struct DecisionTree1 {
  int queried_slot = 0;  // 0 = first bit, 1 = second bit
  std::array<int, 2> output{};

  int evaluate(int a, int b) const { return output[static_cast<std::size_t>(queried_slot == 0 ? a : b)]; }
  std::string to_string() const;
};

/// All 8 one-query trees.
std::vector<DecisionTree1> all_decision_trees();

struct ContrastRow {
  std::string name;
  TruthTable2 f;
  std::vector<DecisionTree1> computing;  // trees that agree with f on all 4 inputs
};

/// AND, XOR and the two projections, each checked against all 8 trees.
std::vector<ContrastRow> contrast_demo();
std::string contrast_table(const std::vector<ContrastRow>& rows);
std::string contrast_to_json(const std::vector<ContrastRow>& rows);

}  // namespace onecall
