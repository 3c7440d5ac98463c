#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "onecall/formula.hpp"

namespace onecall {

/// 1 iff the queried formula is satisfiable.
class OracleAnswer {
 public:
  constexpr OracleAnswer() = default;
  constexpr explicit OracleAnswer(bool sat) : bit_(sat ? 1 : 0) {}
  constexpr int bit() const noexcept { return bit_; }
  constexpr explicit operator bool() const noexcept { return bit_ != 0; }
  friend constexpr bool operator==(OracleAnswer, OracleAnswer) = default;

 private:
  int bit_ = 0;
};

/// Largest variable count brute_force_sat will enumerate.
inline constexpr Var kBruteForceVarLimit = 24;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive evaluation over all 2^max_var assignments. Throws
/// BudgetExceeded when max_var > kBruteForceVarLimit.
OracleAnswer brute_force_sat(const Formula& f);

/// Number of satisfying assignments over variables 1..num_vars, which must
/// cover f.max_var() and be at most kBruteForceVarLimit.
std::uint64_t count_models(const Formula& f, Var num_vars);

/// DPLL without learning: unit propagation to fixpoint, then pure literals,
/// then branch on the lowest unassigned variable trying true first.
OracleAnswer dpll_sat(const CnfFormula& cnf);

enum class Backend { Dpll, BruteForce };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);

enum class QueryKind { ClassicalCall, QuantumApplication };

std::string to_string(QueryKind k);

/// One oracle invocation. Classical calls carry one formula; a quantum
/// application carries both slot labels and the value O() takes on each.
struct QueryRecord {
  QueryKind kind;
  std::vector<std::string> formulas;
  std::vector<int> answers;
};

/// SAT oracle that charges every invocation. One quantum application is one
/// query even though the simulator has to decide both slot labels.
class CountedOracle {
 public:
  using Solver = std::function<OracleAnswer(const Formula&)>;

  explicit CountedOracle(Backend backend = Backend::Dpll);
  /// Custom decision procedure, e.g. a stub that returns fixed bits.
  explicit CountedOracle(Solver solver, std::string name = "custom");

  OracleAnswer classical_query(const Formula& f);
  std::pair<OracleAnswer, OracleAnswer> quantum_application(const Formula& q0, const Formula& q1);

  std::size_t count() const noexcept { return log_.size(); }
  std::size_t count(QueryKind kind) const;
  const std::vector<QueryRecord>& log() const noexcept { return log_; }
  const std::string& name() const noexcept { return name_; }

  /// The log as JSON lines, one record per line. Classical records are
  /// {"kind","formula","answer"}; quantum records add "formula1"/"answer1"
  /// for the second slot.
  std::string log_jsonl() const;

 private:
  Solver solver_;
  std::string name_;
  std::vector<QueryRecord> log_;
};

/// Decide f with the given backend without touching any query log.
OracleAnswer decide(const Formula& f, Backend backend);

}  // namespace onecall
