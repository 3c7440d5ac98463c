#include "onecall/oracle.hpp"

#include <algorithm>
#include <json.hpp>

namespace onecall {

std::string to_string(Backend b) { return b == Backend::Dpll ? "dpll" : "brute"; }

Backend backend_from_string(const std::string& name) {
  if (name == "dpll") return Backend::Dpll;
  if (name == "brute" || name == "brute-force") return Backend::BruteForce;
  throw std::invalid_argument("unknown oracle backend '" + name + "' (expected dpll|brute)");
}

std::string to_string(QueryKind k) {
  return k == QueryKind::ClassicalCall ? "classical-call" : "quantum-application";
}

OracleAnswer decide(const Formula& f, Backend backend) {
  return backend == Backend::Dpll ? dpll_sat(tseitin(f)) : brute_force_sat(f);
}

CountedOracle::CountedOracle(Backend backend)
    : solver_([backend](const Formula& f) { return decide(f, backend); }),
      name_(to_string(backend)) {}

CountedOracle::CountedOracle(Solver solver, std::string name)
    : solver_(std::move(solver)), name_(std::move(name)) {}

OracleAnswer CountedOracle::classical_query(const Formula& f) {
  OracleAnswer ans = solver_(f);
  log_.push_back({QueryKind::ClassicalCall, {serialize_expr(f)}, {ans.bit()}});
  return ans;
}

std::pair<OracleAnswer, OracleAnswer> CountedOracle::quantum_application(const Formula& q0,
                                                                         const Formula& q1) {
  OracleAnswer a0 = solver_(q0);
  OracleAnswer a1 = solver_(q1);
  log_.push_back({QueryKind::QuantumApplication,
                  {serialize_expr(q0), serialize_expr(q1)},
                  {a0.bit(), a1.bit()}});
  return {a0, a1};
}

std::size_t CountedOracle::count(QueryKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(log_.begin(), log_.end(), [kind](const QueryRecord& r) { return r.kind == kind; }));
}

std::string CountedOracle::log_jsonl() const {
  std::string out;
  for (const auto& rec : log_) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(rec.kind);
    j["formula"] = rec.formulas.at(0);
    j["answer"] = rec.answers.at(0);
    if (rec.kind == QueryKind::QuantumApplication) {
      j["formula1"] = rec.formulas.at(1);
      j["answer1"] = rec.answers.at(1);
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace onecall
