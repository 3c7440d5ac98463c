#include <cstdlib>

#include "onecall/oracle.hpp"

namespace onecall {
namespace {

// Literal l maps to slot 2|l| + (l < 0) in the occurrence table.
std::size_t slot(int lit) { return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0); }

class Dpll {
 public:
  explicit Dpll(const CnfFormula& cnf)
      : clauses_(cnf.clauses), value_(cnf.num_vars + 1, 0), occurs_(2 * (cnf.num_vars + 1)) {
    for (std::size_t c = 0; c < clauses_.size(); ++c)
      for (int lit : clauses_[c]) occurs_[slot(lit)].push_back(c);
  }

  bool solve() {
    // Clauses that are empty or unit before any assignment.
    for (const auto& clause : clauses_) {
      if (clause.empty()) return false;
      if (clause.size() == 1 && !enqueue(clause.front())) return false;
    }
    return search();
  }

 private:
  bool search() {
    const std::size_t mark = trail_.size();
    if (!simplify()) {
      undo(mark);
      return false;
    }
    const int var = branch_variable();
    if (var == 0) return true;
    for (int lit : {var, -var}) {
      const std::size_t inner = trail_.size();
      enqueue(lit);
      if (search()) return true;
      undo(inner);
    }
    undo(mark);
    return false;
  }

  int lit_value(int lit) const {
    int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : -v;
  }

  // Assign lit unless already set; false if it contradicts the assignment.
  bool enqueue(int lit) {
    int v = lit_value(lit);
    if (v != 0) return v > 0;
    value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : -1;
    trail_.push_back(lit);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<std::size_t>(std::abs(trail_.back()))] = 0;
      trail_.pop_back();
    }
    if (head_ > mark) head_ = mark;
  }

  bool satisfied(const std::vector<int>& clause) const {
    for (int lit : clause)
      if (lit_value(lit) > 0) return true;
    return false;
  }

  // Unit propagation to fixpoint; false on conflict. Only clauses that
  // contain the negation of a newly assigned literal can become unit.
  bool propagate() {
    while (head_ < trail_.size()) {
      const int falsified = -trail_[head_++];
      for (std::size_t c : occurs_[slot(falsified)]) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : clauses_[c]) {
          int v = lit_value(lit);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) enqueue(last);
      }
    }
    return true;
  }

  // Assigns every pure literal of the open clauses; returns how many.
  std::size_t assign_pure() {
    seen_.assign(value_.size(), 0);  // bit 0: positive, bit 1: negative
    for (const auto& clause : clauses_) {
      if (satisfied(clause)) continue;
      for (int lit : clause)
        if (lit_value(lit) == 0) seen_[static_cast<std::size_t>(std::abs(lit))] |= lit > 0 ? 1 : 2;
    }
    std::size_t n = 0;
    for (std::size_t v = 1; v < seen_.size(); ++v) {
      if (seen_[v] == 1 || seen_[v] == 2) {
        enqueue(seen_[v] == 1 ? static_cast<int>(v) : -static_cast<int>(v));
        ++n;
      }
    }
    return n;
  }

  bool simplify() {
    do {
      if (!propagate()) return false;
    } while (assign_pure() > 0);
    return true;
  }

  // Lowest unassigned variable of any open clause; 0 when none remain.
  int branch_variable() const {
    int best = 0;
    for (const auto& clause : clauses_) {
      if (satisfied(clause)) continue;
      for (int lit : clause) {
        int v = std::abs(lit);
        if (lit_value(lit) == 0 && (best == 0 || v < best)) best = v;
      }
    }
    return best;
  }

  const std::vector<std::vector<int>>& clauses_;
  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<int> trail_;  // assigned literals in order
  std::size_t head_ = 0;    // trail_[head_..] not yet propagated
  std::vector<std::uint8_t> seen_;
};

}  // namespace

OracleAnswer dpll_sat(const CnfFormula& cnf) {
  validate(cnf);
  Dpll solver(cnf);
  return OracleAnswer(solver.solve());
}

}  // namespace onecall
