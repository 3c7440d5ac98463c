#include "onecall/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace onecall {

Formula Formula::make(NodeKind kind, Var index, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->index = index;
  node->max_var = index;
  for (const auto& c : children) {
    node->max_var = std::max(node->max_var, c.max_var());
    node->size += c.size();
  }
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::var(Var index) {
  if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  return make(NodeKind::Var, index, {});
}

Formula Formula::constant(bool value) {
  return make(value ? NodeKind::True : NodeKind::False, 0, {});
}

Formula Formula::negate(Formula child) { return make(NodeKind::Not, 0, {std::move(child)}); }

Formula Formula::conj(std::vector<Formula> children) {
  if (children.size() < 2) throw std::invalid_argument("And needs at least two children");
  return make(NodeKind::And, 0, std::move(children));
}

Formula Formula::disj(std::vector<Formula> children) {
  if (children.size() < 2) throw std::invalid_argument("Or needs at least two children");
  return make(NodeKind::Or, 0, std::move(children));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return conj(std::vector<Formula>{std::move(lhs), std::move(rhs)});
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return disj(std::vector<Formula>{std::move(lhs), std::move(rhs)});
}

// `assignment[v]` is the value of variable v; index 0 is unused.
bool Formula::evaluate(const std::vector<bool>& assignment) const {
  switch (kind()) {
    case NodeKind::Var:
      if (index() >= assignment.size()) throw std::out_of_range("assignment too short");
      return assignment[index()];
    case NodeKind::True:
      return true;
    case NodeKind::False:
      return false;
    case NodeKind::Not:
      return !children()[0].evaluate(assignment);
    case NodeKind::And:
      return std::all_of(children().begin(), children().end(),
                         [&](const Formula& c) { return c.evaluate(assignment); });
    case NodeKind::Or:
      return std::any_of(children().begin(), children().end(),
                         [&](const Formula& c) { return c.evaluate(assignment); });
  }
  return false;
}

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.kind() != rhs.kind() || lhs.index() != rhs.index() ||
      lhs.size() != rhs.size() || lhs.children().size() != rhs.children().size())
    return false;
  return std::equal(lhs.children().begin(), lhs.children().end(), rhs.children().begin());
}

void validate(const CnfFormula& cnf) {
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) {
      if (lit == 0) throw std::invalid_argument("literal 0 inside a clause");
      if (static_cast<Var>(std::abs(static_cast<long long>(lit))) > cnf.num_vars)
        throw std::invalid_argument("literal " + std::to_string(lit) +
                                    " exceeds variable count " + std::to_string(cnf.num_vars));
    }
  }
}

namespace {

Formula literal(int lit) {
  auto v = Formula::var(static_cast<Var>(std::abs(lit)));
  return lit > 0 ? v : Formula::negate(std::move(v));
}

Formula join(std::vector<Formula> parts, bool conjunction) {
  if (parts.empty()) return Formula::constant(conjunction);
  if (parts.size() == 1) return std::move(parts.front());
  return conjunction ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
}

}  // namespace

Formula cnf_to_formula(const CnfFormula& cnf) {
  validate(cnf);
  std::vector<Formula> clauses;
  clauses.reserve(cnf.clauses.size());
  for (const auto& clause : cnf.clauses) {
    std::vector<Formula> lits;
    lits.reserve(clause.size());
    for (int lit : clause) lits.push_back(literal(lit));
    clauses.push_back(join(std::move(lits), false));
  }
  return join(std::move(clauses), true);
}

Formula rename_offset(const Formula& f, Var offset) {
  if (offset == 0 || f.max_var() == 0) return f;
  switch (f.kind()) {
    case NodeKind::Var:
      if (f.index() > std::numeric_limits<Var>::max() - offset)
        throw std::overflow_error("variable index overflow in rename_offset");
      return Formula::var(f.index() + offset);
    case NodeKind::True:
    case NodeKind::False:
      return f;
    case NodeKind::Not:
      return Formula::negate(rename_offset(f.children()[0], offset));
    case NodeKind::And:
    case NodeKind::Or: {
      std::vector<Formula> kids;
      kids.reserve(f.children().size());
      for (const auto& c : f.children()) kids.push_back(rename_offset(c, offset));
      return f.kind() == NodeKind::And ? Formula::conj(std::move(kids))
                                       : Formula::disj(std::move(kids));
    }
  }
  return f;
}

Formula or_combine(const Formula& a, const Formula& b) {
  return Formula::disj(a, rename_offset(b, a.max_var()));
}

Formula and_combine(const Formula& a, const Formula& b) {
  return Formula::conj(a, rename_offset(b, a.max_var()));
}

}  // namespace onecall
