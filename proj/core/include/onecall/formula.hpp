#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace onecall {

/// Raised by the expression and DIMACS readers. `position()` is a byte
/// offset into the input for expressions and a 1-based line number for
/// DIMACS text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

using Var = std::uint32_t;

enum class NodeKind : std::uint8_t { Var, Not, And, Or, True, False };

/// Immutable Boolean expression over variables x1, x2, ...
///
/// Nodes are shared between formulas, so copying a Formula is O(1) and
/// combining two formulas never copies either operand. Equality is
/// structural.
class Formula {
 public:
  static Formula var(Var index);
  static Formula constant(bool value);
  static Formula negate(Formula child);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);

  NodeKind kind() const noexcept { return node_->kind; }
  /// Variable index of a Var node; 0 otherwise.
  Var index() const noexcept { return node_->index; }
  const std::vector<Formula>& children() const noexcept { return node_->children; }

  /// Largest variable index present, 0 for variable-free formulas.
  Var max_var() const noexcept { return node_->max_var; }
  /// Number of AST nodes.
  std::size_t size() const noexcept { return node_->size; }

  bool evaluate(const std::vector<bool>& assignment) const;

  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  struct Node {
    NodeKind kind;
    Var index = 0;
    std::vector<Formula> children;
    Var max_var = 0;
    std::size_t size = 1;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(NodeKind kind, Var index, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// Clause list in DIMACS convention: literal +v is variable v, -v its
/// negation. An empty clause list is satisfiable; an empty clause is not.
struct CnfFormula {
  Var num_vars = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws std::invalid_argument on a zero literal or |literal| > num_vars.
void validate(const CnfFormula& cnf);

// Text formats.
Formula parse_expr(std::string_view text);
std::string serialize_expr(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& cnf);

Formula cnf_to_formula(const CnfFormula& cnf);

/// Shift every variable index by `offset`.
Formula rename_offset(const Formula& f, Var offset);

/// a ∨ b with b's variables moved above a's, so the two operands range over
/// disjoint variable blocks: satisfiable iff a or b is.
Formula or_combine(const Formula& a, const Formula& b);
/// a ∧ b over disjoint variable blocks: satisfiable iff a and b both are.
Formula and_combine(const Formula& a, const Formula& b);

/// Equisatisfiable CNF. Original variables keep their indices; one
/// auxiliary variable per And/Or/constant node is allocated above
/// f.max_var(), and a unit clause asserts the root.
CnfFormula tseitin(const Formula& f);

}  // namespace onecall
