#include <limits>

#include "onecall/formula.hpp"

namespace onecall {
namespace {

class TseitinEncoder {
 public:
  explicit TseitinEncoder(Var first_free) : next_(first_free) {}

  int encode(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::Var:
        return as_lit(f.index());
      case NodeKind::Not:
        return -encode(f.children()[0]);
      case NodeKind::True:
      case NodeKind::False: {
        int g = fresh();
        clauses_.push_back({f.kind() == NodeKind::True ? g : -g});
        return g;
      }
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<int> kids;
        kids.reserve(f.children().size());
        for (const auto& c : f.children()) kids.push_back(encode(c));
        int g = fresh();
        // And: g -> each child, all children -> g.  Or is the dual.
        int sign = f.kind() == NodeKind::And ? 1 : -1;
        std::vector<int> big{sign * g};
        for (int k : kids) {
          clauses_.push_back({-sign * g, sign * k});
          big.push_back(-sign * k);
        }
        clauses_.push_back(std::move(big));
        return g;
      }
    }
    return 0;
  }

  CnfFormula finish(int root) {
    clauses_.push_back({root});
    CnfFormula cnf;
    cnf.num_vars = next_ - 1;
    cnf.clauses = std::move(clauses_);
    return cnf;
  }

 private:
  static int as_lit(Var v) {
    if (v > static_cast<Var>(std::numeric_limits<int>::max()))
      throw std::overflow_error("variable index does not fit a DIMACS literal");
    return static_cast<int>(v);
  }

  int fresh() { return as_lit(next_++); }

  Var next_;
  std::vector<std::vector<int>> clauses_;
};

}  // namespace

CnfFormula tseitin(const Formula& f) {
  TseitinEncoder enc(f.max_var() + 1);
  int root = enc.encode(f);
  return enc.finish(root);
}

}  // namespace onecall
