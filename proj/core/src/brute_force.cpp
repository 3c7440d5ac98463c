// Reference oracle: evaluate the formula on every assignment, 64 at a time.
// Assignment t gives variable v the value of bit (v-1) of t; lane l of word
// w holds assignment t = 64*w + l.

#include <array>
#include <bit>

#include "onecall/oracle.hpp"

namespace onecall {
namespace {

enum class Op : std::uint8_t { Var, True, False, Not, And, Or };

struct Instr {
  Op op;
  std::uint32_t arg;  // variable index or child count
};

void compile(const Formula& f, std::vector<Instr>& prog) {
  switch (f.kind()) {
    case NodeKind::Var:
      prog.push_back({Op::Var, f.index()});
      return;
    case NodeKind::True:
      prog.push_back({Op::True, 0});
      return;
    case NodeKind::False:
      prog.push_back({Op::False, 0});
      return;
    case NodeKind::Not:
      compile(f.children()[0], prog);
      prog.push_back({Op::Not, 1});
      return;
    case NodeKind::And:
    case NodeKind::Or:
      for (const auto& c : f.children()) compile(c, prog);
      prog.push_back({f.kind() == NodeKind::And ? Op::And : Op::Or,
                      static_cast<std::uint32_t>(f.children().size())});
      return;
  }
}

constexpr std::array<std::uint64_t, 6> kLanePatterns = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

class BitslicedEvaluator {
 public:
  BitslicedEvaluator(const Formula& f, Var num_vars) : num_vars_(num_vars) {
    if (num_vars > kBruteForceVarLimit)
      throw BudgetExceeded("brute force limited to " + std::to_string(kBruteForceVarLimit) +
                           " variables, formula has " + std::to_string(num_vars));
    if (num_vars < f.max_var()) throw std::invalid_argument("num_vars below formula max_var");
    compile(f, prog_);
    stack_.reserve(prog_.size());
  }

  std::uint64_t words() const { return num_vars_ <= 6 ? 1 : (std::uint64_t{1} << (num_vars_ - 6)); }

  std::uint64_t valid_lanes() const {
    return num_vars_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << num_vars_)) - 1;
  }

  std::uint64_t eval_word(std::uint64_t w) {
    stack_.clear();
    for (const Instr& in : prog_) {
      switch (in.op) {
        case Op::Var:
          stack_.push_back(in.arg <= 6 ? kLanePatterns[in.arg - 1]
                                       : ((w >> (in.arg - 7)) & 1 ? ~std::uint64_t{0} : 0));
          break;
        case Op::True:
          stack_.push_back(~std::uint64_t{0});
          break;
        case Op::False:
          stack_.push_back(0);
          break;
        case Op::Not:
          stack_.back() = ~stack_.back();
          break;
        case Op::And:
        case Op::Or: {
          std::uint64_t acc = stack_.back();
          stack_.pop_back();
          for (std::uint32_t i = 1; i < in.arg; ++i) {
            acc = in.op == Op::And ? (acc & stack_.back()) : (acc | stack_.back());
            stack_.pop_back();
          }
          stack_.push_back(acc);
          break;
        }
      }
    }
    return stack_.back() & valid_lanes();
  }

 private:
  Var num_vars_;
  std::vector<Instr> prog_;
  std::vector<std::uint64_t> stack_;
};

}  // namespace

OracleAnswer brute_force_sat(const Formula& f) {
  BitslicedEvaluator eval(f, f.max_var());
  for (std::uint64_t w = 0; w < eval.words(); ++w)
    if (eval.eval_word(w)) return OracleAnswer(true);
  return OracleAnswer(false);
}

std::uint64_t count_models(const Formula& f, Var num_vars) {
  BitslicedEvaluator eval(f, num_vars);
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < eval.words(); ++w) total += std::popcount(eval.eval_word(w));
  return total;
}

}  // namespace onecall
