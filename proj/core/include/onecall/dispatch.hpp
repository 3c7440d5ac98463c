#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "onecall/formula.hpp"
#include "onecall/oracle.hpp"
#include "onecall/qsim.hpp"

namespace onecall {

/// A decision function F : {0,1}² → {0,1}, stored as its four outputs.
/// Bit (2a + b) of `bits()` is F(a, b).
class TruthTable2 {
 public:
  constexpr TruthTable2() = default;
  constexpr explicit TruthTable2(std::uint8_t bits) : bits_(bits & 0xF) {}
  constexpr TruthTable2(int f00, int f01, int f10, int f11)
      : bits_(static_cast<std::uint8_t>((f00 & 1) | (f01 & 1) << 1 | (f10 & 1) << 2 | (f11 & 1) << 3)) {}

  constexpr int operator()(int a, int b) const { return (bits_ >> (2 * (a & 1) + (b & 1))) & 1; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr TruthTable2 complement() const { return TruthTable2(static_cast<std::uint8_t>(~bits_)); }

  /// "f00f01f10f11", e.g. "0110" for XOR.
  std::string to_string() const;

  /// All 16 tables in order of bits().
  static std::array<TruthTable2, 16> all();

  friend constexpr bool operator==(TruthTable2, TruthTable2) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Accepts a 4-character bit string "f00f01f10f11" (spaces allowed) or a
/// mnemonic (and, or, xor, xnor, nand, nor, a, b, not-a, not-b, andnot,
/// notand-b, implies, true, false).
TruthTable2 parse_truth_table(std::string_view text);

/// Mnemonic table used by parse_truth_table.
const std::vector<std::pair<std::string, TruthTable2>>& truth_table_mnemonics();

using OraclePattern = std::pair<int, int>;

/// S = {(a,b) | F(a,b) = 1}, in lexicographic order.
struct AcceptingSet {
  std::vector<OraclePattern> members;

  std::size_t size() const { return members.size(); }
  bool contains(int a, int b) const;
  friend bool operator==(const AcceptingSet&, const AcceptingSet&) = default;
};

AcceptingSet accepting_set(TruthTable2 f);

// Protocols. `negate` is free classical post-processing of the answer.

struct ConstProtocol {
  int value = 0;
  friend bool operator==(const ConstProtocol&, const ConstProtocol&) = default;
};

enum class Recipe { A, B, AOrB, AAndB };

struct SingleQuery {
  Recipe recipe = Recipe::A;
  bool negate = false;
  friend bool operator==(const SingleQuery&, const SingleQuery&) = default;
};

struct DeutschXor {
  bool negate = false;
  friend bool operator==(const DeutschXor&, const DeutschXor&) = default;
};

/// `swapped` selects the (B, A) order, i.e. computes O(B) ∧ ¬O(A).
struct DeutschAndNot {
  bool swapped = false;
  bool negate = false;
  friend bool operator==(const DeutschAndNot&, const DeutschAndNot&) = default;
};

using Protocol = std::variant<ConstProtocol, SingleQuery, DeutschXor, DeutschAndNot>;

std::string describe(const Protocol& p);
/// The same protocol with its output complemented.
Protocol negated(const Protocol& p);
/// True for the protocols that run a simulated quantum circuit.
bool is_quantum(const Protocol& p);

/// The ≤1-query protocol computing F. Tables with |S| ≥ 3 reuse the
/// protocol of their complement with the output negated.
Protocol select_protocol(TruthTable2 f);

/// Runs `p` on the question pair (a, b). Records at most one query on
/// `oracle`; none for constant protocols. `trace` is filled for quantum
/// protocols.
int execute(const Protocol& p, const Formula& a, const Formula& b, CountedOracle& oracle,
            Trace* trace = nullptr);

/// Two non-adaptive classical queries, O(a) then O(b), followed by F. Never
/// shortcuts constant F.
int eval_classical_two_query(TruthTable2 f, const Formula& a, const Formula& b, CountedOracle& oracle);

}  // namespace onecall
