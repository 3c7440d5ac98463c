#include "onecall/dispatch.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace onecall {

std::string TruthTable2::to_string() const {
  std::string s;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s += static_cast<char>('0' + (*this)(a, b));
  return s;
}

std::array<TruthTable2, 16> TruthTable2::all() {
  std::array<TruthTable2, 16> out{};
  for (std::uint8_t i = 0; i < 16; ++i) out[i] = TruthTable2(i);
  return out;
}

const std::vector<std::pair<std::string, TruthTable2>>& truth_table_mnemonics() {
  static const std::vector<std::pair<std::string, TruthTable2>> table = {
      {"false", {0, 0, 0, 0}}, {"and", {0, 0, 0, 1}},      {"andnot", {0, 0, 1, 0}},
      {"a", {0, 0, 1, 1}},     {"notand-b", {0, 1, 0, 0}}, {"b", {0, 1, 0, 1}},
      {"xor", {0, 1, 1, 0}},   {"or", {0, 1, 1, 1}},       {"nor", {1, 0, 0, 0}},
      {"xnor", {1, 0, 0, 1}},  {"not-b", {1, 0, 1, 0}},    {"not-a", {1, 1, 0, 0}},
      {"implies", {1, 1, 0, 1}}, {"nand", {1, 1, 1, 0}},   {"true", {1, 1, 1, 1}},
  };
  return table;
}

TruthTable2 parse_truth_table(std::string_view text) {
  std::string lowered;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  if (lowered.size() == 4 && std::all_of(lowered.begin(), lowered.end(), [](char c) { return c == '0' || c == '1'; }))
    return TruthTable2(lowered[0] - '0', lowered[1] - '0', lowered[2] - '0', lowered[3] - '0');

  for (const auto& [name, table] : truth_table_mnemonics())
    if (name == lowered) return table;
  throw std::invalid_argument("unknown truth table '" + std::string(text) +
                              "': expected 4 bits f00f01f10f11 or a mnemonic");
}

bool AcceptingSet::contains(int a, int b) const {
  return std::find(members.begin(), members.end(), OraclePattern{a, b}) != members.end();
}

AcceptingSet accepting_set(TruthTable2 f) {
  AcceptingSet s;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (f(a, b)) s.members.emplace_back(a, b);
  return s;
}

namespace {

const char* recipe_name(Recipe r) {
  switch (r) {
    case Recipe::A: return "A";
    case Recipe::B: return "B";
    case Recipe::AOrB: return "A|B";
    case Recipe::AAndB: return "A&B";
  }
  return "?";
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string describe(const Protocol& p) {
  auto neg = [](bool n) { return n ? ", negate" : ""; };
  return std::visit(
      overloaded{
          [](const ConstProtocol& c) { return "Const(" + std::to_string(c.value) + ")"; },
          [&](const SingleQuery& q) { return std::string("SingleQuery(") + recipe_name(q.recipe) + neg(q.negate) + ")"; },
          [&](const DeutschXor& d) { return std::string("DeutschXor(") + (d.negate ? "negate" : "") + ")"; },
          [&](const DeutschAndNot& d) {
            return std::string("DeutschAndNot(") + (d.swapped ? "B,A" : "A,B") + neg(d.negate) + ")";
          },
      },
      p);
}

Protocol negated(const Protocol& p) {
  return std::visit(overloaded{
                        [](ConstProtocol c) -> Protocol { return ConstProtocol{1 - c.value}; },
                        [](SingleQuery q) -> Protocol { return SingleQuery{q.recipe, !q.negate}; },
                        [](DeutschXor d) -> Protocol { return DeutschXor{!d.negate}; },
                        [](DeutschAndNot d) -> Protocol { return DeutschAndNot{d.swapped, !d.negate}; },
                    },
                    p);
}

bool is_quantum(const Protocol& p) {
  return std::holds_alternative<DeutschXor>(p) || std::holds_alternative<DeutschAndNot>(p);
}

Protocol select_protocol(TruthTable2 f) {
  const int size = std::popcount(f.bits());
  if (size >= 3) return negated(select_protocol(f.complement()));
  if (size == 0) return ConstProtocol{0};

  const AcceptingSet s = accepting_set(f);
  if (size == 1) {
    const auto [a, b] = s.members.front();
    if (a == 1 && b == 1) return SingleQuery{Recipe::AAndB, false};
    if (a == 0 && b == 0) return SingleQuery{Recipe::AOrB, true};
    return DeutschAndNot{/*swapped=*/a == 0, false};
  }

  // |S| = 2: either one coordinate is fixed across S, or S is XOR / XNOR.
  const auto [a0, b0] = s.members[0];
  const auto [a1, b1] = s.members[1];
  if (a0 == a1) return SingleQuery{Recipe::A, a0 == 0};
  if (b0 == b1) return SingleQuery{Recipe::B, b0 == 0};
  return DeutschXor{/*negate=*/s.contains(0, 0)};
}

int execute(const Protocol& p, const Formula& a, const Formula& b, CountedOracle& oracle, Trace* trace) {
  auto flip = [](int bit, bool negate) { return negate ? 1 - bit : bit; };
  return std::visit(
      overloaded{
          [](const ConstProtocol& c) { return c.value; },
          [&](const SingleQuery& q) {
            const Formula query = q.recipe == Recipe::A      ? a
                                  : q.recipe == Recipe::B    ? b
                                  : q.recipe == Recipe::AOrB ? or_combine(a, b)
                                                             : and_combine(a, b);
            return flip(oracle.classical_query(query).bit(), q.negate);
          },
          [&](const DeutschXor& d) { return flip(run_deutsch_xor(a, b, oracle, trace), d.negate); },
          [&](const DeutschAndNot& d) {
            int bit = d.swapped ? run_deutsch_and_not(b, a, oracle, trace) : run_deutsch_and_not(a, b, oracle, trace);
            return flip(bit, d.negate);
          },
      },
      p);
}

int eval_classical_two_query(TruthTable2 f, const Formula& a, const Formula& b, CountedOracle& oracle) {
  const int oa = oracle.classical_query(a).bit();
  const int ob = oracle.classical_query(b).bit();
  return f(oa, ob);
}

}  // namespace onecall
