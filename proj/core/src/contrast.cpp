// Classical one-query strategies in the black-box setting: the oracle bits
// are opaque, so the only thing a one-query machine can do is read one bit
// and post-process it.

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "onecall/harness.hpp"

namespace onecall {

std::string DecisionTree1::to_string() const {
  std::string s = queried_slot == 0 ? "read a" : "read b";
  s += " -> {0:" + std::to_string(output[0]) + ", 1:" + std::to_string(output[1]) + "}";
  return s;
}

std::vector<DecisionTree1> all_decision_trees() {
  std::vector<DecisionTree1> trees;
  for (int slot = 0; slot < 2; ++slot)
    for (int o0 = 0; o0 < 2; ++o0)
      for (int o1 = 0; o1 < 2; ++o1) trees.push_back({slot, {o0, o1}});
  return trees;
}

std::vector<ContrastRow> contrast_demo() {
  std::vector<ContrastRow> rows = {
      {"AND", parse_truth_table("and"), {}},
      {"XOR", parse_truth_table("xor"), {}},
      {"proj-a", parse_truth_table("a"), {}},
      {"proj-b", parse_truth_table("b"), {}},
  };
  const auto trees = all_decision_trees();
  for (auto& row : rows) {
    for (const auto& tree : trees) {
      bool ok = true;
      for (int a = 0; a < 2 && ok; ++a)
        for (int b = 0; b < 2 && ok; ++b) ok = tree.evaluate(a, b) == row.f(a, b);
      if (ok) row.computing.push_back(tree);
    }
  }
  return rows;
}

std::string contrast_table(const std::vector<ContrastRow>& rows) {
  const std::size_t total = all_decision_trees().size();
  std::ostringstream out;
  out << std::left << std::setw(8) << "F" << std::setw(8) << "table" << std::setw(12) << "trees" << "witnesses\n";
  for (const auto& row : rows) {
    out << std::setw(8) << row.name << std::setw(8) << row.f.to_string() << std::setw(12)
        << (std::to_string(row.computing.size()) + " of " + std::to_string(total));
    if (row.computing.empty()) out << "-";
    for (std::size_t i = 0; i < row.computing.size(); ++i) out << (i ? "; " : "") << row.computing[i].to_string();
    out << "\n";
  }
  return out.str();
}

std::string contrast_to_json(const std::vector<ContrastRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& t : row.computing) w.push_back(t.to_string());
    arr.push_back({{"f", row.name},
                   {"table", row.f.to_string()},
                   {"trees_total", all_decision_trees().size()},
                   {"trees_computing", row.computing.size()},
                   {"witnesses", w}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace onecall
