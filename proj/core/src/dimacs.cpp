#include <cctype>
#include <charconv>
#include <limits>
#include <cstdlib>
#include <sstream>

#include "onecall/formula.hpp"

namespace onecall {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("DIMACS line " + std::to_string(line) + ": " + msg, line);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula cnf;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == 'c') continue;
    if (toks[0] == "%") break;
    if (toks[0] == "p") {
      if (have_header) fail(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf") fail(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      long long nv = to_int(toks[2], line_no);
      declared_clauses = to_int(toks[3], line_no);
      if (nv < 0 || declared_clauses < 0 || nv > std::numeric_limits<int>::max())
        fail(line_no, "header counts out of range");
      cnf.num_vars = static_cast<Var>(nv);
      have_header = true;
      continue;
    }
    if (!have_header) fail(line_no, "clause before 'p cnf' header");
    for (auto tok : toks) {
      long long lit = to_int(tok, line_no);
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::llabs(lit) > static_cast<long long>(cnf.num_vars))
        fail(line_no, "literal " + std::string(tok) + " exceeds declared variable count " +
                          std::to_string(cnf.num_vars));
      current.push_back(static_cast<int>(lit));
    }
    last_line = line_no;
  }

  if (!have_header) fail(line_no, "missing 'p cnf' header");
  if (!current.empty()) fail(last_line, "clause missing terminating 0");
  if (static_cast<long long>(cnf.clauses.size()) != declared_clauses)
    fail(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string serialize_dimacs(const CnfFormula& cnf) {
  validate(cnf);
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace onecall
