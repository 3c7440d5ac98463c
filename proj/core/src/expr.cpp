// Recursive-descent reader and writer for the infix expression format:
//
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | var | 'true' | 'false'
//   var    := 'x' [1-9][0-9]*
//
// A chain `a & b & c` reads as a single n-ary And; the writer always
// parenthesizes And/Or so that reading back yields the same tree.

#include <cctype>
#include <limits>
#include <ostream>

#include "onecall/formula.hpp"

namespace onecall {
namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Formula expr() {
    std::vector<Formula> terms{term()};
    while (accept('|')) terms.push_back(term());
    return terms.size() == 1 ? std::move(terms.front()) : Formula::disj(std::move(terms));
  }

  Formula term() {
    std::vector<Formula> factors{factor()};
    while (accept('&')) factors.push_back(factor());
    return factors.size() == 1 ? std::move(factors.front()) : Formula::conj(std::move(factors));
  }

  Formula factor() {
    if (accept('!')) return Formula::negate(factor());
    if (accept('(')) {
      Formula inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    skip_ws();
    if (accept_word("true")) return Formula::constant(true);
    if (accept_word("false")) return Formula::constant(false);
    if (pos_ < text_.size() && text_[pos_] == 'x') return variable();
    if (pos_ == text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  Formula variable() {
    std::size_t start = ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected variable index after 'x'");
    if (text_[pos_] == '0') fail("variable index must start with 1-9 (x0 is not a variable)");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<Var>::max()) {
        pos_ = start;
        fail("variable index too large");
      }
      ++pos_;
    }
    return Formula::var(static_cast<Var>(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case NodeKind::Var:
      out += 'x';
      out += std::to_string(f.index());
      return;
    case NodeKind::True:
      out += "true";
      return;
    case NodeKind::False:
      out += "false";
      return;
    case NodeKind::Not:
      out += '!';
      write(f.children()[0], out);
      return;
    case NodeKind::And:
    case NodeKind::Or: {
      const char* sep = f.kind() == NodeKind::And ? " & " : " | ";
      out += '(';
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        write(f.children()[i], out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

Formula parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string serialize_expr(const Formula& f) {
  std::string out;
  write(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << serialize_expr(f); }

}  // namespace onecall
