#include "qdga/expression.hpp"

#include <cctype>

#include "qdga/errors.hpp"

namespace qdga {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, int line, int first_column) : text_(text), line_(line), col0_(first_column) {}

  ParsedExpression run() {
    ParsedExpression out;
    skip_space();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
      skip_space();
    }
    out.terms.push_back(term(sign));
    skip_space();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      take();
      skip_space();
      out.terms.push_back(term(c == '-' ? -1 : 1));
      skip_space();
    }
    return out;
  }

 private:
  ParsedTerm term(int sign) {
    ParsedTerm t;
    t.coefficient = sign;
    factor(t);
    for (;;) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        take();
        skip_space();
        factor(t);
      } else if (ident_start(c) || digit(c)) {
        factor(t);
      } else {
        break;
      }
    }
    return t;
  }

  void factor(ParsedTerm& t) {
    if (at_end()) fail("expected a factor, found end of expression");
    char c = peek();
    if (digit(c)) {
      Integer num = number();
      Integer den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        take();
        skip_space();
        if (at_end() || !digit(peek())) fail("expected a denominator after '/'");
        const int col = column();
        den = number();
        if (den == 0) fail_at("zero denominator", col);
      }
      t.coefficient *= Rational(num, den);
      return;
    }
    if (ident_start(c)) {
      const int col = column();
      std::string name;
      while (!at_end() && ident_char(peek())) name += take();
      skip_space();
      int power = 1;
      if (!at_end() && peek() == '^') {
        take();
        skip_space();
        if (at_end() || !digit(peek())) fail("expected a nonnegative integer exponent after '^'");
        const int ecol = column();
        Integer e = number();
        if (e > 64) fail_at("exponent too large", ecol);
        power = static_cast<int>(e);
      }
      for (int i = 0; i < power; ++i) t.factors.push_back({name, col});
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer number() {
    std::string digits;
    while (!at_end() && digit(peek())) digits += take();
    return Integer(digits);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  int column() const { return col0_ + static_cast<int>(pos_); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }
  [[noreturn]] void fail_at(const std::string& msg, int col) const { throw ParseError(msg, line_, col); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

}  // namespace

ParsedExpression parse_expression(std::string_view text, int line, int first_column) {
  return Parser(text, line, first_column).run();
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

}  // namespace qdga
