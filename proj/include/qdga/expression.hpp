#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdga/rational.hpp"

namespace qdga {

// Grammar (whitespace separates tokens and is otherwise ignored):
//
//   expression := [sign] term { sign term }
//   sign       := '+' | '-'
//   term       := factor { ['*'] factor }
//   factor     := number ['/' number] | name ['^' number]
//   name       := [A-Za-z_][A-Za-z0-9_']*
//
// Numbers are coefficients; a lone "1" is the unit. Adjacent factors are
// multiplied in the order written.

struct ParsedFactor {
  std::string name;
  int column = 0;
};

struct ParsedTerm {
  Rational coefficient = 1;
  std::vector<ParsedFactor> factors;
};

struct ParsedExpression {
  std::vector<ParsedTerm> terms;
};

/// Throws ParseError with the position of the offending character.
/// first_column is the column of text[0] within its source line.
ParsedExpression parse_expression(std::string_view text, int line = 1, int first_column = 1);

bool is_identifier(std::string_view s);

}  // namespace qdga
