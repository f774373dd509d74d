#pragma once

#include <memory>
#include <string>

namespace gravicat {

// Gluing expressions over named records:
//   expr  := union
//   union := comp { "+" comp }      (disjoint union, loosest)
//   comp  := atom { "*" atom }      (composition, binds tighter)
//   atom  := NAME | "rev" "(" expr ")" | "(" expr ")"
// Both operators associate to the left. "rev" acts as a keyword only when a
// parenthesis follows; otherwise it is an ordinary name.
struct Expression {
  enum class Kind { Name, Compose, Union, Reverse };

  Kind kind = Kind::Name;
  std::string name;                      // Kind::Name
  std::unique_ptr<Expression> lhs, rhs;  // Compose/Union children, Reverse uses lhs
  int line = 1, column = 1;              // position of the node's first token

  Expression(Kind k, int line, int column) : kind(k), line(line), column(column) {}
};

using ExprPtr = std::unique_ptr<Expression>;

// Throws SyntaxError with 1-based line/column and the offending token.
ExprPtr parse_expression(const std::string& source);

// Minimal parentheses; parses back to a structurally equal tree.
std::string pretty_print(const Expression& e);

bool expr_equal(const Expression& a, const Expression& b);

} // namespace gravicat
