#pragma once

#include <memory>
#include <string>

#include "cherednik/central_poly.hpp"
#include "cherednik/relation_table.hpp"

namespace cherednik {

struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line, col;
};

// Abstract syntax of the input language:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint ('/' uint)? | ident | '(' expr ')'
// Identifiers: tau h e f x y x1 y1 Delta.  The leading minus and the n/d
// literal form exist so that every canonically printed element re-parses.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { number, variable, negate, add, subtract, multiply, power };

  Kind kind;
  std::string numerator, denominator;  // number: denominator empty if absent
  std::string name;                    // variable
  ExprPtr lhs, rhs;                    // binary ops; negate uses lhs only
  unsigned exponent = 0;               // power
};

ExprPtr parse_expression(const std::string& text);  // throws ParseError

// Canonical rendering with minimal parentheses; parse ∘ print ∘ parse = parse.
std::string print_expression(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Evaluation into k[Delta, tau]; rejects the six noncentral generators.
CentralPoly eval_central(const ExprPtr& e, const Field& f);

// Evaluation into the algebra with Delta expanded through its embedding;
// the result is in normal form for the table's order.
NcPoly eval_nc(const ExprPtr& e, const RelationTable& table);

}  // namespace cherednik
