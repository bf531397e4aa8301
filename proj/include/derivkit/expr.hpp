#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "derivkit/operator_func.hpp"

namespace derivkit {

// Abstract syntax for the expression DSL.
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 't' | 'x' | 'id' | 'D' | '(' expr ')'
//
// Whitespace insensitive. 't' and 'x' both name the single indeterminate.
struct Expr {
    enum class Kind { Literal, Var, Id, D, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind = Kind::Literal;
    Rational literal;           // Kind::Literal
    unsigned exponent = 0;      // Kind::Pow
    std::vector<Expr> kids;     // operands
};

class ParseError : public std::runtime_error {
public:
    ParseError(unsigned column, const std::string& what)
        : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + what),
          column(column) {}
    unsigned column;
};

class ElabError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Expr parse_expr(const std::string& text);  // throws ParseError

// Scalar expressions elaborate to RatFunc, operator expressions to
// OperatorFunc; ill-typed mixes (e.g. "t + D") throw ElabError, as does
// division by syntactic zero.
using ExprValue = std::variant<RatFunc, OperatorFunc>;
ExprValue elaborate(const Expr& e);

// Parse-and-elaborate conveniences; throw ElabError on the wrong type.
RatFunc parse_scalar(const std::string& text);
OperatorFunc parse_operator(const std::string& text);

// Canonical text renderings; each round-trips through parse + elaborate.
std::string render_poly(const Poly& p, const std::string& var = "t");
std::string render(const RatFunc& u, const std::string& var = "t");
std::string render(const OperatorFunc& f);

}  // namespace derivkit
