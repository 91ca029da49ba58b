#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "firstint/errors.hpp"
#include "firstint/polynomial.hpp"

namespace firstint {

// Grammar (no implicit multiplication):
//   expr  := term (('+'|'-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | atom ('^' nat)?
//   atom  := 'z1' | 'z2' | 'i' | nat ('/' nat)? | '(' expr ')'
inline constexpr long kDegreeLimit = 1000000;

struct ExprNode {
    enum class Kind { Add, Sub, Mul, Pow, Neg, Z1, Z2, ImaginaryUnit, Literal };
    Kind kind;
    Span span;
    std::vector<std::unique_ptr<ExprNode>> children;
    Rational literal;   // Kind::Literal
    long exponent = 0;  // Kind::Pow
};

struct ParsedExpr {
    std::unique_ptr<ExprNode> root;
    std::string source;
};

/// Recursive-descent parse. Throws ParseError with a source span.
ParsedExpr parse_poly(std::string_view text);

/// Exact and total expansion of the tree; enforces the degree limit.
Polynomial expand(const ParsedExpr& expr);

/// parse + expand.
Polynomial parse_polynomial(std::string_view text);

/// Canonical text: terms in descending z1-major lex order, grammar-conformant,
/// re-parses to an equal Polynomial.
std::string to_text(const Polynomial& p);

/// Canonical text of h in the variable name given (default "X").
std::string to_text(const UnivariatePoly& h, const std::string& var = "X");

std::string to_text(const GaussianRational& c);

}  // namespace firstint
