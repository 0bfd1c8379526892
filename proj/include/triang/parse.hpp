#ifndef TRIANG_PARSE_HPP
#define TRIANG_PARSE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "triang/automorphism.hpp"
#include "triang/derivation.hpp"
#include "triang/poly.hpp"

namespace triang {

/*
 * Expression grammar (whitespace-insensitive):
 *
 *   poly   := term (('+' | '-') term)*
 *   term   := factor ('*' factor | '/' nat)*
 *   factor := nat | var ('^' nat)? | '(' poly ')' ('^' nat)? | '-' factor
 *   var    := 'x' nat        with nat >= 1
 *
 * Division is by integer literals only, so every expression denotes a
 * polynomial with rational coefficients.
 */
namespace ast {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Literal {
  Rational value;
};
struct Variable {
  std::size_t index;
};
struct Sum {
  ExprPtr lhs, rhs;
};
struct Difference {
  ExprPtr lhs, rhs;
};
struct Product {
  ExprPtr lhs, rhs;
};
struct Power {
  ExprPtr base;
  std::uint32_t exponent;
};
struct Negation {
  ExprPtr operand;
};

struct Expr {
  std::variant<Literal, Variable, Sum, Difference, Product, Power, Negation> node;
};

Polynomial evaluate(const Expr& expr);

}  // namespace ast

// Parses one expression. `line` and `column` locate text[0] for diagnostics.
ast::ExprPtr parse_expression(std::string_view text, std::size_t line = 1,
                              std::size_t column = 1);
Polynomial parse_polynomial(std::string_view text);

/*
 * Automorphism text:
 *
 *   n=3
 *   x1 -> x1
 *   x2 -> x2 + x1^2
 *   x3 -> x3 + x2^2
 *
 * Derivation text uses `dx<i> <- <polynomial>` lines for the coefficient of
 * d/dx_i. Blank lines and lines starting with '#' are ignored; a file may
 * hold several blocks, each opened by its own `n=` header.
 */
TriangularAutomorphism parse_automorphism(std::string_view text);
std::vector<TriangularAutomorphism> parse_automorphisms(std::string_view text);
TriangularDerivation parse_derivation(std::string_view text);
std::vector<TriangularDerivation> parse_derivations(std::string_view text);

std::string format_automorphism(const TriangularAutomorphism& phi);
std::string format_derivation(const TriangularDerivation& d);

}  // namespace triang

#endif  // TRIANG_PARSE_HPP
