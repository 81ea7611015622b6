#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kuores/bipoly.hpp"
#include "kuores/ext_field.hpp"
#include "kuores/numeric.hpp"
#include "kuores/poly.hpp"

namespace kuores {

// Abstract syntax for polynomial expressions. Grammar (normative for all
// CLI polynomial inputs):
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | ws) unary)*
//   unary := '-' unary | atom
//   atom  := INT | VAR | '(' expr ')' | atom '^' INT
// Whitespace juxtaposition multiplies only when the next token opens an
// atom, so "2 - 3" stays a subtraction and "X^5 Y" is a product. "X^5Y"
// (no space, no star) is rejected.
struct ExprNode {
    enum class Kind { Int, Variable, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    size_t pos;         // 1-based position in the source text
    BigInt value;       // Kind::Int
    Var var = Var::X;   // Kind::Variable
    long exponent = 0;  // Kind::Pow
    std::shared_ptr<const ExprNode> a = nullptr;
    std::shared_ptr<const ExprNode> b = nullptr;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr parse_expr(const std::string& text);

// Distinct variables appearing in the expression, in X, Y, Z, T order.
std::vector<Var> used_vars(const ExprPtr& e);

// Evaluation into concrete polynomial domains. Each rejects variables
// outside its allowance with a positioned ParseError, and also rejects
// expressions whose expansion exceeds an internal degree limit so that
// parsing stays total on adversarial inputs like ((X^512)^512)^512.
Poly<Rational> to_poly_q(const ExprPtr& e, Var main);
Poly<Fp> to_poly_fp(const ExprPtr& e, Var main, uint64_t p);
BiPolyQ to_bipoly_q(const ExprPtr& e, Var main);                  // inner variable X
Poly<Poly<Fp>> to_bipoly_fp(const ExprPtr& e, Var main, uint64_t p);

Poly<Rational> parse_poly_q(const std::string& text, Var main);
Poly<Fp> parse_poly_fp(const std::string& text, Var main, uint64_t p);
BiPolyQ parse_bipoly_q(const std::string& text, Var main);
Poly<Poly<Fp>> parse_bipoly_fp(const std::string& text, Var main, uint64_t p);

// Canonical descending-degree printing; parse(print(p)) == p.
std::string print_poly(const Poly<Rational>& p);
std::string print_poly(const Poly<Fp>& p);
std::string print_poly(const Poly<Poly<Rational>>& p);
std::string print_poly(const Poly<Poly<Fp>>& p);

// Extension-field element, shown as its representative polynomial in Z.
std::string print_fq(const FqElem& e);

} // namespace kuores
