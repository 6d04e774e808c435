#ifndef DEVSURF_EXPR_HPP
#define DEVSURF_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "devsurf/error.hpp"

namespace devsurf::expr {

// Immutable expression tree. Binary ops +, -, *, /, ^; unary negation;
// the functions sin, cos, tan, sqrt, exp, log, atan; the constant pi.
struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
  enum class Kind { Number, Variable, Pi, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind;
  double number = 0;    // Kind::Number
  std::string name;     // Kind::Variable / Kind::Call
  AstPtr a, b;          // children (Call and Neg use a only)
};

// Precedence: ^ above unary minus above * / above + -.
// ^ is right-associative, everything else left-associative.
// Throws ParseError with the byte offset of the first bad token.
AstPtr parse(std::string_view text);

// Same, but rejects identifiers outside `allowed_vars` at parse time.
AstPtr parse(std::string_view text, const std::vector<std::string>& allowed_vars);

// Throws DomainError for unbound variables, sqrt of a negative, log of a
// non-positive value, or a non-finite intermediate result.
double eval(const Ast& ast, const std::map<std::string, double>& bindings);
double eval(const AstPtr& ast, const std::map<std::string, double>& bindings);

// Fully parenthesized round-trippable form: parse(serialize(a)) is
// structurally identical to a.
std::string serialize(const Ast& ast);
std::string serialize(const AstPtr& ast);

bool structurally_equal(const Ast& a, const Ast& b);

}  // namespace devsurf::expr

#endif
