#include "devsurf/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>

namespace devsurf::expr {

namespace {

const std::set<std::string>& known_functions() {
  static const std::set<std::string> fns = {"sin", "cos", "tan", "sqrt",
                                            "exp", "log", "atan"};
  return fns;
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const std::vector<std::string>* allowed_vars = nullptr;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek_op() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  AstPtr parse_expr() {
    AstPtr lhs = parse_term();
    for (;;) {
      char c = peek_op();
      if (c != '+' && c != '-') return lhs;
      ++pos;
      AstPtr rhs = parse_term();
      auto node = std::make_shared<Ast>();
      node->kind = c == '+' ? Ast::Kind::Add : Ast::Kind::Sub;
      node->a = lhs;
      node->b = rhs;
      lhs = node;
    }
  }

  AstPtr parse_term() {
    AstPtr lhs = parse_unary();
    for (;;) {
      char c = peek_op();
      if (c != '*' && c != '/') return lhs;
      ++pos;
      AstPtr rhs = parse_unary();
      auto node = std::make_shared<Ast>();
      node->kind = c == '*' ? Ast::Kind::Mul : Ast::Kind::Div;
      node->a = lhs;
      node->b = rhs;
      lhs = node;
    }
  }

  AstPtr parse_unary() {
    if (accept('-')) {
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::Neg;
      node->a = parse_unary();
      return node;
    }
    return parse_power();
  }

  AstPtr parse_power() {
    AstPtr base = parse_primary();
    if (accept('^')) {
      // Right-associative; the exponent may carry a unary minus (2^-3).
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::Pow;
      node->a = base;
      node->b = parse_unary();
      return node;
    }
    return base;
  }

  AstPtr parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (c == '(') {
      ++pos;
      AstPtr inner = parse_expr();
      if (!accept(')')) fail("unbalanced parentheses: expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  AstPtr parse_number() {
    const char* begin = text.data() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos += static_cast<std::size_t>(end - begin);
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::Number;
    node->number = v;
    return node;
  }

  AstPtr parse_ident() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name(text.substr(start, pos - start));
    if (name == "pi") {
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::Pi;
      return node;
    }
    if (accept('(')) {
      if (!known_functions().count(name)) {
        pos = start;
        fail("unknown function '" + name + "'");
      }
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::Call;
      node->name = name;
      node->a = parse_expr();
      if (!accept(')')) fail("unbalanced parentheses: expected ')'");
      return node;
    }
    if (allowed_vars) {
      bool ok = false;
      for (const auto& v : *allowed_vars) ok = ok || v == name;
      if (!ok) {
        pos = start;
        fail("unknown identifier '" + name + "'");
      }
    }
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::Variable;
    node->name = name;
    return node;
  }
};

AstPtr parse_impl(std::string_view text, const std::vector<std::string>* vars) {
  if (text.empty()) throw ParseError("empty expression", 0);
  Parser p{text, 0, vars};
  AstPtr root = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after expression");
  return root;
}

}  // namespace

AstPtr parse(std::string_view text) { return parse_impl(text, nullptr); }

AstPtr parse(std::string_view text, const std::vector<std::string>& allowed_vars) {
  return parse_impl(text, &allowed_vars);
}

double eval(const Ast& ast, const std::map<std::string, double>& bindings) {
  switch (ast.kind) {
    case Ast::Kind::Number:
      return ast.number;
    case Ast::Kind::Pi:
      return M_PI;
    case Ast::Kind::Variable: {
      auto it = bindings.find(ast.name);
      if (it == bindings.end()) throw DomainError("unbound variable '" + ast.name + "'");
      return it->second;
    }
    case Ast::Kind::Neg:
      return -eval(*ast.a, bindings);
    case Ast::Kind::Add:
      return eval(*ast.a, bindings) + eval(*ast.b, bindings);
    case Ast::Kind::Sub:
      return eval(*ast.a, bindings) - eval(*ast.b, bindings);
    case Ast::Kind::Mul:
      return eval(*ast.a, bindings) * eval(*ast.b, bindings);
    case Ast::Kind::Div: {
      double num = eval(*ast.a, bindings);
      double den = eval(*ast.b, bindings);
      double r = num / den;
      if (!std::isfinite(r)) throw DomainError("division yields non-finite value");
      return r;
    }
    case Ast::Kind::Pow: {
      double base = eval(*ast.a, bindings);
      double ex = eval(*ast.b, bindings);
      double r = std::pow(base, ex);
      if (!std::isfinite(r)) throw DomainError("power yields non-finite value");
      return r;
    }
    case Ast::Kind::Call: {
      double arg = eval(*ast.a, bindings);
      if (ast.name == "sin") return std::sin(arg);
      if (ast.name == "cos") return std::cos(arg);
      if (ast.name == "tan") return std::tan(arg);
      if (ast.name == "atan") return std::atan(arg);
      if (ast.name == "exp") return std::exp(arg);
      if (ast.name == "sqrt") {
        if (arg < 0) throw DomainError("sqrt of negative value");
        return std::sqrt(arg);
      }
      if (ast.name == "log") {
        if (arg <= 0) throw DomainError("log of non-positive value");
        return std::log(arg);
      }
      throw DomainError("unknown function '" + ast.name + "'");
    }
  }
  throw DomainError("corrupt expression node");
}

double eval(const AstPtr& ast, const std::map<std::string, double>& bindings) {
  return eval(*ast, bindings);
}

namespace {

void serialize_to(const Ast& ast, std::string& out) {
  switch (ast.kind) {
    case Ast::Kind::Number: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", ast.number);
      out += buf;
      return;
    }
    case Ast::Kind::Pi:
      out += "pi";
      return;
    case Ast::Kind::Variable:
      out += ast.name;
      return;
    case Ast::Kind::Neg:
      out += "(-";
      serialize_to(*ast.a, out);
      out += ')';
      return;
    case Ast::Kind::Call:
      out += ast.name;
      out += '(';
      serialize_to(*ast.a, out);
      out += ')';
      return;
    default: {
      const char* op = ast.kind == Ast::Kind::Add   ? "+"
                       : ast.kind == Ast::Kind::Sub ? "-"
                       : ast.kind == Ast::Kind::Mul ? "*"
                       : ast.kind == Ast::Kind::Div ? "/"
                                                    : "^";
      out += '(';
      serialize_to(*ast.a, out);
      out += op;
      serialize_to(*ast.b, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string serialize(const Ast& ast) {
  std::string out;
  serialize_to(ast, out);
  return out;
}

std::string serialize(const AstPtr& ast) { return serialize(*ast); }

bool structurally_equal(const Ast& a, const Ast& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Ast::Kind::Number: {
      // bitwise (serialize uses 17 significant digits, so round-trip exact)
      return a.number == b.number || (std::isnan(a.number) && std::isnan(b.number));
    }
    case Ast::Kind::Pi:
      return true;
    case Ast::Kind::Variable:
      return a.name == b.name;
    case Ast::Kind::Neg:
      return structurally_equal(*a.a, *b.a);
    case Ast::Kind::Call:
      return a.name == b.name && structurally_equal(*a.a, *b.a);
    default:
      return structurally_equal(*a.a, *b.a) && structurally_equal(*a.b, *b.b);
  }
}

}  // namespace devsurf::expr
