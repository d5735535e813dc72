#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sets.hpp"
#include "transforms.hpp"

namespace omeasure::dsl {

/// Half-open byte range [begin, end) in the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// ---------------------------------------------------------------- lexer

enum class Tok { Number, Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  Rational value;       // for Number
  bool fraction = false;  // Number written as p/q
  Span span;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      bool fraction = false;
      if (i + 1 < src.size() && src[i] == '/' && std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
        fraction = true;
        ++i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      std::string text(src.substr(start, i - start));
      auto value = parse_rational(text);
      if (!value) throw Error(ErrorCode::SyntaxError, "invalid number '" + text + "'", start);
      out.push_back({Tok::Number, text, *value, fraction, {start, i}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), 0, false, {start, i}});
      continue;
    }
    static constexpr std::string_view punct = "+-*/^()[],;=";
    if (punct.find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), 0, false, {start, start + 1}});
      ++i;
      continue;
    }
    throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::End, "", 0, false, {src.size(), src.size()}});
  return out;
}

// ---------------------------------------------------------------- AST

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, T, Var, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  Rational value;      // Number literal, or Pow exponent
  std::size_t var = 0; // Var index, 1-based
  Expr lhs, rhs;       // operands (Neg and Pow use lhs)
  Span span;
};

struct SetNode;
using SetAst = std::shared_ptr<const SetNode>;

struct SetNode {
  enum class Kind { Box, Cell, Union, Product };
  Kind kind;
  std::vector<std::pair<Expr, Expr>> bounds;  // Box
  SetAst base;                                // Cell
  Expr low, thick;                            // Cell
  std::vector<SetAst> parts;                  // Union, Product
  Span span;
};

struct MapStepNode {
  enum class Kind { Shear, Diag, Translate, Swap };
  Kind kind;
  std::size_t first = 0, second = 0;  // shear coordinate or swap pair (1-based)
  Expr addend;                        // Shear
  std::vector<Expr> args;             // Diag, Translate
  Span span;
};

struct MapAst {
  std::vector<MapStepNode> steps;
};

// Structural equality (spans ignored).
inline bool equal(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprNode::Kind::Number: return a->value == b->value;
    case ExprNode::Kind::T: return true;
    case ExprNode::Kind::Var: return a->var == b->var;
    case ExprNode::Kind::Pow: return a->value == b->value && equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

inline bool equal(const SetAst& a, const SetAst& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case SetNode::Kind::Box:
      if (a->bounds.size() != b->bounds.size()) return false;
      for (std::size_t i = 0; i < a->bounds.size(); ++i)
        if (!equal(a->bounds[i].first, b->bounds[i].first) || !equal(a->bounds[i].second, b->bounds[i].second))
          return false;
      return true;
    case SetNode::Kind::Cell: return equal(a->base, b->base) && equal(a->low, b->low) && equal(a->thick, b->thick);
    default:
      if (a->parts.size() != b->parts.size()) return false;
      for (std::size_t i = 0; i < a->parts.size(); ++i)
        if (!equal(a->parts[i], b->parts[i])) return false;
      return true;
  }
}

inline bool equal(const MapAst& a, const MapAst& b) {
  if (a.steps.size() != b.steps.size()) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    const auto& x = a.steps[i];
    const auto& y = b.steps[i];
    if (x.kind != y.kind || x.first != y.first || x.second != y.second || x.args.size() != y.args.size())
      return false;
    if (x.kind == MapStepNode::Kind::Shear && !equal(x.addend, y.addend)) return false;
    for (std::size_t j = 0; j < x.args.size(); ++j)
      if (!equal(x.args[j], y.args[j])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- printer

namespace detail {

inline int precedence(const Expr& e) {
  switch (e->kind) {
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub: return 1;
    case ExprNode::Kind::Mul:
    case ExprNode::Kind::Div: return 2;
    case ExprNode::Kind::Neg: return 3;
    case ExprNode::Kind::Pow: return 4;
    default: return 5;
  }
}

inline std::string print_at(const Expr& e, int min_prec);

inline std::string print_expr(const Expr& e) {
  switch (e->kind) {
    case ExprNode::Kind::Number: return to_string(e->value);
    case ExprNode::Kind::T: return "t";
    case ExprNode::Kind::Var: return "x" + std::to_string(e->var);
    case ExprNode::Kind::Add: return print_at(e->lhs, 1) + " + " + print_at(e->rhs, 2);
    case ExprNode::Kind::Sub: return print_at(e->lhs, 1) + " - " + print_at(e->rhs, 2);
    case ExprNode::Kind::Mul: return print_at(e->lhs, 2) + "*" + print_at(e->rhs, 3);
    case ExprNode::Kind::Div: return print_at(e->lhs, 2) + " / " + print_at(e->rhs, 3);  // spaced: "1/2" is a literal
    case ExprNode::Kind::Neg: return "-" + print_at(e->lhs, 3);
    case ExprNode::Kind::Pow: {
      // A fraction literal is a single token but cannot carry an exponent unparenthesized.
      bool fraction_base = e->lhs->kind == ExprNode::Kind::Number && !is_integer(e->lhs->value);
      std::string base = fraction_base ? "(" + print_expr(e->lhs) + ")" : print_at(e->lhs, 5);
      std::string exponent = (is_integer(e->value) && e->value >= 0) ? to_string(e->value)
                                                                       : "(" + to_string(e->value) + ")";
      return base + "^" + exponent;
    }
  }
  return "?";
}

inline std::string print_at(const Expr& e, int min_prec) {
  std::string s = print_expr(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace detail

inline std::string print(const Expr& e) { return detail::print_expr(e); }

inline std::string print(const SetAst& s) {
  switch (s->kind) {
    case SetNode::Kind::Box: {
      std::string out = "box ";
      for (std::size_t i = 0; i < s->bounds.size(); ++i) {
        if (i) out += " x ";
        out += "[" + print(s->bounds[i].first) + ", " + print(s->bounds[i].second) + "]";
      }
      return out;
    }
    case SetNode::Kind::Cell:
      return "cell base=(" + print(s->base) + "); low=" + print(s->low) + "; thick=" + print(s->thick);
    case SetNode::Kind::Union:
    case SetNode::Kind::Product: {
      std::string out = s->kind == SetNode::Kind::Union ? "union(" : "product(";
      for (std::size_t i = 0; i < s->parts.size(); ++i) out += (i ? ", " : "") + print(s->parts[i]);
      return out + ")";
    }
  }
  return "?";
}

inline std::string print(const MapAst& m) {
  std::string out;
  for (const auto& step : m.steps) {
    switch (step.kind) {
      case MapStepNode::Kind::Shear: out += "shear " + std::to_string(step.first) + " " + print(step.addend); break;
      case MapStepNode::Kind::Swap:
        out += "swap " + std::to_string(step.first) + " " + std::to_string(step.second);
        break;
      default: {
        out += step.kind == MapStepNode::Kind::Diag ? "diag (" : "translate (";
        for (std::size_t i = 0; i < step.args.size(); ++i) out += (i ? ", " : "") + print(step.args[i]);
        out += ")";
      }
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Expr expression() {
    Expr lhs = term();
    while (is_punct("+") || is_punct("-")) {
      bool add = peek().text == "+";
      next();
      Expr rhs = term();
      lhs = binary(add ? ExprNode::Kind::Add : ExprNode::Kind::Sub, lhs, rhs);
    }
    return lhs;
  }

  SetAst set() {
    const Token& tok = peek();
    if (is_punct("(")) {
      next();
      SetAst inner = set();
      expect(")");
      return inner;
    }
    if (tok.kind != Tok::Ident)
      throw Error(ErrorCode::SyntaxError, "expected a set (box, cell, union, product)", tok.span.begin);
    auto node = std::make_shared<SetNode>();
    node->span.begin = tok.span.begin;
    if (tok.text == "box") {
      next();
      node->kind = SetNode::Kind::Box;
      do {
        expect("[");
        Expr a = expression();
        expect(",");
        Expr b = expression();
        expect("]");
        node->bounds.emplace_back(a, b);
      } while (accept_ident("x"));
    } else if (tok.text == "cell") {
      next();
      node->kind = SetNode::Kind::Cell;
      expect_ident("base");
      expect("=");
      node->base = set();
      expect(";");
      expect_ident("low");
      expect("=");
      node->low = expression();
      expect(";");
      expect_ident("thick");
      expect("=");
      node->thick = expression();
    } else if (tok.text == "union" || tok.text == "product") {
      node->kind = tok.text == "union" ? SetNode::Kind::Union : SetNode::Kind::Product;
      next();
      expect("(");
      node->parts.push_back(set());
      while (is_punct(",")) {
        next();
        node->parts.push_back(set());
      }
      expect(")");
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown set constructor '" + tok.text + "'", tok.span.begin);
    }
    node->span.end = previous_end();
    return node;
  }

  MapAst map() {
    MapAst m;
    while (peek().kind != Tok::End) {
      if (is_punct(";")) {
        next();
        continue;
      }
      const Token& tok = peek();
      MapStepNode step;
      step.span.begin = tok.span.begin;
      if (accept_ident("shear")) {
        step.kind = MapStepNode::Kind::Shear;
        step.first = index();
        step.addend = expression();
      } else if (accept_ident("swap")) {
        step.kind = MapStepNode::Kind::Swap;
        step.first = index();
        step.second = index();
      } else if (tok.kind == Tok::Ident && (tok.text == "diag" || tok.text == "translate")) {
        step.kind = tok.text == "diag" ? MapStepNode::Kind::Diag : MapStepNode::Kind::Translate;
        next();
        expect("(");
        step.args.push_back(expression());
        while (is_punct(",")) {
          next();
          step.args.push_back(expression());
        }
        expect(")");
      } else {
        throw Error(ErrorCode::SyntaxError, "expected a map step (shear, diag, translate, swap)", tok.span.begin);
      }
      step.span.end = previous_end();
      m.steps.push_back(std::move(step));
    }
    if (m.steps.empty()) throw Error(ErrorCode::SyntaxError, "empty map", 0);
    return m;
  }

  void finish() {
    if (peek().kind != Tok::End)
      throw Error(ErrorCode::SyntaxError, "unexpected trailing input '" + peek().text + "'", peek().span.begin);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  std::size_t previous_end() const { return pos_ ? tokens_[pos_ - 1].span.end : 0; }
  bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  void expect(const char* p) {
    if (!is_punct(p))
      throw Error(ErrorCode::SyntaxError,
                  std::string("expected '") + p + "' but found '" + (peek().kind == Tok::End ? "end of input" : peek().text) + "'",
                  peek().span.begin);
    next();
  }
  bool accept_ident(const char* name) {
    if (peek().kind == Tok::Ident && peek().text == name) {
      next();
      return true;
    }
    return false;
  }
  void expect_ident(const char* name) {
    if (!accept_ident(name))
      throw Error(ErrorCode::SyntaxError, std::string("expected '") + name + "'", peek().span.begin);
  }
  std::size_t index() {
    const Token& tok = peek();
    if (tok.kind != Tok::Number || tok.fraction || tok.value < 1)
      throw Error(ErrorCode::SyntaxError, "expected a positive coordinate index", tok.span.begin);
    next();
    return static_cast<std::size_t>(to_small_int(numer(tok.value), "index"));
  }

  static Expr binary(ExprNode::Kind kind, Expr lhs, Expr rhs) {
    auto node = std::make_shared<ExprNode>();
    node->kind = kind;
    node->span = {lhs->span.begin, rhs->span.end};
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  Expr term() {
    Expr lhs = unary();
    while (is_punct("*") || is_punct("/")) {
      bool mul = peek().text == "*";
      next();
      Expr rhs = unary();
      lhs = binary(mul ? ExprNode::Kind::Mul : ExprNode::Kind::Div, lhs, rhs);
    }
    return lhs;
  }

  Expr unary() {
    if (is_punct("-")) {
      std::size_t begin = next().span.begin;
      Expr operand = unary();
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::Neg;
      node->span = {begin, operand->span.end};
      node->lhs = std::move(operand);
      return node;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!is_punct("^")) return base;
    next();
    Rational exponent;
    const Token& tok = peek();
    if (tok.kind == Tok::Number) {
      if (tok.fraction)
        throw Error(ErrorCode::SyntaxError, "fractional exponents must be parenthesized, e.g. t^(1/2)",
                    tok.span.begin);
      exponent = tok.value;
      next();
    } else if (is_punct("(")) {
      next();
      bool negative = false;
      if (is_punct("-")) {
        next();
        negative = true;
      }
      const Token& num = peek();
      if (num.kind != Tok::Number) throw Error(ErrorCode::SyntaxError, "expected a rational exponent", num.span.begin);
      exponent = negative ? Rational(-num.value) : num.value;
      next();
      expect(")");
    } else {
      throw Error(ErrorCode::SyntaxError, "expected an exponent after '^'", tok.span.begin);
    }
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Pow;
    node->value = exponent;
    node->span = {base->span.begin, previous_end()};
    node->lhs = std::move(base);
    return node;
  }

  Expr atom() {
    const Token& tok = peek();
    auto node = std::make_shared<ExprNode>();
    node->span = tok.span;
    if (tok.kind == Tok::Number) {
      node->kind = ExprNode::Kind::Number;
      node->value = tok.value;
      next();
      return node;
    }
    if (tok.kind == Tok::Ident && tok.text == "t") {
      node->kind = ExprNode::Kind::T;
      next();
      return node;
    }
    if (tok.kind == Tok::Ident && tok.text.size() > 1 && tok.text[0] == 'x' &&
        std::all_of(tok.text.begin() + 1, tok.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      node->kind = ExprNode::Kind::Var;
      node->var = std::stoul(tok.text.substr(1));
      if (node->var == 0) throw Error(ErrorCode::SyntaxError, "variables are numbered from x1", tok.span.begin);
      next();
      return node;
    }
    if (is_punct("(")) {
      next();
      Expr inner = expression();
      expect(")");
      return inner;
    }
    throw Error(ErrorCode::SyntaxError,
                "expected a number, t, a variable or '(' but found '" + (tok.kind == Tok::End ? std::string("end of input") : tok.text) + "'",
                tok.span.begin);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline Expr parse_expr_ast(std::string_view text) {
  Parser p(text);
  Expr e = p.expression();
  p.finish();
  return e;
}

inline SetAst parse_set_ast(std::string_view text) {
  Parser p(text);
  SetAst s = p.set();
  p.finish();
  return s;
}

inline MapAst parse_map_ast(std::string_view text) {
  Parser p(text);
  MapAst m = p.map();
  p.finish();
  return m;
}

// ---------------------------------------------------------------- evaluation

namespace detail {

/// Re-raises library errors with the source position of the offending node.
template <class Fn>
auto at(const Span& span, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.position() != Error::npos) throw;
    throw Error(e.code(), e.detail(), span.begin);
  }
}

inline MonomialFn power_of(const MonomialFn& base, const Rational& r, const Span& span) {
  if (is_integer(r) && r >= 0) {
    MonomialFn out(1);
    for (long long i = 0; i < to_small_int(numer(r), "exponent"); ++i) out = out * base;
    return out;
  }
  if (base.terms().size() != 1)
    throw Error(ErrorCode::ClassViolation, "rational powers apply to single monomials only", span.begin);
  const auto& term = base.terms().front();
  auto mp = monomial_power(term.coefficient, r);
  if (!mp.is_exact())
    throw Error(ErrorCode::ClassViolation, "power " + term.coefficient.str() + "^(" + to_string(r) + ") is irrational",
                span.begin);
  return MonomialFn::term(mp.exact(), term.exponents.scaled(r));
}

}  // namespace detail

/// Evaluates an expression; variables x1..x_{max_var} are allowed.
inline MonomialFn evaluate(const Expr& e, std::size_t max_var) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number: return MonomialFn(e->value);
    case K::T: return MonomialFn(PuiseuxScalar::t());
    case K::Var:
      if (e->var > max_var)
        throw Error(ErrorCode::DimensionMismatch,
                    "variable x" + std::to_string(e->var) + " is not available here (dimension " +
                        std::to_string(max_var) + ")",
                    e->span.begin);
      return MonomialFn::variable(e->var - 1);
    case K::Add: return evaluate(e->lhs, max_var) + evaluate(e->rhs, max_var);
    case K::Sub: return evaluate(e->lhs, max_var) - evaluate(e->rhs, max_var);
    case K::Mul: return evaluate(e->lhs, max_var) * evaluate(e->rhs, max_var);
    case K::Neg: return -evaluate(e->lhs, max_var);
    case K::Div: {
      MonomialFn d = evaluate(e->rhs, max_var);
      if (d.terms().size() != 1 || !d.terms().front().coefficient.is_monomial())
        throw Error(ErrorCode::ClassViolation, "division by a non-monomial " + d.str(), e->rhs->span.begin);
      MonomialFn n = evaluate(e->lhs, max_var);
      return n.divided_by_term(d.terms().front());
    }
    case K::Pow: return detail::power_of(evaluate(e->lhs, max_var), e->value, e->span);
  }
  return {};
}

inline PuiseuxScalar evaluate_scalar(const Expr& e) { return evaluate(e, 0).constant_value(); }

inline DefinableSet evaluate(const SetAst& s, Region region = Region::Orthant) {
  switch (s->kind) {
    case SetNode::Kind::Box: {
      std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> bounds;
      for (const auto& [a, b] : s->bounds) {
        bounds.emplace_back(evaluate_scalar(a), evaluate_scalar(b));
        if (bounds.back().first.sign() < 0)
          throw Error(ErrorCode::ClassViolation, "negative lower bound " + bounds.back().first.str(), a->span.begin);
        if (bounds.back().second < bounds.back().first)
          throw Error(ErrorCode::ClassViolation, "upper bound below lower bound", b->span.begin);
      }
      return detail::at(s->span, [&] { return DefinableSet(make_box(bounds, region)); });
    }
    case SetNode::Kind::Cell: {
      DefinableSet base = evaluate(s->base, region);
      std::size_t k = base.dimension();
      MonomialFn low = evaluate(s->low, k);
      MonomialFn thick = evaluate(s->thick, k);
      if (!low.is_posynomial())
        throw Error(ErrorCode::ClassViolation, "lower bound " + low.str() + " has a negative coefficient",
                    s->low->span.begin);
      if (!thick.is_posynomial())
        throw Error(ErrorCode::ClassViolation, "thickness " + thick.str() + " has a negative coefficient",
                    s->thick->span.begin);
      DefinableSet out(k + 1);
      for (const auto& c : base.cells()) {
        auto coords = c.coordinates();
        coords.push_back(thick.is_zero() ? Coordinate::thin(low) : Coordinate::thick(low, thick));
        detail::at(s->span, [&] {
          out.add(MonomialCell(std::move(coords), region));
          return 0;
        });
      }
      return out;
    }
    case SetNode::Kind::Union: {
      std::vector<DefinableSet> parts;
      for (const auto& p : s->parts) parts.push_back(evaluate(p, region));
      for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i].dimension() != parts[0].dimension())
          throw Error(ErrorCode::DimensionMismatch, "union members have different dimensions", s->parts[i]->span.begin);
      return detail::at(s->span, [&] { return make_union(parts); });
    }
    case SetNode::Kind::Product: {
      DefinableSet out = evaluate(s->parts.front(), region);
      for (std::size_t i = 1; i < s->parts.size(); ++i) {
        DefinableSet next = evaluate(s->parts[i], region);
        out = detail::at(s->span, [&] { return product(out, next); });
      }
      return out;
    }
  }
  return DefinableSet();
}

inline IsoPipeline evaluate(const MapAst& m) {
  IsoPipeline pipeline;
  for (const auto& step : m.steps) {
    switch (step.kind) {
      case MapStepNode::Kind::Shear: {
        MonomialFn f = evaluate(step.addend, step.first - 1);
        bool positive = f.is_posynomial();
        bool negative = (-f).is_posynomial();
        if (!positive && !negative)
          throw Error(ErrorCode::ClassViolation, "shear addend must have coefficients of one sign",
                      step.addend->span.begin);
        pipeline.steps.push_back(ShearMap{step.first - 1, positive ? f : -f, !positive});
        break;
      }
      case MapStepNode::Kind::Swap:
        pipeline.steps.push_back(SwapMap{step.first - 1, step.second - 1});
        break;
      case MapStepNode::Kind::Diag:
      case MapStepNode::Kind::Translate: {
        std::vector<PuiseuxScalar> v;
        for (const auto& a : step.args) v.push_back(detail::at(a->span, [&] { return evaluate_scalar(a); }));
        pipeline.steps.push_back(step.kind == MapStepNode::Kind::Diag ? AffineMap::diag(std::move(v))
                                                                      : AffineMap::translate(std::move(v)));
        break;
      }
    }
  }
  return pipeline;
}

// ---------------------------------------------------------------- entry points

inline PuiseuxScalar parse_scalar(std::string_view text) {
  Expr e = parse_expr_ast(text);
  return detail::at(e->span, [&] { return evaluate_scalar(e); });
}

/// Monomial expression over x1..x_dimension.
inline MonomialFn parse_mexpr(std::string_view text, std::size_t dimension) {
  return evaluate(parse_expr_ast(text), dimension);
}

inline DefinableSet parse_set(std::string_view text, Region region = Region::Orthant) {
  return evaluate(parse_set_ast(text), region);
}

inline IsoPipeline parse_map(std::string_view text) { return evaluate(parse_map_ast(text)); }

}  // namespace omeasure::dsl
