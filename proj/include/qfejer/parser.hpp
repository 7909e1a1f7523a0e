#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qfejer/element.hpp"

namespace qfejer {

/// Expression tree for the surface language. S(p) arguments are validated
/// against the active system while parsing, so a well-formed tree always
/// evaluates. References produced by `let name = expr;` bindings keep the
/// bound subtree.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind {
    scalar,      // Gaussian rational literal, also I and i
    gen_u,       // u(g), U being u(1)
    gen_s,       // S(p)
    adjoint,     // postfix '
    product,
    sum,
    difference,
    negation,
    group,       // parenthesized
    reference,   // named binding use
  };

  Kind kind;
  GaussianRational value;  // scalar
  long long arg = 0;       // gen_u: g, gen_s: p
  ExprPtr lhs, rhs;
  std::string name;  // reference
};

inline Element evaluate(const ExprPtr& node, const SystemDescriptor& sys) {
  switch (node->kind) {
    case ExprNode::Kind::scalar:
      return Element::scalar(sys, node->value);
    case ExprNode::Kind::gen_u:
      return Element::unitary(sys, node->arg);
    case ExprNode::Kind::gen_s:
      return Element::isometry(sys, node->arg);
    case ExprNode::Kind::adjoint:
      return adjoint(evaluate(node->lhs, sys));
    case ExprNode::Kind::product:
      return mul(evaluate(node->lhs, sys), evaluate(node->rhs, sys));
    case ExprNode::Kind::sum:
      return evaluate(node->lhs, sys) + evaluate(node->rhs, sys);
    case ExprNode::Kind::difference:
      return evaluate(node->lhs, sys) - evaluate(node->rhs, sys);
    case ExprNode::Kind::negation:
      return -evaluate(node->lhs, sys);
    case ExprNode::Kind::group:
    case ExprNode::Kind::reference:
      return evaluate(node->lhs, sys);
  }
  throw Error("unreachable expression node");
}

namespace detail {

struct Token {
  enum class Kind {
    number,
    ident,
    lparen,
    rparen,
    plus,
    minus,
    star,
    prime,
    slash,
    equals,
    semicolon,
    end,
  };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
    int line = line_, column = column_;
    if (pos_ >= src_.size()) return {Token::Kind::end, "", line, column};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text += src_[pos_];
        advance();
      }
      return {Token::Kind::number, text, line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        text += src_[pos_];
        advance();
      }
      return {Token::Kind::ident, text, line, column};
    }
    advance();
    switch (c) {
      case '(': return {Token::Kind::lparen, "(", line, column};
      case ')': return {Token::Kind::rparen, ")", line, column};
      case '+': return {Token::Kind::plus, "+", line, column};
      case '-': return {Token::Kind::minus, "-", line, column};
      case '*': return {Token::Kind::star, "*", line, column};
      case '\'': return {Token::Kind::prime, "'", line, column};
      case '/': return {Token::Kind::slash, "/", line, column};
      case '=': return {Token::Kind::equals, "=", line, column};
      case ';': return {Token::Kind::semicolon, ";", line, column};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

/// Recursive descent over
///   program := ('let' ident '=' expr ';')* expr
///   expr    := '-'? term (('+' | '-') term)*
///   term    := factor ('*'? factor)*
///   factor  := atom '\''*
///   atom    := number ('/' number)? | 'i' | 'I' | 'U'
///             | 'u' '(' int ')' | 'S' '(' int ')' | '(' expr ')' | ident
/// Juxtaposition multiplies; '-' never starts a juxtaposed factor, so
/// "a - b" is always a difference.
class Parser {
 public:
  Parser(const std::string& src, const SystemDescriptor& sys) : lexer_(src), sys_(sys) {
    cur_ = lexer_.next();
  }

  ExprPtr parse_program() {
    while (cur_.kind == Token::Kind::ident && cur_.text == "let") parse_binding();
    ExprPtr e = parse_expr();
    expect(Token::Kind::end, "end of input");
    return e;
  }

 private:
  void parse_binding() {
    eat();  // let
    if (cur_.kind != Token::Kind::ident)
      throw ParseError("expected binding name after 'let'", cur_.line, cur_.column);
    std::string name = cur_.text;
    if (is_reserved(name))
      throw ParseError("'" + name + "' is reserved and cannot be bound", cur_.line,
                       cur_.column);
    eat();
    expect(Token::Kind::equals, "'='");
    ExprPtr body = parse_expr();
    expect(Token::Kind::semicolon, "';'");
    bindings_[name] = std::move(body);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs;
    if (cur_.kind == Token::Kind::minus) {
      eat();
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::negation;
      node->lhs = parse_term();
      lhs = node;
    } else {
      lhs = parse_term();
    }
    while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
      bool plus = cur_.kind == Token::Kind::plus;
      eat();
      auto node = std::make_shared<ExprNode>();
      node->kind = plus ? ExprNode::Kind::sum : ExprNode::Kind::difference;
      node->lhs = lhs;
      node->rhs = parse_term();
      lhs = node;
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    for (;;) {
      if (cur_.kind == Token::Kind::star) {
        eat();
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::product;
        node->lhs = lhs;
        node->rhs = parse_factor();
        lhs = node;
      } else if (starts_factor()) {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::product;
        node->lhs = lhs;
        node->rhs = parse_factor();
        lhs = node;
      } else {
        return lhs;
      }
    }
  }

  bool starts_factor() const {
    return cur_.kind == Token::Kind::number || cur_.kind == Token::Kind::ident ||
           cur_.kind == Token::Kind::lparen;
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_atom();
    while (cur_.kind == Token::Kind::prime) {
      eat();
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::adjoint;
      node->lhs = e;
      e = node;
    }
    return e;
  }

  ExprPtr parse_atom() {
    Token t = cur_;
    if (t.kind == Token::Kind::number) {
      eat();
      std::string text = t.text;
      if (cur_.kind == Token::Kind::slash) {
        eat();
        if (cur_.kind != Token::Kind::number)
          throw ParseError("expected denominator after '/'", cur_.line, cur_.column);
        text += "/" + cur_.text;
        eat();
      }
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::scalar;
      node->value = GaussianRational(rational_from_string(text));
      return node;
    }
    if (t.kind == Token::Kind::lparen) {
      eat();
      ExprPtr inner = parse_expr();
      expect(Token::Kind::rparen, "')'");
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::group;
      node->lhs = inner;
      return node;
    }
    if (t.kind == Token::Kind::ident) {
      if (t.text == "I") {
        eat();
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::scalar;
        node->value = GaussianRational::one();
        return node;
      }
      if (t.text == "i") {
        eat();
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::scalar;
        node->value = GaussianRational::i();
        return node;
      }
      if (t.text == "U") {
        eat();
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::gen_u;
        node->arg = 1;
        return node;
      }
      if (t.text == "u" || t.text == "S") {
        eat();
        expect(Token::Kind::lparen, "'('");
        long long v = parse_int();
        expect(Token::Kind::rparen, "')'");
        auto node = std::make_shared<ExprNode>();
        if (t.text == "u") {
          node->kind = ExprNode::Kind::gen_u;
        } else {
          node->kind = ExprNode::Kind::gen_s;
          sys_.require_member(v);
        }
        node->arg = v;
        return node;
      }
      auto it = bindings_.find(t.text);
      if (it == bindings_.end())
        throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
      eat();
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::reference;
      node->name = t.text;
      node->lhs = it->second;
      return node;
    }
    throw ParseError("expected a value, found " +
                         (t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'"),
                     t.line, t.column);
  }

  long long parse_int() {
    bool neg = false;
    if (cur_.kind == Token::Kind::minus) {
      neg = true;
      eat();
    }
    if (cur_.kind != Token::Kind::number)
      throw ParseError("expected an integer", cur_.line, cur_.column);
    if (cur_.text.size() > 18)
      throw ParseError("integer literal too large", cur_.line, cur_.column);
    long long v = std::stoll(cur_.text);
    eat();
    return neg ? -v : v;
  }

  static bool is_reserved(const std::string& name) {
    return name == "let" || name == "I" || name == "i" || name == "U" || name == "u" ||
           name == "S";
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError("expected " + what, cur_.line, cur_.column);
    eat();
  }

  void eat() { cur_ = lexer_.next(); }

  Lexer lexer_;
  SystemDescriptor sys_;
  Token cur_;
  std::map<std::string, ExprPtr> bindings_;
};

}  // namespace detail

inline ExprPtr parse(const std::string& source, const SystemDescriptor& sys) {
  return detail::Parser(source, sys).parse_program();
}

/// Parses and evaluates in one step.
inline Element parse_element(const std::string& source, const SystemDescriptor& sys) {
  return evaluate(parse(source, sys), sys);
}

}  // namespace qfejer
