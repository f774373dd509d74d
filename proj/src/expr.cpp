#include "gravicat/expr.hpp"

#include <cctype>
#include <vector>

#include "gravicat/error.hpp"

namespace gravicat {

namespace {

struct Token {
  enum class Type { Name, Star, Plus, LParen, RParen, End };
  Type type = Type::End;
  std::string text;
  int line = 1, column = 1;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.type = Token::Type::Name;
      t.text = src.substr(i, j - i);
      column += static_cast<int>(j - i);
      i = j;
    } else {
      switch (c) {
        case '*': t.type = Token::Type::Star; break;
        case '+': t.type = Token::Type::Plus; break;
        case '(': t.type = Token::Type::LParen; break;
        case ')': t.type = Token::Type::RParen; break;
        default:
          throw SyntaxError("unexpected character '" + std::string(1, c) + "'", line, column,
                            std::string(1, c));
      }
      t.text = std::string(1, c);
      ++column;
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Token::Type::End;
  end.text = "end of input";
  end.line = line;
  end.column = column;
  out.push_back(std::move(end));
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_union();
    if (peek().type != Token::Type::End) unexpected();
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void unexpected() const {
    const Token& t = peek();
    throw SyntaxError("unexpected " + (t.type == Token::Type::End
                                           ? t.text
                                           : "token '" + t.text + "'"),
                      t.line, t.column, t.text);
  }

  void expect(Token::Type type, const char* what) {
    if (peek().type != type) {
      const Token& t = peek();
      throw SyntaxError("expected " + std::string(what) + " before '" + t.text + "'", t.line,
                        t.column, t.text);
    }
    advance();
  }

  ExprPtr parse_union() {
    ExprPtr lhs = parse_comp();
    while (peek().type == Token::Type::Plus) {
      const Token& op = advance();
      auto node = std::make_unique<Expression>(Expression::Kind::Union, op.line, op.column);
      node->lhs = std::move(lhs);
      node->rhs = parse_comp();
      node->line = node->lhs->line;
      node->column = node->lhs->column;
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_comp() {
    ExprPtr lhs = parse_atom();
    while (peek().type == Token::Type::Star) {
      const Token& op = advance();
      auto node = std::make_unique<Expression>(Expression::Kind::Compose, op.line, op.column);
      node->lhs = std::move(lhs);
      node->rhs = parse_atom();
      node->line = node->lhs->line;
      node->column = node->lhs->column;
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    if (t.type == Token::Type::Name) {
      if (t.text == "rev" && peek(1).type == Token::Type::LParen) {
        advance();
        advance();
        auto node = std::make_unique<Expression>(Expression::Kind::Reverse, t.line, t.column);
        node->lhs = parse_union();
        expect(Token::Type::RParen, "')'");
        return node;
      }
      advance();
      auto node = std::make_unique<Expression>(Expression::Kind::Name, t.line, t.column);
      node->name = t.text;
      return node;
    }
    if (t.type == Token::Type::LParen) {
      advance();
      ExprPtr inner = parse_union();
      expect(Token::Type::RParen, "')'");
      return inner;
    }
    unexpected();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Expression::Kind k) {
  switch (k) {
    case Expression::Kind::Union: return 1;
    case Expression::Kind::Compose: return 2;
    default: return 3;
  }
}

void print(const Expression& e, int parent_prec, std::string& out) {
  int prec = precedence(e.kind);
  switch (e.kind) {
    case Expression::Kind::Name:
      out += e.name;
      return;
    case Expression::Kind::Reverse:
      out += "rev(";
      print(*e.lhs, 0, out);
      out += ")";
      return;
    case Expression::Kind::Union:
    case Expression::Kind::Compose: {
      bool parens = prec < parent_prec;
      if (parens) out += "(";
      print(*e.lhs, prec, out); // left-associative: same level on the left
      out += e.kind == Expression::Kind::Union ? " + " : " * ";
      print(*e.rhs, prec + 1, out);
      if (parens) out += ")";
      return;
    }
  }
}

} // namespace

ExprPtr parse_expression(const std::string& source) {
  return Parser(tokenize(source)).run();
}

std::string pretty_print(const Expression& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

bool expr_equal(const Expression& a, const Expression& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expression::Kind::Name: return a.name == b.name;
    case Expression::Kind::Reverse: return expr_equal(*a.lhs, *b.lhs);
    default:
      return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
  }
}

} // namespace gravicat
