#include "cherednik/expr.hpp"

#include <array>
#include <cctype>
#include <vector>

#include "cherednik/engine.hpp"

namespace cherednik {

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), l, c});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(ch))) { ++col; ++i; continue; }
    int tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        ++col;
      }
      push(Token::Kind::number, std::move(digits), tl, tc);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string ident;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ident += text[i++];
        ++col;
      }
      push(Token::Kind::ident, std::move(ident), tl, tc);
      continue;
    }
    Token::Kind k;
    switch (ch) {
      case '+': k = Token::Kind::plus; break;
      case '-': k = Token::Kind::minus; break;
      case '*': k = Token::Kind::star; break;
      case '^': k = Token::Kind::caret; break;
      case '/': k = Token::Kind::slash; break;
      case '(': k = Token::Kind::lparen; break;
      case ')': k = Token::Kind::rparen; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
    }
    push(k, std::string(1, ch), tl, tc);
    ++col;
    ++i;
  }
  out.push_back(Token{Token::Kind::end, "", line, col});
  return out;
}

constexpr std::array<const char*, 9> kKnownIdents = {"tau", "h",  "e", "f", "x",
                                                     "y",   "x1", "y1", "Delta"};

bool known_ident(const std::string& s) {
  for (const char* k : kKnownIdents)
    if (s == k) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (cur().kind != Token::Kind::end)
      throw ParseError(cur().line, cur().col, "unexpected trailing input '" + cur().text + "'");
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (cur().kind != k) return false;
    ++pos_;
    return true;
  }

  static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

  ExprPtr expr() {
    ExprPtr left;
    if (accept(Token::Kind::minus)) {
      ExprNode n{ExprNode::Kind::negate, "", "", "", term(), nullptr, 0};
      left = node(std::move(n));
    } else {
      left = term();
    }
    while (cur().kind == Token::Kind::plus || cur().kind == Token::Kind::minus) {
      bool plus = advance().kind == Token::Kind::plus;
      ExprNode n{plus ? ExprNode::Kind::add : ExprNode::Kind::subtract,
                 "", "", "", left, term(), 0};
      left = node(std::move(n));
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (accept(Token::Kind::star)) {
      ExprNode n{ExprNode::Kind::multiply, "", "", "", left, factor(), 0};
      left = node(std::move(n));
    }
    return left;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (!accept(Token::Kind::caret)) return b;
    const Token& t = cur();
    if (t.kind != Token::Kind::number)
      throw ParseError(t.line, t.col, "expected a non-negative integer exponent");
    advance();
    unsigned exp = 0;
    for (char c : t.text) {
      unsigned digit = static_cast<unsigned>(c - '0');
      if (exp > (1000000u - digit) / 10)
        throw ParseError(t.line, t.col, "exponent too large");
      exp = exp * 10 + digit;
    }
    ExprNode n{ExprNode::Kind::power, "", "", "", b, nullptr, exp};
    return node(std::move(n));
  }

  ExprPtr base() {
    const Token& t = cur();
    switch (t.kind) {
      case Token::Kind::number: {
        advance();
        ExprNode n{ExprNode::Kind::number, t.text, "", "", nullptr, nullptr, 0};
        if (accept(Token::Kind::slash)) {
          const Token& d = cur();
          if (d.kind != Token::Kind::number)
            throw ParseError(d.line, d.col, "expected a denominator after '/'");
          advance();
          n.denominator = d.text;
        }
        return node(std::move(n));
      }
      case Token::Kind::ident: {
        if (!known_ident(t.text))
          throw ParseError(t.line, t.col,
                           "unknown identifier '" + t.text +
                               "' (expected tau, h, e, f, x, y, x1, y1, or Delta)");
        advance();
        ExprNode n{ExprNode::Kind::variable, "", "", t.text, nullptr, nullptr, 0};
        return node(std::move(n));
      }
      case Token::Kind::lparen: {
        advance();
        ExprPtr inner = expr();
        if (!accept(Token::Kind::rparen))
          throw ParseError(cur().line, cur().col, "expected ')'");
        return inner;
      }
      default:
        throw ParseError(t.line, t.col,
                         "expected a number, identifier, or '(' but found '" +
                             (t.kind == Token::Kind::end ? std::string("end of input") : t.text) +
                             "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Parenthesization levels: 0 = additive, 1 = multiplicative, 2 = power base.
std::string print_at(const ExprPtr& e, int level) {
  auto wrap = [&](const std::string& s, bool need) { return need ? "(" + s + ")" : s; };
  switch (e->kind) {
    case ExprNode::Kind::number:
      return e->denominator.empty() ? e->numerator : e->numerator + "/" + e->denominator;
    case ExprNode::Kind::variable:
      return e->name;
    case ExprNode::Kind::negate:
      return wrap("-" + print_at(e->lhs, 1), level >= 1);
    case ExprNode::Kind::add:
      return wrap(print_at(e->lhs, 0) + " + " + print_at(e->rhs, 1), level >= 1);
    case ExprNode::Kind::subtract:
      return wrap(print_at(e->lhs, 0) + " - " + print_at(e->rhs, 1), level >= 1);
    case ExprNode::Kind::multiply:
      return wrap(print_at(e->lhs, 1) + "*" + print_at(e->rhs, 2), level >= 2);
    case ExprNode::Kind::power:
      return wrap(print_at(e->lhs, 3) + "^" + std::to_string(e->exponent), level >= 3);
  }
  throw Error("print_expression: unreachable");
}

Scalar eval_number(const ExprNode& n, const Field& f) {
  Scalar num = Scalar::from_decimal_string(f, n.numerator);
  if (n.denominator.empty()) return num;
  Scalar den = Scalar::from_decimal_string(f, n.denominator);
  return num / den;  // throws DivisionByZeroError when den vanishes in f
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(lex(text)).parse(); }

std::string print_expression(const ExprPtr& e) { return print_at(e, 0); }

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprNode::Kind::number:
      return a->numerator == b->numerator && a->denominator == b->denominator;
    case ExprNode::Kind::variable:
      return a->name == b->name;
    case ExprNode::Kind::negate:
      return expr_equal(a->lhs, b->lhs);
    case ExprNode::Kind::power:
      return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
    default:
      return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

CentralPoly eval_central(const ExprPtr& e, const Field& f) {
  switch (e->kind) {
    case ExprNode::Kind::number:
      return CentralPoly::constant(f, eval_number(*e, f));
    case ExprNode::Kind::variable:
      if (e->name == "Delta") return CentralPoly::delta(f);
      if (e->name == "tau") return CentralPoly::tau(f);
      throw Error("eval_central: '" + e->name +
                  "' is not central — expected an expression in Delta and tau");
    case ExprNode::Kind::negate:
      return -eval_central(e->lhs, f);
    case ExprNode::Kind::add:
      return eval_central(e->lhs, f) + eval_central(e->rhs, f);
    case ExprNode::Kind::subtract:
      return eval_central(e->lhs, f) - eval_central(e->rhs, f);
    case ExprNode::Kind::multiply:
      return eval_central(e->lhs, f) * eval_central(e->rhs, f);
    case ExprNode::Kind::power:
      return eval_central(e->lhs, f).pow(e->exponent);
  }
  throw Error("eval_central: unreachable");
}

NcPoly eval_nc(const ExprPtr& e, const RelationTable& table) {
  const Field& f = table.field();
  switch (e->kind) {
    case ExprNode::Kind::number:
      return NcPoly::constant(f, table.order(), eval_number(*e, f));
    case ExprNode::Kind::variable: {
      if (e->name == "Delta")
        return embed_central(CentralPoly::delta(f), table);
      for (Gen g : kAllGens)
        if (e->name == gen_name(g)) return NcPoly::generator(f, table.order(), g);
      throw Error("eval_nc: unknown variable '" + e->name + "'");
    }
    case ExprNode::Kind::negate:
      return -eval_nc(e->lhs, table);
    case ExprNode::Kind::add:
      return eval_nc(e->lhs, table) + eval_nc(e->rhs, table);
    case ExprNode::Kind::subtract:
      return eval_nc(e->lhs, table) - eval_nc(e->rhs, table);
    case ExprNode::Kind::multiply:
      return multiply(eval_nc(e->lhs, table), eval_nc(e->rhs, table), table);
    case ExprNode::Kind::power:
      return power(eval_nc(e->lhs, table), e->exponent, table);
  }
  throw Error("eval_nc: unreachable");
}

}  // namespace cherednik
