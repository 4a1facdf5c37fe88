#include "grh/parser.hpp"

#include <cctype>

namespace grh {
namespace {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
  Token tok_{Token::End, "", 0};

  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", start};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Int, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = {Token::Ident, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    ++i_;
    switch (c) {
      case '+': tok_ = {Token::Plus, "+", start}; return;
      case '-': tok_ = {Token::Minus, "-", start}; return;
      case '*': tok_ = {Token::Star, "*", start}; return;
      case '/': tok_ = {Token::Slash, "/", start}; return;
      case '^': tok_ = {Token::Caret, "^", start}; return;
      case '(': tok_ = {Token::LParen, "(", start}; return;
      case ')': tok_ = {Token::RParen, ")", start}; return;
      default: throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }
};

class Parser {
 public:
  Parser(const std::string& text, AlphabetPtr alph)
      : lex_(text), alph_(std::move(alph)) {}

  Element parse() {
    Element e = expression();
    if (lex_.peek().kind != Token::End)
      throw SyntaxError(lex_.peek().pos, "unexpected input after expression");
    return e;
  }

 private:
  Lexer lex_;
  AlphabetPtr alph_;

  Element expression() {
    bool neg = false;
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      if (lex_.take().kind == Token::Minus) neg = !neg;
    }
    Element acc = term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      bool minus = lex_.take().kind == Token::Minus;
      Element t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
      Token op = lex_.take();
      Element f = factor();
      if (op.kind == Token::Star) {
        acc = acc * f;
      } else {
        Scalar d = require_scalar(f, op.pos);
        if (d.is_zero()) throw DivisionByZero("division by zero in expression");
        acc = acc.scaled(Scalar::one() / d);
      }
    }
    return acc;
  }

  Element factor() {
    Element base = atom();
    if (lex_.peek().kind != Token::Caret) return base;
    Token caret = lex_.take();
    bool neg = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind != Token::Int)
      throw SyntaxError(lex_.peek().pos, "expected integer exponent");
    Token e = lex_.take();
    if (e.text.size() > 4)
      throw SyntaxError(e.pos, "exponent out of range");
    long long n = std::stoll(e.text);
    if (n > 4096) throw SyntaxError(e.pos, "exponent out of range");
    if (neg) {
      Scalar s = require_scalar(base, caret.pos);
      return Element::from_scalar(alph_, s.pow(static_cast<int>(-n)));
    }
    Element acc = Element::unit(alph_);
    for (long long i = 0; i < n; ++i) acc = acc * base;
    return acc;
  }

  Element atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::Int: {
        lex_.take();
        return Element::from_scalar(alph_, Scalar::integer(BigInt::parse(t.text)));
      }
      case Token::Ident: {
        lex_.take();
        if (t.text == "q") return Element::from_scalar(alph_, Scalar::q());
        if (!alph_) throw UnknownGenerator("'" + t.text + "' in a scalar-only context");
        int idx = alph_->index_of(t.text);
        if (idx < 0) throw UnknownGenerator("'" + t.text + "'");
        return Element::letter(alph_, idx);
      }
      case Token::Minus: {
        lex_.take();
        return -factor();
      }
      case Token::LParen: {
        lex_.take();
        Element e = expression();
        if (lex_.peek().kind != Token::RParen)
          throw SyntaxError(lex_.peek().pos, "expected ')'");
        lex_.take();
        return e;
      }
      default:
        throw SyntaxError(t.pos, "expected a generator, number, or '('");
    }
  }

  Scalar require_scalar(const Element& e, size_t pos) {
    if (e.is_zero()) return Scalar::zero();
    if (e.term_count() == 1 && e.terms().begin()->first.empty())
      return e.terms().begin()->second;
    throw SyntaxError(pos, "operand must be a scalar expression");
  }
};

}  // namespace

Element parse_element(const std::string& text, const AlphabetPtr& alphabet) {
  return Parser(text, alphabet).parse();
}

Scalar parse_scalar(const std::string& text) {
  static const AlphabetPtr kEmpty = std::make_shared<Alphabet>(std::vector<Generator>{});
  Element e = Parser(text, kEmpty).parse();
  if (e.is_zero()) return Scalar::zero();
  return e.terms().begin()->second;
}

}  // namespace grh
