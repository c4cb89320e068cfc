#pragma once

// Recursive-descent parser for the ASCII expression grammar shared by
// scalars, forms and polynomials:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | identifier | identifier '(' expr (',' expr)* ')'
//           | '(' expr ')' | '-' factor
//   rational := int ('/' uint)?
//
// Semantics are supplied by a policy type. When the policy sets
// `chained_caret`, '^' may also be followed by an atom and may repeat
// (used for wedge products "e1^e2^e3").

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hermitia/error.hpp"
#include "hermitia/rational.hpp"

namespace hermitia {

template <class Semantics>
class ExprParser {
 public:
  using Value = typename Semantics::Value;

  ExprParser(std::string_view text, Semantics& sem) : text_(text), sem_(sem) { advance(); }

  Value parse() {
    Value v = expr();
    if (tok_.kind != Kind::end) fail("unexpected '" + std::string(tok_.text) + "'");
    return v;
  }

 private:
  enum class Kind { end, integer, ident, op };
  struct Token {
    Kind kind = Kind::end;
    std::string_view text;
    std::size_t offset = 0;
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, tok_.offset); }

  void advance() {
    prev_ = tok_;
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Kind::end;
      tok_.text = {};
      return;
    }
    const char c = text_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Kind::integer;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Kind::ident;
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      ++pos_;
      tok_.kind = Kind::op;
    } else {
      tok_.text = text_.substr(start, 1);
      fail(std::string("invalid character '") + c + "'");
    }
    tok_.text = text_.substr(start, pos_ - start);
  }

  bool at_op(char c) const { return tok_.kind == Kind::op && tok_.text[0] == c; }

  void expect_op(char c) {
    if (!at_op(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  // Peeks whether the character after the current token (skipping blanks)
  // starts an integer; used for the "p/q" rational literal.
  bool next_is_slash_integer() const {
    std::size_t p = pos_;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != '/') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  unsigned parse_exponent() {
    if (tok_.kind != Kind::integer) fail("expected unsigned integer exponent");
    if (tok_.text.size() > 6) fail("exponent too large");
    unsigned n = static_cast<unsigned>(std::stoul(std::string(tok_.text)));
    advance();
    return n;
  }

  Value expr() {
    Value v = term();
    while (at_op('+') || at_op('-')) {
      bool plus = at_op('+');
      advance();
      Value rhs = term();
      v = plus ? sem_.add(std::move(v), std::move(rhs)) : sem_.sub(std::move(v), std::move(rhs));
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (at_op('*') || at_op('/')) {
      bool times = at_op('*');
      std::size_t off = tok_.offset;
      advance();
      Value rhs = factor();
      v = times ? sem_.mul(std::move(v), std::move(rhs), off)
                : sem_.div(std::move(v), std::move(rhs), off);
    }
    return v;
  }

  Value factor() {
    Value v = atom();
    if constexpr (Semantics::chained_caret) {
      while (at_op('^')) {
        std::size_t off = tok_.offset;
        advance();
        if (tok_.kind == Kind::integer && !next_is_slash_integer()) {
          v = sem_.power(std::move(v), parse_exponent(), off);
        } else {
          Value rhs = atom();
          v = sem_.caret(std::move(v), std::move(rhs), off);
        }
      }
    } else {
      if (at_op('^')) {
        std::size_t off = tok_.offset;
        advance();
        v = sem_.power(std::move(v), parse_exponent(), off);
      }
    }
    return v;
  }

  Value atom() {
    const std::size_t off = tok_.offset;
    if (tok_.kind == Kind::integer) {
      std::string num(tok_.text);
      const bool after_slash = prev_.kind == Kind::op && prev_.text[0] == '/';
      if (!after_slash && next_is_slash_integer()) {
        advance();  // integer
        advance();  // '/'
        std::string den(tok_.text);
        advance();
        Rational q{Integer(num), Integer(den)};
        if (q.get_den() == 0) throw DivisionByZero("zero denominator in literal at byte " + std::to_string(off));
        q.canonicalize();
        return sem_.rational(q);
      }
      advance();
      return sem_.rational(Rational{Integer(num)});
    }
    if (tok_.kind == Kind::ident) {
      std::string name(tok_.text);
      advance();
      if (at_op('(')) {
        advance();
        std::vector<Value> args;
        args.push_back(expr());
        while (at_op(',')) {
          advance();
          args.push_back(expr());
        }
        expect_op(')');
        return sem_.call(name, std::move(args), off);
      }
      return sem_.identifier(name, off);
    }
    if (at_op('(')) {
      advance();
      Value v = expr();
      expect_op(')');
      return v;
    }
    if (at_op('-')) {
      advance();
      return sem_.neg(factor());
    }
    if (tok_.kind == Kind::end) fail("unexpected end of input");
    fail("unexpected '" + std::string(tok_.text) + "'");
  }

  std::string_view text_;
  Semantics& sem_;
  std::size_t pos_ = 0;
  Token tok_;
  Token prev_;
};

}  // namespace hermitia
