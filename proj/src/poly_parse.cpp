#include <cctype>

#include "facsub/error.hpp"
#include "facsub/poly.hpp"

namespace facsub {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : s_(text), vars_(vars) {}

  MultiPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    MultiPoly p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      MultiPoly rhs = term();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  MultiPoly unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (peek() == '-') throw ParseError("negative exponent", pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
    const std::size_t start = pos_;
    unsigned long k = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + static_cast<unsigned long>(peek() - '0');
      if (k > 100000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return pow(base, static_cast<unsigned>(k));
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  MultiPoly atom() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError("division is only allowed between integer literals", pos_);
        }
        const std::size_t den_pos = pos_;
        den = integer();
        if (den == 0) throw ParseError("division by zero", den_pos);
      }
      Rational value(num, den);
      value.canonicalize();
      MultiPoly lit = MultiPoly::constant(vars_.size(), value);
      skip_ws();
      if (ident_start(peek()) || peek() == '(') return lit * power();
      return lit;
    }
    if (ident_start(c)) {
      while (ident_char(peek())) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return MultiPoly::variable(vars_.size(), i);
      }
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars) {
  for (const auto& v : vars) {
    if (v.empty() || (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_')) {
      throw DomainError("invalid variable name '" + v + "'");
    }
  }
  return Parser(text, vars).run();
}

}  // namespace facsub
