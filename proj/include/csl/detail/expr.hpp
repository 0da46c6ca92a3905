#pragma once

// Small recursive-descent parser shared by the scalar and quaternion text
// syntaxes:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//   unary  := '-' unary | '+' unary | atom
//   atom   := integer | identifier | '(' expr ')'

#include <gmpxx.h>

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "csl/error.hpp"

namespace csl::detail {

template <class V>
class ExprParser {
 public:
  using Number = std::function<V(const mpz_class&)>;
  using Symbol = std::function<std::optional<V>(std::string_view)>;
  using Divide = std::function<V(const V&, const V&)>;

  ExprParser(std::string_view text, Number number, Symbol symbol, Divide divide)
      : text_(text), number_(std::move(number)), symbol_(std::move(symbol)),
        divide_(std::move(divide)) {}

  V parse() {
    V v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom() {
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  V expr() {
    V acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  V term() {
    V acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        acc = divide_(acc, unary());
      } else if (starts_atom()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  V unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return number_(mpz_class(-1)) * unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return atom();
  }

  V atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return number_(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (auto v = symbol_(name)) return *v;
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Number number_;
  Symbol symbol_;
  Divide divide_;
};

}  // namespace csl::detail
