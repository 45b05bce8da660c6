#pragma once

// Text grammar shared by cyclotomic constants and polynomials:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*        division only by nonzero constants
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'z(' integer ')' | variable | '(' expr ')'
//
// `z(N)` is the root of unity exp(2 pi i / N). Variables are `z1..zn` (or `z`
// when n = 1); `u1..un` / `u` name the same slots for theta-coordinates.

#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cstkit/poly.hpp"

namespace cstkit {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t nvars, std::vector<std::string> prefixes)
      : s_(text), nvars_(nvars), prefixes_(std::move(prefixes)) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, "at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static void unify(Poly& a, Poly& b) {
    const int m = std::lcm(a.conductor(), b.conductor());
    if (a.conductor() != m) a = a.lift(m);
    if (b.conductor() != m) b = b.lift(m);
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        Poly t = term();
        unify(acc, t);
        acc += t;
      } else if (accept('-')) {
        Poly t = term();
        unify(acc, t);
        acc -= t;
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        Poly t = unary();
        unify(acc, t);
        acc = acc * t;
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly t = unary();
        if (!t.is_constant()) {
          pos_ = at;
          error("division by a non-constant");
        }
        if (t.is_zero()) {
          pos_ = at;
          error("division by zero");
        }
        unify(acc, t);
        acc = t.constant_term().inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      const long e = integer();
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 9) error("integer too long");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(nvars_, Rational(v));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "z" && pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        const long n = integer();
        if (!accept(')')) error("expected ')' after root-of-unity conductor");
        if (n < 1) error("conductor must be positive");
        return Poly::constant(nvars_, Cyclotomic::zeta_power(static_cast<int>(n), 1));
      }
      bool known = false;
      for (const auto& p : prefixes_) known = known || p == name;
      if (!known) {
        pos_ = start;
        error("unknown identifier '" + name + "'");
      }
      const std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::size_t index = 0;
      if (dstart == pos_) {
        if (nvars_ != 1) {
          pos_ = start;
          error("bare '" + name + "' only allowed with one variable");
        }
      } else {
        const long k = std::stol(std::string(s_.substr(dstart, pos_ - dstart)));
        if (k < 1 || static_cast<std::size_t>(k) > nvars_) {
          pos_ = start;
          error("variable '" + std::string(s_.substr(start, pos_ - start)) + "' out of range for " +
                std::to_string(nvars_) + " variables");
        }
        index = static_cast<std::size_t>(k - 1);
      }
      return Poly::variable(nvars_, index);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  std::vector<std::string> prefixes_;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, std::size_t nvars, std::vector<std::string> prefixes = {"z", "u"}) {
  return detail::ExprParser(text, nvars, std::move(prefixes)).parse();
}

/// Parses the constant grammar, e.g. `1/2 + 1/2*z(3)^1`.
inline Cyclotomic parse_cyclotomic(std::string_view text) {
  Poly p = detail::ExprParser(text, 0, {}).parse();
  return p.constant_term().lift(p.conductor());
}

}  // namespace cstkit
