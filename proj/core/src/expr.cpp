#include "klk/expr.hpp"

#include <cctype>

#include "klk/errors.hpp"

namespace klk {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ScalarPoly parse() {
    ScalarPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, static_cast<long>(pos_)); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ScalarPoly expr() {
    ScalarPoly p = term();
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  ScalarPoly term() {
    ScalarPoly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  ScalarPoly factor() {
    if (accept('-')) {
      ScalarPoly p = factor();
      p *= Scalar(-1L);
      return p;
    }
    if (accept('+')) return factor();
    ScalarPoly base = atom();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    Integer e = integer();
    if (e > 4096) {
      pos_ = start;
      fail("exponent too large");
    }
    long k = e.get_si();
    if (!neg) return base.pow(static_cast<int>(k));
    const auto& terms = base.terms();
    if (terms.size() != 1 || terms.begin()->first != ScalarPoly::Key{0, 0}) {
      pos_ = start;
      fail("negative exponent on a non-constant");
    }
    try {
      Scalar inv = Scalar(1L) / terms.begin()->second;
      return ScalarPoly::constant(inv).pow(static_cast<int>(k));
    } catch (const DivisionError&) {
      pos_ = start;
      fail("negative exponent on a non-invertible constant");
    }
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  ScalarPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return ScalarPoly::constant(Scalar(make_rational(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view word = s_.substr(start, pos_ - start);
      if (word == "s") return ScalarPoly::s();
      if (word == "t") return ScalarPoly::t();
      if (word == "pi") return ScalarPoly::constant(Scalar::pi());
      if (word == "lambda") return ScalarPoly::constant(Scalar::lambda());
      pos_ = start;
      fail("unknown symbol '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarPoly parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace klk
