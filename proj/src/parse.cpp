#include "vrg/parse.hpp"

#include <cctype>
#include <string>

#include "vrg/errors.hpp"

namespace vrg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Poly run() {
    Poly p = expression();
    skip_space();
    if (pos_ < text_.size()) {
      if (starts_operand()) fail("implicit multiplication is not allowed; use '*'");
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // U+2212 MINUS SIGN is accepted as '-'.
  bool at_minus() const {
    if (pos_ < text_.size() && text_[pos_] == '-') return true;
    return text_.substr(pos_, 3) == "\xE2\x88\x92";
  }
  void eat_minus() { pos_ += text_[pos_] == '-' ? 1 : 3; }

  bool starts_operand() const {
    if (pos_ >= text_.size()) return false;
    auto c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Poly expression() {
    Poly acc = term();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        acc += term();
      } else if (at_minus()) {
        eat_minus();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    skip_space();
    if (at_minus()) {
      eat_minus();
      return -unary();
    }
    if (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected a non-negative integer exponent");
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      base = pow(base, std::stoi(digits));
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponents need parentheses");
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    auto c = static_cast<unsigned char>(text_[pos_]);
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(c)) {
      Int num(read_digits(), 10);
      Int den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string d = read_digits();
        if (d.empty()) fail("expected denominator after '/'");
        den = Int(d, 10);
        if (den == 0) fail("zero denominator");
      }
      if (pos_ < text_.size()) {
        auto next = static_cast<unsigned char>(text_[pos_]);
        if (std::isalpha(next) || next == '_' || next == '(')
          fail("implicit multiplication is not allowed; use '*'");
      }
      return Poly(ring_, make_rat(num, den));
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

}  // namespace vrg
