// Recursive-descent parser for the expression grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' ['-'] integer)?
//   atom   := number | ident | ident '(' expr ')' | '(' expr ')'

#include <cctype>

#include "fzk/errors.hpp"
#include "fzk/expr.hpp"

namespace fzk {

namespace {

Expr negate(const Expr& e) {
  if (e.is_constant()) return Expr::constant(-e.value());
  if (e.kind() == Expr::Kind::Product && !e.operands().empty() &&
      e.operands().front().is_constant()) {
    std::vector<Expr> ops(e.operands().begin(), e.operands().end());
    ops.front() = Expr::constant(-ops.front().value());
    return Expr::product(std::move(ops));
  }
  return Expr::product({Expr::constant(-1), e});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(negate(term()));
      else
        break;
    }
    return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors{factor()};
    for (;;) {
      if (accept('*'))
        factors.push_back(factor());
      else if (accept('/'))
        factors.push_back(Expr::power(factor(), -1));
      else
        break;
    }
    return factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
  }

  Expr factor() {
    if (accept('-')) return negate(factor());
    Expr a = atom();
    if (accept('^')) {
      skip_ws();
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        negative = text_[pos_] == '-';
        ++pos_;
      }
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const long k = std::stol(std::string(text_.substr(start, pos_ - start)));
      a = Expr::power(std::move(a), negative ? -k : k);
    }
    return a;
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    std::string digits;
    long scale = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_++];
        --scale;
      }
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      bool neg = false;
      if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) neg = text_[p++] == '-';
      const std::size_t es = p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      if (p > es) {
        const long ex = std::stol(std::string(text_.substr(es, p - es)));
        scale += neg ? -ex : ex;
        pos_ = p;
      }
    }
    mpz_class num(digits, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational v = scale < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow);
    v.canonicalize();
    return Expr::constant(std::move(v));
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      Func f;
      if (name == "sinh")
        f = Func::Sinh;
      else if (name == "cosh")
        f = Func::Cosh;
      else if (name == "exp")
        f = Func::Exp;
      else if (name == "gamma")
        f = Func::Gamma;
      else {
        pos_ = start;
        fail("unknown function '" + name + "'");
      }
      ++pos_;
      Expr arg = expr();
      expect(')');
      return Expr::call(f, std::move(arg));
    }
    if (name == "x") return Expr::variable(Var::X);
    if (name == "y") return Expr::variable(Var::Y);
    if (name == "t") return Expr::variable(Var::T);
    return Expr::parameter(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return normalize(Parser(text).parse()); }

}  // namespace fzk
