#include "fzk/expr.hpp"

namespace fzk {

namespace {

using K = Expr::Kind;

bool is_negative(const Expr& e) {
  if (e.is_constant()) return e.value() < 0;
  return e.kind() == K::Product && !e.operands().empty() &&
         e.operands().front().is_constant() && e.operands().front().value() < 0;
}

// -e for an e with is_negative(e), without renormalizing.
Expr negated(const Expr& e) {
  if (e.is_constant()) return Expr::constant(-e.value());
  std::vector<Expr> ops(e.operands().begin(), e.operands().end());
  Rational c = -ops.front().value();
  if (c == 1 && ops.size() > 1)
    ops.erase(ops.begin());
  else
    ops.front() = Expr::constant(std::move(c));
  return ops.size() == 1 ? ops.front() : Expr::product(std::move(ops));
}

void print(const Expr& e, std::string& out);

void print_rational(const Rational& v, std::string& out) { out += v.get_str(); }

bool is_plain_integer(const Expr& e) {
  return e.is_constant() && e.value() >= 0 && e.value().get_den() == 1;
}

void print_wrapped(const Expr& e, std::string& out) {
  out += '(';
  print(e, out);
  out += ')';
}

void print_factor(const Expr& f, bool leading, std::string& out) {
  const bool wrap = f.kind() == K::Sum || f.kind() == K::Product ||
                    (f.is_constant() && !leading && !is_plain_integer(f));
  if (wrap)
    print_wrapped(f, out);
  else
    print(f, out);
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case K::Constant: print_rational(e.value(), out); return;
    case K::Parameter: out += e.name(); return;
    case K::Variable: out += var_name(e.var()); return;

    case K::Sum: {
      const auto ops = e.operands();
      if (ops.empty()) {
        out += '0';
        return;
      }
      for (std::size_t i = 0; i < ops.size(); ++i) {
        const Expr& term = ops[i];
        if (i == 0) {
          if (term.kind() == K::Sum)
            print_wrapped(term, out);
          else
            print(term, out);
          continue;
        }
        if (is_negative(term)) {
          out += " - ";
          Expr pos = negated(term);
          if (pos.kind() == K::Sum)
            print_wrapped(pos, out);
          else
            print(pos, out);
        } else {
          out += " + ";
          if (term.kind() == K::Sum)
            print_wrapped(term, out);
          else
            print(term, out);
        }
      }
      return;
    }

    case K::Product: {
      const auto ops = e.operands();
      if (ops.empty()) {
        out += '1';
        return;
      }
      std::size_t i = 0;
      if (ops.size() > 1 && ops[0].is_constant() && ops[0].value() == -1) {
        out += '-';
        i = 1;
      }
      for (bool first = true; i < ops.size(); ++i, first = false) {
        if (!first) out += '*';
        print_factor(ops[i], first, out);
      }
      return;
    }

    case K::IntPower: {
      const Expr& b = e.base();
      const bool atomic = b.kind() == K::Variable || b.kind() == K::Parameter ||
                          b.kind() == K::Call || is_plain_integer(b);
      if (atomic)
        print(b, out);
      else
        print_wrapped(b, out);
      out += '^';
      out += std::to_string(e.exponent());
      return;
    }

    case K::Call:
      out += func_name(e.func());
      out += '(';
      print(e.argument(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

}  // namespace fzk
