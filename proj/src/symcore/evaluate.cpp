#include <cmath>
#include <set>

#include "fzk/errors.hpp"
#include "fzk/expr.hpp"
#include "fzk/gamma.hpp"

namespace fzk {

namespace {

using K = Expr::Kind;

double lookup(const Bindings& b, std::string_view name) {
  auto it = b.find(name);
  if (it == b.end()) throw UnboundSymbolError(std::string(name));
  return it->second;
}

double eval(const Expr& e, const Bindings& b) {
  switch (e.kind()) {
    case K::Constant: return e.value().get_d();
    case K::Parameter: return lookup(b, e.name());
    case K::Variable: return lookup(b, var_name(e.var()));
    case K::Sum: {
      double s = 0;
      for (const auto& c : e.operands()) s += eval(c, b);
      return s;
    }
    case K::Product: {
      double p = 1;
      for (const auto& c : e.operands()) p *= eval(c, b);
      return p;
    }
    case K::IntPower: {
      const Expr& base = e.base();
      const long k = e.exponent();
      // 1/gamma is entire, so negative powers go through rgamma.
      if (k < 0 && base.kind() == K::Call && base.func() == Func::Gamma)
        return std::pow(rgamma(eval(base.argument(), b)), double(-k));
      return std::pow(eval(base, b), double(k));
    }
    case K::Call: {
      const double a = eval(e.argument(), b);
      switch (e.func()) {
        case Func::Sinh: return std::sinh(a);
        case Func::Cosh: return std::cosh(a);
        case Func::Exp: return std::exp(a);
        case Func::Gamma: return gamma(a);
      }
    }
  }
  return 0;
}

void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == K::Parameter) out.insert(e.name());
  if (e.kind() == K::Variable) out.insert(std::string(var_name(e.var())));
  for (const auto& c : e.operands()) collect_symbols(c, out);
}

double halton(int index, int base) {
  double f = 1, r = 0;
  for (int i = index; i > 0; i /= base) {
    f /= base;
    r += f * (i % base);
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

}  // namespace

double evaluate(const Expr& e, const Bindings& b) { return eval(e, b); }

bool numeric_equal(const Expr& e1, const Expr& e2, const Domain& domain,
                   double tol, int samples) {
  std::set<std::string> symbols;
  collect_symbols(e1, symbols);
  collect_symbols(e2, symbols);
  for (const auto& s : symbols)
    if (!domain.contains(s)) throw UnboundSymbolError(s);
  if (domain.size() > std::size(kPrimes))
    throw DomainError("numeric_equal: too many sampled symbols");

  Bindings b;
  for (int i = 1; i <= samples; ++i) {
    int dim = 0;
    for (const auto& [name, box] : domain) {
      const double u = halton(i, kPrimes[dim++]);
      b[name] = box.first + u * (box.second - box.first);
    }
    const double v1 = eval(e1, b);
    const double v2 = eval(e2, b);
    if (!(std::abs(v1 - v2) <= tol * (1 + std::abs(v1)))) return false;
  }
  return true;
}

}  // namespace fzk
