#include "poly.hpp"

#include <algorithm>
#include <tuple>

#include "fzk/errors.hpp"

namespace fzk::detail {

namespace {

int cmp_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

AtomPtr variable_atom(Var v) {
  static const AtomPtr atoms[3] = {
      std::make_shared<const Atom>(Atom{AtomKind::Variable, "x", Var::X, {}, {}}),
      std::make_shared<const Atom>(Atom{AtomKind::Variable, "y", Var::Y, {}, {}}),
      std::make_shared<const Atom>(Atom{AtomKind::Variable, "t", Var::T, {}, {}}),
  };
  return atoms[static_cast<int>(v)];
}

AtomPtr symbol_atom(const std::string& name) {
  return std::make_shared<const Atom>(
      Atom{AtomKind::Symbol, name, Var::X, name, {}});
}

AtomPtr gamma_atom(Poly arg) {
  auto p = std::make_shared<const Poly>(std::move(arg));
  std::string key = "gamma(" + to_string(from_poly(*p)) + ")";
  return std::make_shared<const Atom>(
      Atom{AtomKind::Gamma, std::move(key), Var::X, {}, std::move(p)});
}

AtomPtr opaque_atom(Poly base) {
  auto p = std::make_shared<const Poly>(std::move(base));
  std::string key = "(" + to_string(from_poly(*p)) + ")";
  return std::make_shared<const Atom>(
      Atom{AtomKind::Opaque, std::move(key), Var::X, {}, std::move(p)});
}

Poly monomial_poly(Monomial m, const Rational& c = 1) {
  Poly p;
  if (c != 0) p.terms.push_back(Term{std::move(m), c});
  return p;
}

Poly atom_poly(AtomPtr a, long power = 1) {
  Monomial m;
  m.factors.push_back(Factor{std::move(a), power});
  return monomial_poly(std::move(m));
}

Poly exp_poly(const Poly& arg) {
  if (arg.is_zero()) return constant_poly(1);
  Monomial m;
  m.exp_arg = std::make_shared<const Poly>(arg);
  return monomial_poly(std::move(m));
}

bool is_pole(const Rational& z) { return z.get_den() == 1 && z <= 0; }

Rational factorial_of(const Rational& z) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), z.get_num().get_ui() - 1);
  return Rational(r);
}

/// 1/p for a single-term p.
Poly invert_term(const Term& t) {
  Monomial m;
  m.factors.reserve(t.mono.factors.size());
  for (const auto& f : t.mono.factors) m.factors.push_back({f.atom, -f.power});
  if (t.mono.exp_arg)
    m.exp_arg = std::make_shared<const Poly>(scale(*t.mono.exp_arg, -1));
  Rational c = 1 / t.coef;
  c.canonicalize();
  return monomial_poly(std::move(m), c);
}

Rational rational_pow(Rational b, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= b;
  return r;
}

Poly gamma_of(const Poly& arg) {
  if (arg.is_constant()) {
    const Rational v = arg.constant_value();
    if (is_pole(v)) throw DomainError("gamma pole at " + v.get_str());
    if (v.get_den() == 1) return constant_poly(factorial_of(v));
  }
  return atom_poly(gamma_atom(arg));
}

}  // namespace

int compare(const Atom& a, const Atom& b) {
  if (&a == &b) return 0;
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  const int c = a.key.compare(b.key);
  return (c > 0) - (c < 0);
}

int compare(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare(*a.factors[i].atom, *b.factors[i].atom);
    if (c != 0) return c;
    if (a.factors[i].power != b.factors[i].power)
      return a.factors[i].power < b.factors[i].power ? -1 : 1;
  }
  if (a.factors.size() != b.factors.size())
    return a.factors.size() < b.factors.size() ? -1 : 1;
  if (!a.exp_arg || !b.exp_arg) {
    if (!a.exp_arg && !b.exp_arg) return 0;
    return a.exp_arg ? 1 : -1;
  }
  return compare(*a.exp_arg, *b.exp_arg);
}

int compare(const Poly& a, const Poly& b) {
  if (&a == &b) return 0;
  const std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a.terms[i].mono, b.terms[i].mono);
    if (c != 0) return c;
    c = cmp_rational(a.terms[i].coef, b.terms[i].coef);
    if (c != 0) return c;
  }
  if (a.terms.size() == b.terms.size()) return 0;
  return a.terms.size() < b.terms.size() ? -1 : 1;
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const Poly& p, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& t : p.terms) add(t.mono, scale == 1 ? t.coef : Rational(t.coef * scale));
}

Poly PolyBuilder::build() && {
  Poly p;
  p.terms.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (c != 0) p.terms.push_back(Term{m, std::move(c)});
  return p;
}

Poly constant_poly(const Rational& c) { return monomial_poly(Monomial{}, c); }

Poly add(const Poly& a, const Poly& b) {
  Poly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    int c;
    if (i == a.terms.size())
      c = 1;
    else if (j == b.terms.size())
      c = -1;
    else
      c = compare(a.terms[i].mono, b.terms[j].mono);
    if (c < 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c > 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Rational s = a.terms[i].coef + b.terms[j].coef;
      if (s != 0) out.terms.push_back(Term{a.terms[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly scale(const Poly& a, const Rational& c) {
  if (c == 0) return {};
  Poly out = a;
  for (auto& t : out.terms) t.coef *= c;
  return out;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    int c;
    if (i == a.factors.size())
      c = 1;
    else if (j == b.factors.size())
      c = -1;
    else
      c = compare(*a.factors[i].atom, *b.factors[j].atom);
    if (c < 0) {
      m.factors.push_back(a.factors[i++]);
    } else if (c > 0) {
      m.factors.push_back(b.factors[j++]);
    } else {
      const long p = a.factors[i].power + b.factors[j].power;
      if (p != 0) m.factors.push_back(Factor{a.factors[i].atom, p});
      ++i;
      ++j;
    }
  }
  if (a.exp_arg && b.exp_arg) {
    Poly g = add(*a.exp_arg, *b.exp_arg);
    if (!g.is_zero()) m.exp_arg = std::make_shared<const Poly>(std::move(g));
  } else {
    m.exp_arg = a.exp_arg ? a.exp_arg : b.exp_arg;
  }
  return m;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return scale(b, a.constant_value());
  if (b.is_constant()) return scale(a, b.constant_value());
  PolyBuilder acc;
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) acc.add(multiply(s.mono, t.mono), s.coef * t.coef);
  return std::move(acc).build();
}

Poly power(const Poly& a, long k) {
  if (k < 0) {
    if (a.is_zero()) throw DomainError("division by zero");
    if (a.terms.size() == 1) return power(invert_term(a.terms[0]), -k);
    // Non-monomial base: pull out the leading coefficient so the atom is
    // canonical, and keep the primitive part as an opaque factor.
    const Rational lead = a.terms[0].coef;
    Poly primitive = scale(a, 1 / lead);
    Rational c = rational_pow(1 / lead, -k);
    c.canonicalize();
    return scale(atom_poly(opaque_atom(std::move(primitive)), k), c);
  }
  Poly result = constant_poly(1);
  Poly base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

bool depends_on(const Poly& p, Var v) {
  for (const auto& t : p.terms) {
    for (const auto& f : t.mono.factors) {
      const Atom& a = *f.atom;
      if (a.kind == AtomKind::Variable && a.var == v) return true;
      if (a.arg && depends_on(*a.arg, v)) return true;
    }
    if (t.mono.exp_arg && depends_on(*t.mono.exp_arg, v)) return true;
  }
  return false;
}

namespace {

Poly atom_derivative(const Atom& a, Var v) {
  switch (a.kind) {
    case AtomKind::Variable: return a.var == v ? constant_poly(1) : Poly{};
    case AtomKind::Symbol: return {};
    case AtomKind::Gamma:
      if (depends_on(*a.arg, v))
        throw DomainError("cannot differentiate gamma() with respect to " +
                          std::string(var_name(v)));
      return {};
    case AtomKind::Opaque: return derivative(*a.arg, v);
  }
  return {};
}

}  // namespace

Poly derivative(const Poly& p, Var v) {
  PolyBuilder acc;
  for (const auto& t : p.terms) {
    for (std::size_t i = 0; i < t.mono.factors.size(); ++i) {
      const Factor& f = t.mono.factors[i];
      Poly da = atom_derivative(*f.atom, v);
      if (da.is_zero()) continue;
      Monomial rest = t.mono;
      if (f.power == 1)
        rest.factors.erase(rest.factors.begin() + static_cast<long>(i));
      else
        rest.factors[i].power -= 1;
      const Rational c = t.coef * f.power;
      for (const auto& d : da.terms) acc.add(multiply(rest, d.mono), c * d.coef);
    }
    if (t.mono.exp_arg) {
      Poly dg = derivative(*t.mono.exp_arg, v);
      for (const auto& d : dg.terms) acc.add(multiply(t.mono, d.mono), t.coef * d.coef);
    }
  }
  return std::move(acc).build();
}

Poly to_poly(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Constant: return constant_poly(e.value());
    case K::Parameter: return atom_poly(symbol_atom(e.name()));
    case K::Variable: return atom_poly(variable_atom(e.var()));
    case K::Sum: {
      PolyBuilder acc;
      for (const auto& c : e.operands()) acc.add(to_poly(c));
      return std::move(acc).build();
    }
    case K::Product: {
      Poly p = constant_poly(1);
      for (const auto& c : e.operands()) {
        p = multiply(p, to_poly(c));
        if (p.is_zero()) break;
      }
      return p;
    }
    case K::IntPower: {
      const Expr& b = e.base();
      if (e.exponent() < 0 && b.kind() == K::Call && b.func() == Func::Gamma) {
        Poly arg = to_poly(b.argument());
        if (arg.is_constant() && is_pole(arg.constant_value())) return {};
      }
      return power(to_poly(b), e.exponent());
    }
    case K::Call: {
      Poly arg = to_poly(e.argument());
      switch (e.func()) {
        case Func::Exp: return exp_poly(arg);
        case Func::Sinh:
          return scale(add(exp_poly(arg), scale(exp_poly(scale(arg, -1)), -1)),
                       Rational(1, 2));
        case Func::Cosh:
          return scale(add(exp_poly(arg), exp_poly(scale(arg, -1))),
                       Rational(1, 2));
        case Func::Gamma: return gamma_of(arg);
      }
    }
  }
  return {};
}

namespace {

Expr factor_expr(const Factor& f) {
  Expr base;
  switch (f.atom->kind) {
    case AtomKind::Variable: base = Expr::variable(f.atom->var); break;
    case AtomKind::Symbol: base = Expr::parameter(f.atom->name); break;
    case AtomKind::Gamma:
      base = Expr::call(Func::Gamma, from_poly(*f.atom->arg));
      break;
    case AtomKind::Opaque: base = from_poly(*f.atom->arg); break;
  }
  return f.power == 1 ? base : Expr::power(std::move(base), f.power);
}

// One emitted summand: coef * rest * fn(arg).
struct Emitted {
  Monomial rest;
  PolyPtr arg;  // null: no function factor
  int fn;       // 0 cosh, 1 sinh, 2 exp
  Rational coef;
};

bool emitted_less(const Emitted& a, const Emitted& b) {
  int c = compare(a.rest, b.rest);
  if (c != 0) return c < 0;
  if (!a.arg || !b.arg) {
    if (!a.arg && !b.arg) return false;
    return !a.arg;
  }
  c = compare(*a.arg, *b.arg);
  if (c != 0) return c < 0;
  return a.fn < b.fn;
}

}  // namespace

Expr from_poly(const Poly& p) {
  if (p.is_zero()) return Expr();

  // Pair c+ exp(g) with c- exp(-g), g normalized to a positive leading
  // coefficient, and rewrite as (c+ + c-) cosh g + (c+ - c-) sinh g.
  struct Pair {
    Monomial rest;
    PolyPtr arg;
    Rational plus = 0, minus = 0;
  };
  std::vector<Emitted> out;
  std::vector<Pair> pairs;
  for (const auto& t : p.terms) {
    if (!t.mono.exp_arg) {
      out.push_back(Emitted{t.mono, nullptr, 0, t.coef});
      continue;
    }
    const Poly& g = *t.mono.exp_arg;
    const bool positive = sgn(g.terms.front().coef) > 0;
    PolyPtr canon = positive ? t.mono.exp_arg
                             : std::make_shared<const Poly>(scale(g, -1));
    Monomial rest{t.mono.factors, nullptr};
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const Pair& q) {
      return compare(q.rest, rest) == 0 && compare(*q.arg, *canon) == 0;
    });
    if (it == pairs.end()) {
      pairs.push_back(Pair{std::move(rest), canon});
      it = std::prev(pairs.end());
    }
    (positive ? it->plus : it->minus) += t.coef;
  }
  for (auto& q : pairs) {
    if (q.minus == 0) {
      out.push_back(Emitted{q.rest, q.arg, 2, q.plus});
    } else if (q.plus == 0) {
      out.push_back(Emitted{q.rest, std::make_shared<const Poly>(scale(*q.arg, -1)),
                            2, q.minus});
    } else {
      Rational c = q.plus + q.minus;
      Rational s = q.plus - q.minus;
      if (c != 0) out.push_back(Emitted{q.rest, q.arg, 0, c});
      if (s != 0) out.push_back(Emitted{q.rest, q.arg, 1, s});
    }
  }
  std::sort(out.begin(), out.end(), emitted_less);

  std::vector<Expr> summands;
  summands.reserve(out.size());
  for (const auto& em : out) {
    std::vector<Expr> factors;
    factors.reserve(em.rest.factors.size() + 2);
    factors.push_back(Expr::constant(em.coef));
    for (const auto& f : em.rest.factors) factors.push_back(factor_expr(f));
    if (em.arg) {
      static constexpr Func fns[3] = {Func::Cosh, Func::Sinh, Func::Exp};
      factors.push_back(Expr::call(fns[em.fn], from_poly(*em.arg)));
    }
    summands.push_back(normalize(Expr::product(std::move(factors))));
  }
  return normalize(Expr::sum(std::move(summands)));
}

}  // namespace fzk::detail

namespace fzk {

Expr simplify(const Expr& e) { return detail::from_poly(detail::to_poly(e)); }

Expr differentiate(const Expr& e, Var v, int n) {
  if (n < 1) throw DomainError("derivative order must be positive");
  detail::Poly p = detail::to_poly(e);
  for (int i = 0; i < n && !p.is_zero(); ++i) p = detail::derivative(p, v);
  return detail::from_poly(p);
}

Expr differentiate_xy(const Expr& e, int nx, int ny) {
  if (nx < 0 || ny < 0) throw DomainError("derivative order must be non-negative");
  detail::Poly p = detail::to_poly(e);
  for (int i = 0; i < nx && !p.is_zero(); ++i) p = detail::derivative(p, Var::X);
  for (int i = 0; i < ny && !p.is_zero(); ++i) p = detail::derivative(p, Var::Y);
  return detail::from_poly(p);
}

std::vector<std::pair<Expr, Expr>> split_gamma_factors(const Expr& e) {
  using namespace detail;
  Poly p = to_poly(e);
  std::map<Monomial, PolyBuilder, MonomialLess> groups;
  for (const auto& t : p.terms) {
    Monomial token, rest;
    rest.exp_arg = t.mono.exp_arg;
    for (const auto& f : t.mono.factors)
      (f.atom->kind == AtomKind::Gamma ? token : rest).factors.push_back(f);
    groups[token].add(rest, t.coef);
  }
  std::vector<std::pair<Expr, Expr>> out;
  for (auto& [token, acc] : groups)
    out.emplace_back(from_poly(Poly{{Term{token, 1}}}), from_poly(std::move(acc).build()));
  return out;
}

}  // namespace fzk
