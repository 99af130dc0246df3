#include "fzk/expr.hpp"

#include <cassert>

#include "fzk/errors.hpp"

namespace fzk {

struct Expr::Node {
  Kind kind = Kind::Constant;
  Rational value;
  std::string name;
  Var var = Var::X;
  Func func = Func::Exp;
  long exponent = 0;
  std::vector<Expr> ops;
};

namespace {

Rational factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Rational rational_pow(const Rational& base, long k) {
  if (base == 0) {
    if (k < 0) throw DomainError("division by zero");
    return k == 0 ? Rational(1) : Rational(0);
  }
  mpz_class num, den;
  const unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), m);
  Rational r = k < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

bool is_pole(const Rational& z) { return z.get_den() == 1 && z <= 0; }

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::X: return "x";
    case Var::Y: return "y";
    case Var::T: return "t";
  }
  return "?";
}

std::string_view func_name(Func f) {
  switch (f) {
    case Func::Sinh: return "sinh";
    case Func::Cosh: return "cosh";
    case Func::Exp: return "exp";
    case Func::Gamma: return "gamma";
  }
  return "?";
}

Expr::Expr() {
  static const auto zero = std::make_shared<const Node>();
  node_ = zero;
}
Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  value.canonicalize();
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::parameter(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Parameter;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->var = v;
  return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->ops = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->ops = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, long exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::IntPower;
  n->exponent = exponent;
  n->ops.push_back(std::move(base));
  return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr argument) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->func = f;
  n->ops.push_back(std::move(argument));
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

bool Expr::is_zero() const noexcept {
  return node_->kind == Kind::Constant && node_->value == 0;
}

bool Expr::is_one() const noexcept {
  return node_->kind == Kind::Constant && node_->value == 1;
}

const Rational& Expr::value() const {
  assert(kind() == Kind::Constant);
  return node_->value;
}

const std::string& Expr::name() const {
  assert(kind() == Kind::Parameter);
  return node_->name;
}

Var Expr::var() const {
  assert(kind() == Kind::Variable);
  return node_->var;
}

Func Expr::func() const {
  assert(kind() == Kind::Call);
  return node_->func;
}

long Expr::exponent() const {
  assert(kind() == Kind::IntPower);
  return node_->exponent;
}

const Expr& Expr::base() const {
  assert(kind() == Kind::IntPower);
  return node_->ops.front();
}

const Expr& Expr::argument() const {
  assert(kind() == Kind::Call);
  return node_->ops.front();
}

std::span<const Expr> Expr::operands() const { return node_->ops; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Expr::Kind::Constant: return x.value == y.value;
    case Expr::Kind::Parameter: return x.name == y.name;
    case Expr::Kind::Variable: return x.var == y.var;
    case Expr::Kind::IntPower:
      if (x.exponent != y.exponent) return false;
      break;
    case Expr::Kind::Call:
      if (x.func != y.func) return false;
      break;
    default: break;
  }
  if (x.ops.size() != y.ops.size()) return false;
  for (std::size_t i = 0; i < x.ops.size(); ++i)
    if (!(x.ops[i] == y.ops[i])) return false;
  return true;
}

Expr normalize(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Constant:
    case K::Parameter:
    case K::Variable:
      return e;

    case K::Sum: {
      Rational c = 0;
      std::vector<Expr> out;
      auto take = [&](const Expr& t) {
        if (t.is_constant())
          c += t.value();
        else
          out.push_back(t);
      };
      for (const auto& child : e.operands()) {
        Expr n = normalize(child);
        if (n.kind() == K::Sum)
          for (const auto& t : n.operands()) take(t);
        else
          take(n);
      }
      if (c != 0) out.insert(out.begin(), Expr::constant(c));
      if (out.empty()) return Expr();
      if (out.size() == 1) return out.front();
      return Expr::sum(std::move(out));
    }

    case K::Product: {
      Rational c = 1;
      std::vector<Expr> out;
      auto take = [&](const Expr& f) {
        if (f.is_constant())
          c *= f.value();
        else
          out.push_back(f);
      };
      for (const auto& child : e.operands()) {
        Expr n = normalize(child);
        if (n.kind() == K::Product)
          for (const auto& f : n.operands()) take(f);
        else
          take(n);
      }
      if (c == 0) return Expr();
      if (out.empty()) return Expr::constant(c);
      if (c == 1 && out.size() == 1) return out.front();
      if (c != 1) out.insert(out.begin(), Expr::constant(c));
      return Expr::product(std::move(out));
    }

    case K::IntPower: {
      const long k = e.exponent();
      // 1/gamma at a pole is an exact zero.
      if (k < 0 && e.base().kind() == K::Call &&
          e.base().func() == Func::Gamma) {
        Expr arg = normalize(e.base().argument());
        if (arg.is_constant() && is_pole(arg.value())) return Expr();
      }
      Expr b = normalize(e.base());
      if (k == 0) return Expr::constant(1);
      if (b.is_constant()) return Expr::constant(rational_pow(b.value(), k));
      if (k == 1) return b;
      if (b.kind() == K::IntPower)
        return normalize(Expr::power(b.base(), b.exponent() * k));
      return Expr::power(std::move(b), k);
    }

    case K::Call: {
      Expr a = normalize(e.argument());
      if (a.is_constant()) {
        const Rational& v = a.value();
        switch (e.func()) {
          case Func::Sinh:
            if (v == 0) return Expr();
            break;
          case Func::Cosh:
          case Func::Exp:
            if (v == 0) return Expr::constant(1);
            break;
          case Func::Gamma:
            if (is_pole(v))
              throw DomainError("gamma pole at " + v.get_str());
            if (v.get_den() == 1)
              return Expr::constant(factorial(v.get_num().get_ui() - 1));
            break;
        }
      }
      return Expr::call(e.func(), std::move(a));
    }
  }
  return e;
}

Expr operator+(const Expr& a, const Expr& b) {
  return normalize(Expr::sum({a, b}));
}

Expr operator-(const Expr& a) {
  return normalize(Expr::product({Expr::constant(-1), a}));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  return normalize(Expr::product({a, b}));
}

Expr operator/(const Expr& a, const Expr& b) {
  return normalize(Expr::product({a, Expr::power(b, -1)}));
}

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (const auto& c : e.operands()) n += node_count(c);
  return n;
}

namespace {

template <class Pred>
bool any_node(const Expr& e, const Pred& pred) {
  if (pred(e)) return true;
  switch (e.kind()) {
    case Expr::Kind::Sum:
    case Expr::Kind::Product:
      for (const auto& c : e.operands())
        if (any_node(c, pred)) return true;
      return false;
    case Expr::Kind::IntPower: return any_node(e.base(), pred);
    case Expr::Kind::Call: return any_node(e.argument(), pred);
    default: return false;
  }
}

}  // namespace

bool depends_on(const Expr& e, Var v) {
  return any_node(e, [v](const Expr& n) {
    return n.kind() == Expr::Kind::Variable && n.var() == v;
  });
}

bool depends_on(const Expr& e, std::string_view parameter) {
  return any_node(e, [parameter](const Expr& n) {
    return n.kind() == Expr::Kind::Parameter && n.name() == parameter;
  });
}

Expr substitute(const Expr& e, Var v, const Expr& with) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Variable: return e.var() == v ? with : e;
    case K::Sum:
    case K::Product: {
      std::vector<Expr> ops;
      ops.reserve(e.operands().size());
      for (const auto& c : e.operands()) ops.push_back(substitute(c, v, with));
      return normalize(e.kind() == K::Sum ? Expr::sum(std::move(ops))
                                          : Expr::product(std::move(ops)));
    }
    case K::IntPower:
      return normalize(Expr::power(substitute(e.base(), v, with), e.exponent()));
    case K::Call:
      return normalize(Expr::call(e.func(), substitute(e.argument(), v, with)));
    default: return e;
  }
}

Expr gamma_factor(const Rational& a, const Rational& b) {
  return normalize(Expr::call(
      Func::Gamma,
      Expr::sum({Expr::constant(a),
                 Expr::product({Expr::constant(b),
                                Expr::parameter(std::string(kAlphaName))})})));
}

}  // namespace fzk
