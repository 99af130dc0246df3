#pragma once

// Immutable symbolic expressions over the spatial variables x, y, the time
// variable t and named parameters. Constants are exact rationals; floating
// point only appears in evaluate().

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fzk {

using Rational = mpq_class;

enum class Var { X, Y, T };

/// sinh, cosh and exp are the user-facing functions. gamma carries the
/// deferred Gamma factors the fractional operators attach to coefficients;
/// its argument is a linear expression in the parameter `alpha`.
enum class Func { Sinh, Cosh, Exp, Gamma };

/// Name of the parameter that stands for the fractional order inside gamma().
inline constexpr std::string_view kAlphaName = "alpha";

/// Symbol name -> value. Variables are bound as "x", "y", "t".
using Bindings = std::map<std::string, double, std::less<>>;

/// Symbol name -> closed sampling interval [lo, hi].
using Domain = std::map<std::string, std::pair<double, double>, std::less<>>;

std::string_view var_name(Var v);
std::string_view func_name(Func f);

class Expr {
 public:
  enum class Kind { Constant, Parameter, Variable, Sum, Product, IntPower, Call };

  /// The constant 0.
  Expr();

  // Raw node builders: no normalization is applied.
  static Expr constant(Rational value);
  static Expr constant(long value) { return constant(Rational(value)); }
  static Expr parameter(std::string name);
  static Expr variable(Var v);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, long exponent);
  static Expr call(Func f, Expr argument);

  Kind kind() const noexcept;
  bool is_constant() const noexcept { return kind() == Kind::Constant; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const Rational& value() const;     // Constant
  const std::string& name() const;   // Parameter
  Var var() const;                   // Variable
  Func func() const;                 // Call
  long exponent() const;             // IntPower
  const Expr& base() const;          // IntPower
  const Expr& argument() const;      // Call
  std::span<const Expr> operands() const;  // all children, in order

  /// Structural equality of trees.
  friend bool operator==(const Expr& a, const Expr& b);

  // The arithmetic operators return normalized (flattened, folded) trees.
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Parses text in the expression grammar. The result is normalized.
/// Unknown identifiers become parameters; only x, y, t are variables.
Expr parse(std::string_view text);

/// Prints in the expression grammar; parse(to_string(e)) == e for
/// normalized e.
std::string to_string(const Expr& e);

/// Structural cleanup only: flattens nested sums and products, folds numeric
/// constants into a single leading constant, removes trivial powers.
Expr normalize(const Expr& e);

/// Full canonical form: hyperbolic functions are rewritten to exponentials,
/// everything is expanded and collected, and exponential pairs are regrouped
/// into sinh/cosh. Idempotent.
Expr simplify(const Expr& e);

/// Exact n-th partial derivative, simplified.
Expr differentiate(const Expr& e, Var v, int n = 1);

/// Mixed partial derivative d^(nx+ny)/dx^nx dy^ny, simplified.
Expr differentiate_xy(const Expr& e, int nx, int ny);

double evaluate(const Expr& e, const Bindings& b);

/// True iff |e1 - e2| <= tol * (1 + |e1|) at `samples` Halton points of the
/// domain box. Every free symbol of e1 and e2 must appear in the domain.
bool numeric_equal(const Expr& e1, const Expr& e2, const Domain& domain,
                   double tol, int samples = 32);

std::size_t node_count(const Expr& e);
bool depends_on(const Expr& e, Var v);
bool depends_on(const Expr& e, std::string_view parameter);

/// Replaces every occurrence of variable v by `with` and normalizes.
Expr substitute(const Expr& e, Var v, const Expr& with);

/// Splits a coefficient into its deferred-Gamma groups: the result holds
/// (token, rest) pairs with e == sum(token * rest), where each token is a
/// product of gamma() powers (or 1). Groups are ordered by token.
std::vector<std::pair<Expr, Expr>> split_gamma_factors(const Expr& e);

/// The gamma() factor for argument a + b*alpha; integer arguments fold to a
/// factorial.
Expr gamma_factor(const Rational& a, const Rational& b);

}  // namespace fzk
