#pragma once

// The operator family
//   D_t^alpha u + a (u^p)_x + b3 (u^q)_xxx + bm (u^r)_xyy = 0
// with an initial condition u(x, y, 0) = f(x, y).

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "fzk/expr.hpp"
#include "fzk/fracseries.hpp"

namespace fzk {

struct ProblemSpec {
  double alpha = 1.0;
  Rational a = 1;
  Rational b3 = 0;
  Rational bm = 0;
  int p = 1;
  int q = 1;
  int r = 1;
  Expr initial;
  Bindings params;
  std::optional<Expr> reference;

  /// Throws ProblemError when an invariant is violated.
  void validate() const;

  /// params plus the given bindings (the latter win).
  Bindings bind(const Bindings& b) const;
};

/// The FZK(2,2,2) instance with u(x,y,0) = (4/3) rho sinh^2(x+y) and the
/// travelling-wave reference (4/3) rho sinh^2(x+y-rho t). rho stays symbolic
/// in the expressions and is bound through params.
ProblemSpec make_fzk222(double rho);

ProblemSpec problem_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProblemSpec& spec);
/// Throws IoError when the file cannot be read, ProblemError/ParseError on content.
ProblemSpec load_problem(const std::filesystem::path& path);

/// N(u) = a (u^p)_x + b3 (u^q)_xxx + bm (u^r)_xyy, termwise in t.
FracSeries spatial_operator(const ProblemSpec& spec, const FracSeries& u);

/// caputo(u, alpha) + N(u).
FracSeries residual(const ProblemSpec& spec, const FracSeries& u);

/// The reference solution at the bindings (params added). Throws
/// ProblemError when the spec has no reference.
double reference_eval(const ProblemSpec& spec, const Bindings& b);

/// u_t + N(u) applied to the reference expression: the integer-order
/// (alpha = 1) residual of the reference, simplified.
Expr reference_residual(const ProblemSpec& spec);

enum class Method { Pia, Rpsm };
std::string_view method_name(Method m);

struct SolutionSeries {
  Method method;
  int order;
  FracSeries series;
  ProblemSpec spec;
};

/// Node budget for intermediate coefficients; beyond it the solvers raise
/// SizeGuardError.
inline constexpr std::size_t kDefaultNodeLimit = 200000;

}  // namespace fzk
