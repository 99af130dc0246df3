#pragma once

// Closed forms for the (2,2,2) instance with u(x,y,0) = (4/3) rho sinh^2(x+y),
// written out by hand and kept apart from the solver code paths.

#include <array>
#include <utility>
#include <vector>

#include "fzk/expr.hpp"

namespace templates {

/// f_1 = -N(f)
inline const char* const kF1 = "(8/9)*rho^2*(4*sinh(2*(x+y)) - 5*sinh(4*(x+y)))";

/// first PIA iterate f - t N(f), regrouped
inline const char* const kPiaU1 =
    "-(4/9)*rho*(4*t*rho*(cosh(x+y) + 5*cosh(3*(x+y))) - 3*sinh(x+y))*sinh(x+y)";

/// u_t + N(u) for the travelling wave (4/3) rho sinh^2(x+y-rho t)
inline const char* const kRefResidual =
    "(40/9)*rho^2*sinh(4*(x+y-rho*t)) - (44/9)*rho^2*sinh(2*(x+y-rho*t))";

/// -N'(f)[g] for the (2,2,2) operator, written out by the product rule.
inline fzk::Expr linearized_source(const fzk::Expr& f, const fzk::Expr& g) {
  using fzk::Expr;
  auto d = [](const Expr& e, int nx, int ny) { return fzk::differentiate_xy(e, nx, ny); };
  // entry {c, {gx, gy, fx, fy}}: c * d(g, gx, gy) * d(f, fx, fy); gx = -1 swaps
  // the roles so the derivative falls on g: c * f * d(g, fx, fy).
  const std::vector<std::pair<long, std::array<int, 4>>> terms{
      {-8, {0, 0, 1, 0}}, {-1, {0, 2, 1, 0}}, {-8, {1, 0, 0, 0}}, {-1, {1, 0, 0, 2}},
      {-2, {0, 1, 1, 1}}, {-2, {1, 1, 0, 1}}, {-1, {0, 0, 1, 2}}, {-1, {-1, 0, 1, 2}},
      {-3, {1, 0, 2, 0}}, {-3, {2, 0, 1, 0}}, {-1, {0, 0, 3, 0}}, {-1, {-1, 0, 3, 0}}};
  Expr sum;
  for (const auto& [c, o] : terms) {
    Expr piece = o[0] < 0 ? f * d(g, o[2], o[3]) : d(g, o[0], o[1]) * d(f, o[2], o[3]);
    sum = sum + Expr::constant(c) * piece;
  }
  return fzk::simplify(Expr::constant(fzk::Rational(1, 4)) * sum);
}

}  // namespace templates
