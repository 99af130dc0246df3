#pragma once

// Independent numerical oracles shared by the unit and acceptance tests.
// Nothing here calls the symbolic machinery beyond plain evaluation.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "fzk/expr.hpp"

namespace oracle {

using Fn2 = std::function<double(double, double)>;

/// Mixed partial d^(nx+ny) f / dx^nx dy^ny by nested central differences.
inline double central_diff(const Fn2& f, double x, double y, int nx, int ny, double h = 1e-4) {
  if (nx > 0)
    return (central_diff(f, x + h, y, nx - 1, ny, h) - central_diff(f, x - h, y, nx - 1, ny, h)) /
           (2 * h);
  if (ny > 0)
    return (central_diff(f, x, y + h, nx, ny - 1, h) - central_diff(f, x, y - h, nx, ny - 1, h)) /
           (2 * h);
  return f(x, y);
}

/// One-dimensional third derivative with a five-point stencil (O(h^2)).
inline double third_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
}

inline Fn2 as_fn2(const fzk::Expr& e, fzk::Bindings b) {
  return [e, b](double x, double y) mutable {
    b["x"] = x;
    b["y"] = y;
    return fzk::evaluate(e, b);
  };
}

struct Point {
  double x, y;
};

inline std::vector<Point> random_points(int n, double lo, double hi, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back({d(gen), d(gen)});
  return out;
}

inline double rel_err(double got, double want) {
  return want == 0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

/// Max relative deviation of e1 from e2 over random points, measured against
/// the largest |e2| seen, which keeps zero crossings from dominating.
inline double max_rel_diff(const fzk::Expr& e1, const fzk::Expr& e2, fzk::Bindings b, int n,
                           double lo, double hi, unsigned seed) {
  double worst = 0, scale = 0;
  std::vector<double> diffs;
  for (const auto& p : random_points(n, lo, hi, seed)) {
    b["x"] = p.x;
    b["y"] = p.y;
    const double v1 = fzk::evaluate(e1, b), v2 = fzk::evaluate(e2, b);
    diffs.push_back(std::abs(v1 - v2));
    scale = std::max(scale, std::abs(v2));
  }
  for (double d : diffs) worst = std::max(worst, scale == 0 ? d : d / scale);
  return worst;
}

}  // namespace oracle

namespace oracle {

/// Tanh-sinh quadrature of g(u, 1-u) over [0,1]. The complement is passed
/// separately so endpoint singularities like (1-u)^(-3/4) keep full precision.
inline double tanh_sinh_01(const std::function<double(double, double)>& g, double h = 1.0 / 64) {
  const double half_pi = std::acos(-1.0) / 2;
  double sum = 0;
  for (int k = -static_cast<int>(6 / h); k <= static_cast<int>(6 / h); ++k) {
    const double tau = k * h;
    const double s = 2 * half_pi * std::sinh(tau);
    if (std::abs(s) > 700) continue;
    const double u = 1 / (1 + std::exp(-s));
    const double v = 1 / (1 + std::exp(s));
    if (u == 0 || v == 0) continue;
    const double w = 2 * half_pi * std::cosh(tau) * u * v;
    if (w < 1e-300) continue;
    sum += w * g(u, v);
  }
  return sum * h;
}

/// J^beta t^lambda at t by quadrature: t^(lambda+beta)/Gamma(beta) *
/// int_0^1 (1-u)^(beta-1) u^lambda du, with std::tgamma as the Gamma.
inline double rl_power_quadrature(double lambda, double beta, double t) {
  const double integral = tanh_sinh_01(
      [&](double u, double v) { return std::pow(v, beta - 1) * std::pow(u, lambda); });
  return std::pow(t, lambda + beta) * integral / std::tgamma(beta);
}

}  // namespace oracle
