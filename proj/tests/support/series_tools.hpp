#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "fzk/fracseries.hpp"

namespace oracle {

/// Coefficient values of s at one (x, y) point, summed over exponents that
/// coincide at the given alpha. Keyed by the exact exponent value.
inline std::map<fzk::Rational, double> collapse(const fzk::FracSeries& s, const fzk::Bindings& b,
                                                const fzk::Rational& alpha) {
  std::map<fzk::Rational, double> out;
  for (const auto& [e, c] : s.terms()) {
    fzk::Rational v = e.a + e.b * alpha;
    v.canonicalize();
    out[v] += fzk::eval_coefficient(c, b, alpha.get_d());
  }
  return out;
}

/// Smallest exponent value whose collapsed coefficient exceeds rel_tol times
/// the largest coefficient at any of the sample bindings; -1 when there is
/// none. The relative floor absorbs cancellation round-off.
inline fzk::Rational lowest_live_order(const fzk::FracSeries& s, const std::vector<fzk::Bindings>& pts,
                                       const fzk::Rational& alpha, double rel_tol) {
  fzk::Rational best = -1;
  for (const auto& b : pts) {
    const auto c = collapse(s, b, alpha);
    double scale = 0;
    for (const auto& [v, x] : c) scale = std::max(scale, std::abs(x));
    for (const auto& [v, x] : c)
      if (std::abs(x) > rel_tol * scale && (best < 0 || v < best)) best = v;
  }
  return best;
}

}  // namespace oracle
