#pragma once

#include <vector>

#include "fzk/fracseries.hpp"
#include "fzk/problems.hpp"

namespace fzk {

// Residual power series method. f_0 = initial; each further canonical
// coefficient is read off the residual's (0,k) term, where it appears
// linearly.

struct RpsmState {
  ProblemSpec spec;
  std::vector<Expr> coeffs;  // canonical f_0 .. f_k

  int k() const { return static_cast<int>(coeffs.size()) - 1; }
  /// sum f_n t^(n alpha) / Gamma(1 + n alpha)
  FracSeries series() const { return from_canonical(coeffs); }
};

RpsmState rpsm_init(const ProblemSpec& spec);

/// f_(k+1) = -Gamma(1 + k alpha) * [t^(k alpha) coefficient of N(u_k)].
Expr rpsm_next_coefficient(const RpsmState& state);

/// Appends f_(k+1); throws SizeGuardError past node_limit.
RpsmState rpsm_step(const RpsmState& state, std::size_t node_limit = kDefaultNodeLimit);

SolutionSeries rpsm_solve(const ProblemSpec& spec, int K,
                          std::size_t node_limit = kDefaultNodeLimit);

// Perturbation iteration PIA(1,1) with epsilon = 1:
//   u_(n+1) = u_n - int_0^t (D^alpha u_n + N(u_n)).

struct PiaState {
  ProblemSpec spec;
  FracSeries iterate;
  int n = 0;
};

PiaState pia_init(const ProblemSpec& spec);

/// The correction (u_c)_n = -J^1[residual(u_n)], zero integration constant.
FracSeries pia_correction(const PiaState& state);

PiaState pia_iterate(const PiaState& state, std::size_t node_limit = kDefaultNodeLimit);

SolutionSeries pia_solve(const ProblemSpec& spec, int K,
                         std::size_t node_limit = kDefaultNodeLimit);

SolutionSeries solve(Method m, const ProblemSpec& spec, int K,
                     std::size_t node_limit = kDefaultNodeLimit);

}  // namespace fzk
