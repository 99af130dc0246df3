#include "fzk/errors.hpp"
#include "fzk/solvers.hpp"

namespace fzk {

// With F = eps D^alpha u + u_t - eps u_t + eps N(u) one has F_(u_t) = 1 and
// F_u = 0, so the linear correction equation of PIA(1,1) reduces to
// (u_c)_t = -(D^alpha u_n + N(u_n)); the integration constant vanishes
// because every correction is zero at t = 0.

PiaState pia_init(const ProblemSpec& spec) {
  spec.validate();
  return PiaState{spec, FracSeries::constant(spec.initial), 0};
}

FracSeries pia_correction(const PiaState& state) {
  FracSeries res = residual(state.spec, state.iterate);
  return linear_combine({{-1, rl_integral(res, FracExponent::integer(1))}});
}

PiaState pia_iterate(const PiaState& state, std::size_t node_limit) {
  FracSeries next = linear_combine({{1, state.iterate}, {1, pia_correction(state)}});
  if (const std::size_t nodes = next.node_count(); nodes > node_limit)
    throw SizeGuardError(nodes, node_limit);
  return PiaState{state.spec, std::move(next), state.n + 1};
}

SolutionSeries pia_solve(const ProblemSpec& spec, int K, std::size_t node_limit) {
  if (K < 1) throw DomainError("order K must be >= 1");
  PiaState s = pia_init(spec);
  while (s.n < K) s = pia_iterate(s, node_limit);
  return SolutionSeries{Method::Pia, K, std::move(s.iterate), spec};
}

}  // namespace fzk
