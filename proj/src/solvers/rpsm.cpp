#include "fzk/errors.hpp"
#include "fzk/solvers.hpp"

namespace fzk {

RpsmState rpsm_init(const ProblemSpec& spec) {
  spec.validate();
  return RpsmState{spec, {spec.initial}};
}

Expr rpsm_next_coefficient(const RpsmState& state) {
  const int k = state.k();
  if (k < 0) throw DomainError("RPSM state has no coefficients");
  // f_(k+1) enters u at t^((k+1) alpha) and N takes no t-derivatives, so the
  // (0,k) term of N only needs f_0 .. f_k; everything above order k is cut.
  FracSeries u = from_canonical(state.coeffs, Rational(k));
  FracSeries n = spatial_operator(state.spec, u);
  return simplify(-gamma_factor(1, k) * n.coefficient(FracExponent(0, k)));
}

RpsmState rpsm_step(const RpsmState& state, std::size_t node_limit) {
  Expr next = rpsm_next_coefficient(state);
  if (const std::size_t nodes = node_count(next); nodes > node_limit)
    throw SizeGuardError(nodes, node_limit);
  RpsmState out = state;
  out.coeffs.push_back(std::move(next));
  return out;
}

SolutionSeries rpsm_solve(const ProblemSpec& spec, int K, std::size_t node_limit) {
  if (K < 1) throw DomainError("order K must be >= 1");
  RpsmState s = rpsm_init(spec);
  while (s.k() < K) s = rpsm_step(s, node_limit);
  return SolutionSeries{Method::Rpsm, K, s.series(), spec};
}

SolutionSeries solve(Method m, const ProblemSpec& spec, int K, std::size_t node_limit) {
  return m == Method::Pia ? pia_solve(spec, K, node_limit) : rpsm_solve(spec, K, node_limit);
}

}  // namespace fzk
