#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "fzk/problems.hpp"

namespace fzk {

struct GridSpec {
  std::vector<double> xs, ys, ts;
  std::vector<double> alphas;
  /// Pair xs[i] with ys[i] instead of taking the full product.
  bool diagonal = false;

  void validate() const;
};

struct AlphaValues {
  double alpha;
  double pia;
  double rpsm;
};

struct TableRow {
  double x, y, t;
  std::vector<AlphaValues> values;  // ascending alpha
  std::optional<double> reference;  // present when alpha = 1 is requested

  const AlphaValues* at_alpha(double alpha) const;
  std::optional<double> pia_error() const;
  std::optional<double> rpsm_error() const;
};

/// Both solvers run once; every alpha column reuses the symbolic solution.
/// Rows follow t-major order within each (x, y) pair.
std::vector<TableRow> build_table(const ProblemSpec& spec, int K, const GridSpec& grid,
                                  std::size_t node_limit = kDefaultNodeLimit);

/// Header and one line per row; numbers as %.5e.
void emit_csv(const std::vector<TableRow>& rows, std::ostream& out);

struct SurfaceRange {
  double lo = 0, hi = 1;
  int resolution = 50;
};

/// (x, y, u) triples on a uniform grid; method == nullopt samples the
/// reference solution.
void emit_surface(const ProblemSpec& spec, int K, std::optional<Method> method, double alpha,
                  const SurfaceRange& xr, const SurfaceRange& yr, double t, std::ostream& out,
                  std::size_t node_limit = kDefaultNodeLimit);

/// "%.5e"
std::string format_sci(double v);

}  // namespace fzk
