#include "fzk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fzk/errors.hpp"
#include "fzk/solvers.hpp"

namespace fzk {

namespace {

std::string format_alpha(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a);
  return buf;
}

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("write failed");
}

std::vector<double> grid_points(const SurfaceRange& r) {
  if (r.resolution < 2) throw DomainError("surface resolution must be >= 2");
  std::vector<double> v;
  for (int i = 0; i < r.resolution; ++i)
    v.push_back(r.lo + (r.hi - r.lo) * i / (r.resolution - 1));
  return v;
}

}  // namespace

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

void GridSpec::validate() const {
  if (xs.empty() || ys.empty() || ts.empty() || alphas.empty())
    throw DomainError("grid axes must be non-empty");
  if (diagonal && xs.size() != ys.size())
    throw DomainError("diagonal grid needs as many x as y values");
  for (double t : ts)
    if (t < 0) throw DomainError("grid times must be >= 0");
  for (double a : alphas)
    if (!(a > 0 && a <= 1)) throw DomainError("grid alphas must lie in (0, 1]");
}

const AlphaValues* TableRow::at_alpha(double alpha) const {
  for (const auto& v : values)
    if (v.alpha == alpha) return &v;
  return nullptr;
}

std::optional<double> TableRow::pia_error() const {
  const AlphaValues* v = at_alpha(1.0);
  if (!v || !reference) return std::nullopt;
  return std::abs(v->pia - *reference);
}

std::optional<double> TableRow::rpsm_error() const {
  const AlphaValues* v = at_alpha(1.0);
  if (!v || !reference) return std::nullopt;
  return std::abs(v->rpsm - *reference);
}

std::vector<TableRow> build_table(const ProblemSpec& spec, int K, const GridSpec& grid,
                                  std::size_t node_limit) {
  grid.validate();
  const SolutionSeries pia = pia_solve(spec, K, node_limit);
  const SolutionSeries rpsm = rpsm_solve(spec, K, node_limit);
  std::vector<double> alphas = grid.alphas;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  const bool with_reference =
      spec.reference && std::find(alphas.begin(), alphas.end(), 1.0) != alphas.end();

  std::vector<std::pair<double, double>> xy;
  if (grid.diagonal) {
    for (std::size_t i = 0; i < grid.xs.size(); ++i) xy.emplace_back(grid.xs[i], grid.ys[i]);
  } else {
    for (double x : grid.xs)
      for (double y : grid.ys) xy.emplace_back(x, y);
  }

  std::vector<TableRow> rows;
  for (auto [x, y] : xy)
    for (double t : grid.ts) {
      TableRow row{x, y, t, {}, std::nullopt};
      const Bindings b = spec.bind({{"x", x}, {"y", y}, {"t", t}});
      for (double a : alphas)
        row.values.push_back({a, eval_series(pia.series, b, a), eval_series(rpsm.series, b, a)});
      if (with_reference) row.reference = reference_eval(spec, b);
      rows.push_back(std::move(row));
    }
  return rows;
}

void emit_csv(const std::vector<TableRow>& rows, std::ostream& out) {
  if (rows.empty()) throw DomainError("no table rows to emit");
  const TableRow& first = rows.front();
  out << "x,y,t";
  for (const auto& v : first.values)
    out << ",pia_a" << format_alpha(v.alpha) << ",rpsm_a" << format_alpha(v.alpha);
  const bool errors = first.reference.has_value();
  if (errors) out << ",reference,pia_error,rpsm_error";
  out << '\n';
  for (const auto& row : rows) {
    out << format_sci(row.x) << ',' << format_sci(row.y) << ',' << format_sci(row.t);
    for (const auto& v : row.values) out << ',' << format_sci(v.pia) << ',' << format_sci(v.rpsm);
    if (errors)
      out << ',' << format_sci(*row.reference) << ',' << format_sci(*row.pia_error()) << ','
          << format_sci(*row.rpsm_error());
    out << '\n';
  }
  out.flush();
  check_stream(out);
}

void emit_surface(const ProblemSpec& spec, int K, std::optional<Method> method, double alpha,
                  const SurfaceRange& xr, const SurfaceRange& yr, double t, std::ostream& out,
                  std::size_t node_limit) {
  const std::vector<double> xs = grid_points(xr), ys = grid_points(yr);
  std::optional<SolutionSeries> sol;
  if (method) sol = solve(*method, spec, K, node_limit);
  else if (!spec.reference) throw ProblemError("problem has no reference solution");
  out << "x,y,u\n";
  for (double x : xs)
    for (double y : ys) {
      const Bindings b = spec.bind({{"x", x}, {"y", y}, {"t", t}});
      const double u = sol ? eval_series(sol->series, b, alpha) : reference_eval(spec, b);
      out << format_sci(x) << ',' << format_sci(y) << ',' << format_sci(u) << '\n';
    }
  out.flush();
  check_stream(out);
}

}  // namespace fzk
