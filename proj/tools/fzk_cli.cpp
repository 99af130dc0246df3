// Command-line front end: solve, table, coeffs, surface, residual.
// Exit codes: 0 success, 2 parse/problem error, 3 size guard, 4 I/O.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "fzk/errors.hpp"
#include "fzk/report.hpp"
#include "fzk/solvers.hpp"

namespace {

using namespace fzk;
using nlohmann::json;

enum Exit { kOk = 0, kProblem = 2, kSizeGuard = 3, kIo = 4 };

struct Options {
  std::string problem;
  std::string method = "rpsm";
  int order = 3;
  double alpha = 1.0;
  std::string at;
  std::string format = "json";
  std::string alphas = "0.67,0.75,1.0";
  std::string grid = "x=0.1,0.6,0.9;y=0.1,0.6,0.9;t=0.2,0.3,0.4";
  bool diag = false;
  std::string out = "-";
  double t = 0.0;
  std::string range = "0:1:50";
  std::string yrange;
  std::size_t node_limit = kDefaultNodeLimit;
};

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ProblemError("bad number '" + item + "' in " + what);
    }
  }
  if (out.empty()) throw ProblemError(what + " is empty");
  return out;
}

Bindings parse_point(const std::string& text) {
  auto v = parse_list(text, "--at");
  if (v.size() != 3) throw ProblemError("--at expects x,y,t");
  return {{"x", v[0]}, {"y", v[1]}, {"t", v[2]}};
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ProblemError("grid part '" + part + "' lacks '='");
    std::string key = part.substr(0, eq);
    key.erase(0, key.find_first_not_of(' '));
    key.erase(key.find_last_not_of(' ') + 1);
    auto values = parse_list(part.substr(eq + 1), "grid " + key);
    if (key == "x")
      g.xs = values;
    else if (key == "y")
      g.ys = values;
    else if (key == "t")
      g.ts = values;
    else
      throw ProblemError("unknown grid axis '" + key + "'");
  }
  return g;
}

SurfaceRange parse_range(const std::string& text) {
  SurfaceRange r;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.resolution, &tail) != 3)
    throw ProblemError("range must look like lo:hi:n, got '" + text + "'");
  return r;
}

Method parse_method(const std::string& m) {
  if (m == "pia") return Method::Pia;
  if (m == "rpsm") return Method::Rpsm;
  throw ProblemError("unknown method '" + m + "'");
}

// Output sink: stdout for "-", otherwise a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ProblemSpec load(const Options& o) {
  ProblemSpec spec = load_problem(o.problem);
  spec.alpha = o.alpha;
  spec.validate();
  return spec;
}

void cmd_solve(const Options& o) {
  ProblemSpec spec = load(o);
  const Method m = parse_method(o.method);
  const Bindings pt = parse_point(o.at);
  SolutionSeries sol = solve(m, spec, o.order, o.node_limit);
  const Bindings b = spec.bind(pt);
  const double u = eval_series(sol.series, b, o.alpha);
  Sink sink(o.out);
  auto& out = sink.stream();
  if (o.format == "csv") {
    out << "method,order,alpha,x,y,t,value";
    if (spec.reference) out << ",reference,abs_error";
    out << '\n' << method_name(m) << ',' << o.order << ',' << o.alpha << ',' << format_sci(pt.at("x"))
        << ',' << format_sci(pt.at("y")) << ',' << format_sci(pt.at("t")) << ',' << format_sci(u);
    if (spec.reference) {
      const double ref = reference_eval(spec, pt);
      out << ',' << format_sci(ref) << ',' << format_sci(std::abs(u - ref));
    }
    out << '\n';
  } else if (o.format == "json") {
    json j{{"method", method_name(m)}, {"order", o.order}, {"alpha", o.alpha},
           {"x", pt.at("x")},          {"y", pt.at("y")},   {"t", pt.at("t")},
           {"value", u}};
    if (spec.reference) {
      const double ref = reference_eval(spec, pt);
      j["reference"] = ref;
      j["abs_error"] = std::abs(u - ref);
    }
    out << j.dump(2) << '\n';
  } else {
    throw ProblemError("unknown format '" + o.format + "'");
  }
  sink.close();
}

void cmd_table(const Options& o) {
  ProblemSpec spec = load(o);
  GridSpec grid = parse_grid(o.grid);
  grid.alphas = parse_list(o.alphas, "--alphas");
  grid.diagonal = o.diag;
  auto rows = build_table(spec, o.order, grid, o.node_limit);
  Sink sink(o.out);
  emit_csv(rows, sink.stream());
  sink.close();
}

void cmd_coeffs(const Options& o) {
  ProblemSpec spec = load(o);
  const Method m = parse_method(o.method);
  json j{{"method", method_name(m)}, {"order", o.order}};
  if (m == Method::Rpsm) {
    if (o.order < 1) throw DomainError("order K must be >= 1");
    RpsmState s = rpsm_init(spec);
    while (s.k() < o.order) s = rpsm_step(s, o.node_limit);
    json fs = json::array();
    FracSeries series = s.series();
    for (int n = 0; n <= s.k(); ++n) {
      const Expr raw = series.coefficient(FracExponent(0, n));
      json gamma = json::array();
      for (const auto& [token, rest] : split_gamma_factors(raw))
        gamma.push_back({{"token", to_string(token)}, {"rest", to_string(rest)}});
      fs.push_back({{"n", n},
                    {"f", to_string(s.coeffs[n])},
                    {"raw", to_string(raw)},
                    {"gamma", std::move(gamma)}});
    }
    j["coefficients"] = std::move(fs);
    j["series"] = to_json(series);
  } else {
    if (o.order < 1) throw DomainError("order K must be >= 1");
    PiaState s = pia_init(spec);
    json its = json::array();
    its.push_back({{"n", 0}, {"series", to_json(s.iterate)}});
    while (s.n < o.order) {
      s = pia_iterate(s, o.node_limit);
      its.push_back({{"n", s.n}, {"series", to_json(s.iterate)}});
    }
    j["iterates"] = std::move(its);
  }
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  sink.close();
}

void cmd_surface(const Options& o) {
  ProblemSpec spec = load(o);
  std::optional<Method> m;
  if (o.method != "reference") m = parse_method(o.method);
  const SurfaceRange xr = parse_range(o.range);
  const SurfaceRange yr = o.yrange.empty() ? xr : parse_range(o.yrange);
  if (o.t < 0) throw DomainError("--t must be >= 0");
  Sink sink(o.out);
  emit_surface(spec, o.order, m, o.alpha, xr, yr, o.t, sink.stream(), o.node_limit);
  sink.close();
}

void cmd_residual(const Options& o) {
  ProblemSpec spec = load(o);
  const Bindings pt = parse_point(o.at);
  const Bindings b = spec.bind(pt);
  double value;
  if (o.method == "reference") {
    if (o.alpha != 1.0)
      throw ProblemError("the reference residual is defined for alpha = 1 only");
    value = evaluate(reference_residual(spec), b);
  } else {
    SolutionSeries sol = solve(parse_method(o.method), spec, o.order, o.node_limit);
    value = eval_series(residual(spec, sol.series), b, o.alpha);
  }
  Sink sink(o.out);
  json j{{"method", o.method}, {"order", o.order}, {"alpha", o.alpha}, {"x", pt.at("x")},
         {"y", pt.at("y")},    {"t", pt.at("t")},   {"residual", value}};
  sink.stream() << j.dump(2) << '\n';
  sink.close();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series solutions of the time-fractional Zakharov-Kuznetsov equation"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, const char* methods) {
    sub->add_option("--problem", o.problem, "problem file (JSON)")->required();
    if (methods) sub->add_option("--method", o.method, methods)->capture_default_str();
    sub->add_option("--order", o.order, "solver order K")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--node-limit", o.node_limit, "expression size guard")->capture_default_str();
  };

  auto* solve_cmd = app.add_subcommand("solve", "evaluate a solution at one point");
  common(solve_cmd, "pia | rpsm");
  solve_cmd->add_option("--alpha", o.alpha, "fractional order")->capture_default_str();
  solve_cmd->add_option("--at", o.at, "x,y,t")->required();
  solve_cmd->add_option("--format", o.format, "json | csv")->capture_default_str();
  solve_cmd->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();

  auto* table_cmd = app.add_subcommand("table", "comparison table as CSV");
  common(table_cmd, nullptr);
  table_cmd->add_option("--alphas", o.alphas, "comma-separated orders")->capture_default_str();
  table_cmd->add_option("--grid", o.grid, "x=..;y=..;t=..")->capture_default_str();
  table_cmd->add_flag("--diag", o.diag, "pair x and y values instead of their product");
  table_cmd->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();

  auto* coeffs_cmd = app.add_subcommand("coeffs", "series coefficients as JSON");
  common(coeffs_cmd, "pia | rpsm");
  coeffs_cmd->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();

  auto* surface_cmd = app.add_subcommand("surface", "(x, y, u) grid data as CSV");
  common(surface_cmd, "pia | rpsm | reference");
  surface_cmd->add_option("--alpha", o.alpha, "fractional order")->capture_default_str();
  surface_cmd->add_option("--t", o.t, "time")->capture_default_str();
  surface_cmd->add_option("--range", o.range, "lo:hi:n for x (and y)")->capture_default_str();
  surface_cmd->add_option("--yrange", o.yrange, "lo:hi:n for y");
  surface_cmd->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();

  auto* residual_cmd = app.add_subcommand("residual", "evaluate the residual at one point");
  common(residual_cmd, "pia | rpsm | reference");
  residual_cmd->add_option("--alpha", o.alpha, "fractional order")->capture_default_str();
  residual_cmd->add_option("--at", o.at, "x,y,t")->required();
  residual_cmd->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kProblem;
  }

  try {
    if (solve_cmd->parsed()) cmd_solve(o);
    else if (table_cmd->parsed()) cmd_table(o);
    else if (coeffs_cmd->parsed()) cmd_coeffs(o);
    else if (surface_cmd->parsed()) cmd_surface(o);
    else if (residual_cmd->parsed()) cmd_residual(o);
    return kOk;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fzk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kProblem;
  }
}
