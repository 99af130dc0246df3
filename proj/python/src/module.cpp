#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fzk/errors.hpp"
#include "fzk/fracseries.hpp"
#include "fzk/gamma.hpp"
#include "fzk/report.hpp"
#include "fzk/solvers.hpp"

namespace py = pybind11;

namespace {

fzk::Method method_from(const std::string& name) {
  if (name == "pia") return fzk::Method::Pia;
  if (name == "rpsm") return fzk::Method::Rpsm;
  throw py::value_error("method must be 'pia' or 'rpsm'");
}

fzk::Bindings point(const fzk::ProblemSpec& spec, double x, double y, double t) {
  return spec.bind({{"x", x}, {"y", y}, {"t", t}});
}

py::list terms_of(const fzk::FracSeries& s) {
  py::list out;
  for (const auto& [e, c] : s.terms())
    out.append(py::make_tuple(e.a.get_str(), e.b.get_str(), fzk::to_string(c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symbolic series solutions of the time-fractional Zakharov-Kuznetsov equation.";

  auto base = py::register_exception<fzk::Error>(m, "Error");
  py::register_exception<fzk::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<fzk::UnboundSymbolError>(m, "UnboundSymbolError", base.ptr());
  py::register_exception<fzk::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<fzk::ProblemError>(m, "ProblemError", base.ptr());
  py::register_exception<fzk::SizeGuardError>(m, "SizeGuardError", base.ptr());
  py::register_exception<fzk::IoError>(m, "IoError", base.ptr());

  py::class_<fzk::Expr>(m, "Expr")
      .def("__str__", [](const fzk::Expr& e) { return fzk::to_string(e); })
      .def("__repr__", [](const fzk::Expr& e) { return "Expr('" + fzk::to_string(e) + "')"; })
      .def("__eq__", [](const fzk::Expr& a, const fzk::Expr& b) { return a == b; })
      .def("evaluate", [](const fzk::Expr& e, const fzk::Bindings& b) { return fzk::evaluate(e, b); })
      .def("simplify", [](const fzk::Expr& e) { return fzk::simplify(e); })
      .def("diff", [](const fzk::Expr& e, int nx, int ny) { return fzk::differentiate_xy(e, nx, ny); },
           py::arg("nx"), py::arg("ny") = 0)
      .def_property_readonly("node_count", [](const fzk::Expr& e) { return fzk::node_count(e); });
  m.def("parse", [](const std::string& s) { return fzk::parse(s); });

  py::class_<fzk::ProblemSpec>(m, "Problem")
      .def_readonly("alpha", &fzk::ProblemSpec::alpha)
      .def_readonly("initial", &fzk::ProblemSpec::initial)
      .def_readonly("reference", &fzk::ProblemSpec::reference)
      .def_readonly("params", &fzk::ProblemSpec::params)
      .def_property_readonly("powers", [](const fzk::ProblemSpec& s) {
        return py::make_tuple(s.p, s.q, s.r);
      })
      .def("to_json", [](const fzk::ProblemSpec& s) { return fzk::to_json(s).dump(); })
      .def("reference_at", [](const fzk::ProblemSpec& s, double x, double y, double t) {
        return fzk::reference_eval(s, {{"x", x}, {"y", y}, {"t", t}});
      });
  m.def("fzk222", &fzk::make_fzk222, py::arg("rho") = 0.001);
  m.def("load_problem", [](const std::string& path) { return fzk::load_problem(path); });
  m.def("problem_from_json", [](const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw fzk::ProblemError(e.what());
    }
    return fzk::problem_from_json(j);
  });

  py::class_<fzk::SolutionSeries>(m, "Solution")
      .def_property_readonly("method", [](const fzk::SolutionSeries& s) {
        return std::string(fzk::method_name(s.method));
      })
      .def_readonly("order", &fzk::SolutionSeries::order)
      .def("__call__",
           [](const fzk::SolutionSeries& s, double x, double y, double t, double alpha) {
             return fzk::eval_series(s.series, point(s.spec, x, y, t), alpha);
           },
           py::arg("x"), py::arg("y"), py::arg("t"), py::arg("alpha") = 1.0)
      .def("residual",
           [](const fzk::SolutionSeries& s, double x, double y, double t, double alpha) {
             return fzk::eval_series(fzk::residual(s.spec, s.series), point(s.spec, x, y, t), alpha);
           },
           py::arg("x"), py::arg("y"), py::arg("t"), py::arg("alpha") = 1.0)
      .def("terms", [](const fzk::SolutionSeries& s) { return terms_of(s.series); })
      .def("to_json", [](const fzk::SolutionSeries& s) { return fzk::to_json(s.series).dump(); });

  m.def("solve",
        [](const fzk::ProblemSpec& spec, const std::string& method, int order, std::size_t limit) {
          return fzk::solve(method_from(method), spec, order, limit);
        },
        py::arg("problem"), py::arg("method"), py::arg("order") = 3,
        py::arg("node_limit") = fzk::kDefaultNodeLimit);

  m.def("table_csv",
        [](const fzk::ProblemSpec& spec, int order, std::vector<double> xs, std::vector<double> ys,
           std::vector<double> ts, std::vector<double> alphas, bool diagonal) {
          fzk::GridSpec g{std::move(xs), std::move(ys), std::move(ts), std::move(alphas), diagonal};
          std::ostringstream out;
          fzk::emit_csv(fzk::build_table(spec, order, g), out);
          return out.str();
        },
        py::arg("problem"), py::arg("order"), py::arg("xs"), py::arg("ys"), py::arg("ts"),
        py::arg("alphas"), py::arg("diagonal") = false);

  m.def("gamma", [](double x) { return fzk::gamma(x); });
}
