#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "fzk/errors.hpp"
#include "fzk/problems.hpp"
#include "fzk/solvers.hpp"
#include "oracles.hpp"
#include "templates.hpp"

using namespace fzk;

namespace {

const char* const kNf = "(8/9)*rho^2*(5*sinh(4*(x+y)) - 4*sinh(2*(x+y)))";
using templates::kRefResidual;

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

nlohmann::json base_problem() {
  return nlohmann::json::parse(R"({"alpha": 1.0, "a": "1", "b3": "1/8", "bm": "1/8",
    "p": 2, "q": 2, "r": 2, "initial": "(4/3)*rho*sinh(x+y)^2", "params": {"rho": 0.001},
    "reference": "(4/3)*rho*sinh(x+y-rho*t)^2"})");
}

}  // namespace

TEST_SUITE("problems") {

TEST_CASE("fzk222 instance") {
  ProblemSpec s = make_fzk222(0.001);
  CHECK(s.a == 1);
  CHECK(s.b3 == Rational(1, 8));
  CHECK(s.bm == Rational(1, 8));
  CHECK((s.p == 2 && s.q == 2 && s.r == 2));
  CHECK(s.reference.has_value());
  CHECK_THROWS_AS(make_fzk222(0), ProblemError);
  const Bindings b = s.bind({{"x", 0.1}, {"y", 0.1}});
  CHECK(evaluate(s.initial, b) == doctest::Approx(5.404825e-5).epsilon(1e-6));
}

TEST_CASE("reference values") {
  ProblemSpec s = make_fzk222(0.001);
  CHECK(oracle::rel_err(reference_eval(s, {{"x", 0.1}, {"y", 0.1}, {"t", 0.2}}), 5.39388e-5) < 1e-5);
  CHECK(oracle::rel_err(reference_eval(s, {{"x", 0.9}, {"y", 0.9}, {"t", 0.4}}), 1.15321e-2) < 1e-5);
  CHECK(oracle::rel_err(reference_eval(s, {{"x", 0.1}, {"y", 0.1}, {"t", 0.3}}), 5.38841e-5) < 1e-5);
  CHECK(oracle::rel_err(reference_eval(s, {{"x", 0.6}, {"y", 0.6}, {"t", 0.3}}), 3.03578e-3) < 1e-5);
  for (const auto& p : oracle::random_points(8, -1, 1, 2)) {
    const Bindings b{{"x", p.x}, {"y", p.y}, {"t", 0.0}};
    CHECK(reference_eval(s, b) == evaluate(s.initial, s.bind(b)));
  }
  ProblemSpec none = s;
  none.reference.reset();
  CHECK_THROWS_AS(reference_eval(none, {}), ProblemError);
}

TEST_CASE("spatial operator") {
  ProblemSpec s = make_fzk222(0.001);
  FracSeries n = spatial_operator(s, FracSeries::constant(s.initial));
  REQUIRE(n.size() == 1);
  CHECK(oracle::max_rel_diff(n.coefficient({}), parse(kNf), s.params, 16, 0, 1, 1) < 1e-13);
  CHECK(n.coefficient({}) == simplify(parse(kNf)));
  CHECK(spatial_operator(s, FracSeries()).empty());
  CHECK(spatial_operator(s, FracSeries::constant(parse("c"))).empty());
}

TEST_CASE("spatial operator against finite differences") {
  ProblemSpec s = make_fzk222(0.001);
  FracSeries n = spatial_operator(s, FracSeries::constant(s.initial));
  Expr sq = s.initial * s.initial;
  auto g = oracle::as_fn2(sq, s.params);
  for (const auto& p : oracle::random_points(8, 0, 1, 4)) {
    const double fd = oracle::central_diff(g, p.x, p.y, 1, 0, 1e-4) +
                      0.125 * oracle::central_diff(g, p.x, p.y, 3, 0, 5e-4) +
                      0.125 * oracle::central_diff(g, p.x, p.y, 1, 2, 5e-4);
    const double got = evaluate(n.coefficient({}), s.bind({{"x", p.x}, {"y", p.y}}));
    CHECK(std::abs(got - fd) <= 1e-5 * std::abs(got) + 1e-15);
  }
}

TEST_CASE("residual") {
  ProblemSpec s = make_fzk222(0.001);
  FracSeries u0 = FracSeries::constant(s.initial);
  CHECK(residual(s, u0).terms() == spatial_operator(s, u0).terms());
  FracSeries u1 = rpsm_solve(s, 1).series;
  FracSeries r1 = residual(s, u1);
  CHECK(r1.coefficient({}).is_zero());
  CHECK_FALSE(r1.empty());
}

TEST_CASE("residual is caputo plus N termwise") {
  ProblemSpec s = make_fzk222(0.001);
  FracSeries u = rpsm_solve(s, 2).series;
  FracSeries v = pia_solve(s, 1).series;
  FracSeries lhs = linear_combine({{1, residual(s, u)}, {-1, residual(s, v)}});
  FracSeries rhs = linear_combine({{1, caputo(linear_combine({{1, u}, {-1, v}}))},
                                   {1, spatial_operator(s, u)},
                                   {-1, spatial_operator(s, v)}});
  CHECK(linear_combine({{1, lhs}, {-1, rhs}}).empty());
}

TEST_CASE("reference residual at integer order") {
  ProblemSpec s = make_fzk222(0.001);
  Expr r = reference_residual(s);
  Expr want = parse(kRefResidual);
  Domain box{{"x", {0, 1}}, {"y", {0, 1}}, {"t", {0, 0.5}}, {"rho", {0.001, 0.001}}};
  CHECK(numeric_equal(r, want, box, 1e-12));
  for (double t : {0.0, 0.2, 0.4}) {
    Bindings b = s.params;
    b["t"] = t;
    CHECK(oracle::max_rel_diff(r, want, b, 16, 0, 1, 9) < 1e-10);
  }
  CHECK_FALSE(simplify(r).is_zero());
  // finite-difference oracle of u_t + N(u) on the reference
  Bindings b0 = s.params;
  auto u = [&](double x, double y, double t) {
    Bindings b = b0;
    b["x"] = x;
    b["y"] = y;
    b["t"] = t;
    return evaluate(*s.reference, b);
  };
  for (const auto& p : oracle::random_points(6, 0, 1, 3)) {
    const double t = 0.3, ht = 1e-3;
    const double ut = (u(p.x, p.y, t + ht) - u(p.x, p.y, t - ht)) / (2 * ht);
    auto sq = [&](double x, double y) { return std::pow(u(x, y, t), 2); };
    const double n = oracle::central_diff(sq, p.x, p.y, 1, 0, 1e-4) +
                     0.125 * oracle::central_diff(sq, p.x, p.y, 3, 0, 5e-4) +
                     0.125 * oracle::central_diff(sq, p.x, p.y, 1, 2, 5e-4);
    Bindings b = b0;
    b["x"] = p.x;
    b["y"] = p.y;
    b["t"] = t;
    const double got = evaluate(r, b);
    CHECK(std::abs(got - (ut + n)) <= 1e-4 * std::abs(got));
  }
}

TEST_CASE("problem file") {
  ProblemSpec s = problem_from_json(base_problem());
  ProblemSpec m = make_fzk222(0.001);
  CHECK(s.initial == m.initial);
  CHECK(*s.reference == *m.reference);
  CHECK(s.b3 == m.b3);
  CHECK(s.params == m.params);
  ProblemSpec back = problem_from_json(to_json(s));
  CHECK(back.initial == s.initial);
  CHECK(back.bm == s.bm);

  auto p = write_temp("fzk_problem_ok.json", base_problem().dump());
  CHECK(load_problem(p).p == 2);
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), IoError);
  CHECK_THROWS_AS(load_problem(write_temp("fzk_problem_bad.json", "{ not json")), ProblemError);
}

TEST_CASE("problem file validation") {
  auto with = [](const char* key, nlohmann::json v) {
    auto j = base_problem();
    j[key] = v;
    return j;
  };
  CHECK_THROWS_AS(problem_from_json(with("p", 0)), ProblemError);
  CHECK_THROWS_AS(problem_from_json(with("alpha", 1.5)), ProblemError);
  CHECK_THROWS_AS(problem_from_json(with("alpha", 0.0)), ProblemError);
  CHECK_THROWS_AS(problem_from_json(with("initial", "sinh(x+t)")), ProblemError);
  CHECK_THROWS_AS(problem_from_json(with("initial", "sinh(x+")), ParseError);
  CHECK_THROWS_AS(problem_from_json(with("b3", "x")), ProblemError);
  CHECK_THROWS_AS(problem_from_json(with("params", {{"x", 1.0}})), ProblemError);
  CHECK(problem_from_json(with("b3", 0.5)).b3 == Rational(1, 2));
  auto j = base_problem();
  j.erase("a");
  CHECK_THROWS_AS(problem_from_json(j), ProblemError);
  CHECK_THROWS_AS(problem_from_json(nlohmann::json::array()), ProblemError);
}

}
