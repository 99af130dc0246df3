#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fzk/errors.hpp"
#include "fzk/report.hpp"
#include "fzk/solvers.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fzk;

namespace {

GridSpec diagonal_grid() {
  GridSpec g;
  g.xs = g.ys = {0.1, 0.6, 0.9};
  g.ts = {0.2, 0.3, 0.4};
  g.alphas = {1.0, 0.67, 0.75};
  g.diagonal = true;
  return g;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(std::stod(f));
  return out;
}

const std::vector<TableRow>& diagonal_rows() {
  static const auto rows = build_table(make_fzk222(0.001), 3, diagonal_grid());
  return rows;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("table rows") {
  const auto& rows = diagonal_rows();
  REQUIRE(rows.size() == 9);
  const TableRow& r0 = rows[0];
  CHECK((r0.x == 0.1 && r0.y == 0.1 && r0.t == 0.2));
  REQUIRE(r0.values.size() == 3);
  CHECK(r0.values[0].alpha == 0.67);
  CHECK(r0.values[2].alpha == 1.0);
  CHECK(oracle::rel_err(r0.at_alpha(1)->pia, 5.35536e-5) < 2e-5);
  CHECK(oracle::rel_err(r0.at_alpha(1)->rpsm, 5.35536e-5) < 2e-5);
  CHECK(oracle::rel_err(*r0.reference, 5.39388e-5) < 1e-5);
  CHECK(oracle::rel_err(*r0.pia_error(), 3.85217e-7) < 1e-3);
  CHECK(oracle::rel_err(*r0.rpsm_error(), 3.85217e-7) < 1e-3);

  const TableRow& r4 = rows[4];
  CHECK((r4.x == 0.6 && r4.t == 0.3));
  CHECK(oracle::rel_err(r4.at_alpha(1)->pia, 2.96717e-3) < 2e-5);
  CHECK(oracle::rel_err(r4.at_alpha(1)->rpsm, 2.96715e-3) < 2e-5);
  CHECK(oracle::rel_err(*r4.reference, 3.03578e-3) < 1e-5);

  const TableRow& r8 = rows[8];
  CHECK(oracle::rel_err(r8.at_alpha(0.67)->pia, 1.02777e-2) < 1e-3);
  CHECK(oracle::rel_err(r8.at_alpha(0.67)->rpsm, 9.60606e-3) < 1e-3);
  CHECK(r8.at_alpha(0.5) == nullptr);
}

TEST_CASE("grid shape and validation") {
  GridSpec g = diagonal_grid();
  g.diagonal = false;
  g.alphas = {0.5, 0.5};
  const auto rows = build_table(make_fzk222(0.001), 1, g);
  CHECK(rows.size() == 27);
  CHECK(rows[0].values.size() == 1);
  CHECK_FALSE(rows[0].reference.has_value());
  CHECK_FALSE(rows[0].pia_error().has_value());
  CHECK((rows[1].y == 0.1 && rows[1].t == 0.3));
  CHECK(rows[3].y == 0.6);

  GridSpec bad = diagonal_grid();
  bad.ys = {0.1};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = diagonal_grid();
  bad.alphas = {1.5};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = diagonal_grid();
  bad.ts = {-0.1};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = diagonal_grid();
  bad.xs.clear();
  CHECK_THROWS_AS(build_table(make_fzk222(0.001), 1, bad), DomainError);
}

TEST_CASE("csv emission") {
  std::ostringstream one;
  emit_csv({diagonal_rows()[0]}, one);
  const auto l = lines(one.str());
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "x,y,t,pia_a0.67,rpsm_a0.67,pia_a0.75,rpsm_a0.75,pia_a1,rpsm_a1,reference,pia_error,"
                "rpsm_error");
  CHECK(l[1].rfind("1.00000e-01,1.00000e-01,2.00000e-01,", 0) == 0);
  std::ostringstream none;
  CHECK_THROWS_AS(emit_csv({}, none), DomainError);
  std::ostringstream closed;
  closed.setstate(std::ios::badbit);
  CHECK_THROWS_AS(emit_csv({diagonal_rows()[0]}, closed), IoError);
}

TEST_CASE("csv round trip and recomputable errors") {
  std::ostringstream out;
  emit_csv(diagonal_rows(), out);
  const auto l = lines(out.str());
  REQUIRE(l.size() == 10);
  for (std::size_t i = 0; i < 9; ++i) {
    const TableRow& row = diagonal_rows()[i];
    const auto f = fields(l[i + 1]);
    REQUIRE(f.size() == 12);
    const std::vector<double> want{row.x, row.y, row.t,
                                   row.values[0].pia, row.values[0].rpsm,
                                   row.values[1].pia, row.values[1].rpsm,
                                   row.values[2].pia, row.values[2].rpsm,
                                   *row.reference, *row.pia_error(), *row.rpsm_error()};
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(oracle::rel_err(f[k], want[k]) <= 5e-6);
    // printed errors follow from the printed values up to their rounding
    const double ulp = 5e-6 * f[9];
    CHECK(std::abs(f[10] - std::abs(f[7] - f[9])) <= 2 * ulp + 5e-6 * f[10]);
    CHECK(std::abs(f[11] - std::abs(f[8] - f[9])) <= 2 * ulp + 5e-6 * f[11]);
    CHECK(*row.pia_error() == std::abs(row.values[2].pia - *row.reference));
  }
}

TEST_CASE("deterministic output") {
  std::ostringstream a, b;
  emit_csv(build_table(make_fzk222(0.001), 3, diagonal_grid()), a);
  emit_csv(build_table(make_fzk222(0.001), 3, diagonal_grid()), b);
  CHECK(a.str() == b.str());
}

TEST_CASE("surfaces") {
  ProblemSpec s = make_fzk222(0.001);
  SurfaceRange r{0, 1, 2};
  std::ostringstream out;
  emit_surface(s, 1, Method::Rpsm, 1.0, r, r, 0.2, out);
  const auto l = lines(out.str());
  REQUIRE(l.size() == 5);
  CHECK(l[0] == "x,y,u");

  std::ostringstream ref;
  SurfaceRange fine{-0.5, 1, 4};
  emit_surface(s, 1, std::nullopt, 1.0, fine, fine, 0.0, ref);
  const auto rl = lines(ref.str());
  REQUIRE(rl.size() == 17);
  for (std::size_t i = 1; i < rl.size(); ++i) {
    const auto f = fields(rl[i]);
    const double u0 = evaluate(s.initial, s.bind({{"x", f[0]}, {"y", f[1]}}));
    CHECK(rl[i].substr(rl[i].rfind(',') + 1) == format_sci(u0));
  }

  CHECK_THROWS_AS(emit_surface(s, 1, Method::Pia, 1, {0, 1, 1}, r, 0.2, out), DomainError);
  s.reference.reset();
  CHECK_THROWS_AS(emit_surface(s, 1, std::nullopt, 1, r, r, 0.2, out), ProblemError);
}

TEST_CASE("PIA and RPSM surfaces differ by the extra PIA orders") {
  ProblemSpec s = make_fzk222(0.001);
  FracSeries pia = pia_solve(s, 3).series, rpsm = rpsm_solve(s, 3).series;
  FracSeries tail;
  for (const auto& [e, c] : pia.terms())
    if (e.order() > 3) tail.add(e, c);
  double worst = 0;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      const Bindings b = s.bind({{"x", 0.1 * i}, {"y", 0.1 * j}, {"t", 0.2}});
      const double diff = eval_series(pia, b, 1) - eval_series(rpsm, b, 1);
      const double want = eval_series(tail, b, 1);
      CHECK(std::abs(diff - want) <= 1e-9 * std::abs(eval_series(rpsm, b, 1)));
      worst = std::max(worst, std::abs(diff));
    }
  // the tail is far below the values near the origin but not on the whole
  // unit square, where sinh(4(x+y)) makes it reach the 1e-5 range
  MESSAGE("max |PIA - RPSM| on [0,1]^2 at t=0.2: ", worst);
  const Bindings b = s.bind({{"x", 0.1}, {"y", 0.1}, {"t", 0.2}});
  CHECK(std::abs(eval_series(pia, b, 1) - eval_series(rpsm, b, 1)) < 5e-7);
}

TEST_CASE("scientific format") {
  CHECK(format_sci(5.35536e-5) == "5.35536e-05");
  CHECK(format_sci(0) == "0.00000e+00");
  CHECK(format_sci(-1.5) == "-1.50000e+00");
}

}
