#include "fzk/problems.hpp"

#include <fstream>

#include "fzk/errors.hpp"

namespace fzk {

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) return Rational(v.get<double>());
  if (v.is_string()) {
    Expr e = simplify(parse(v.get<std::string>()));
    if (!e.is_constant()) throw ProblemError(std::string("'") + key + "' must be a rational number");
    return e.value();
  }
  throw ProblemError(std::string("'") + key + "' must be a rational string or number");
}

std::string rational_text(const Rational& r) { return r.get_str(); }

FracSeries term(const FracSeries& u, int power, int nx, int ny) {
  return spatial_diff(series_int_pow(u, power), nx, ny);
}

}  // namespace

void ProblemSpec::validate() const {
  if (!(alpha > 0 && alpha <= 1)) throw ProblemError("alpha must lie in (0, 1]");
  if (p < 1 || q < 1 || r < 1) throw ProblemError("powers p, q, r must be >= 1");
  if (depends_on(initial, Var::T)) throw ProblemError("initial condition depends on t");
  for (const auto& [name, value] : params) {
    if (name == "x" || name == "y" || name == "t" || name == kAlphaName)
      throw ProblemError("parameter name '" + name + "' is reserved");
  }
  if (depends_on(initial, kAlphaName)) throw ProblemError("initial condition uses the reserved name alpha");
}

Bindings ProblemSpec::bind(const Bindings& b) const {
  Bindings out = params;
  for (const auto& [k, v] : b) out[k] = v;
  return out;
}

ProblemSpec make_fzk222(double rho) {
  if (rho == 0) throw ProblemError("rho must be non-zero");
  ProblemSpec s;
  s.alpha = 1.0;
  s.a = 1;
  s.b3 = Rational(1, 8);
  s.bm = Rational(1, 8);
  s.p = s.q = s.r = 2;
  s.initial = parse("(4/3)*rho*sinh(x+y)^2");
  s.params = {{"rho", rho}};
  s.reference = parse("(4/3)*rho*sinh(x+y-rho*t)^2");
  return s;
}

ProblemSpec problem_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ProblemError("problem file must hold a JSON object");
    ProblemSpec s;
    s.alpha = j.value("alpha", 1.0);
    s.a = rational_field(j, "a");
    s.b3 = rational_field(j, "b3");
    s.bm = rational_field(j, "bm");
    s.p = j.at("p").get<int>();
    s.q = j.at("q").get<int>();
    s.r = j.at("r").get<int>();
    s.initial = parse(j.at("initial").get<std::string>());
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items()) s.params[k] = v.get<double>();
    if (j.contains("reference") && !j.at("reference").is_null())
      s.reference = parse(j.at("reference").get<std::string>());
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ProblemError(std::string("malformed problem file: ") + e.what());
  }
}

nlohmann::json to_json(const ProblemSpec& spec) {
  nlohmann::json j{{"alpha", spec.alpha},
                   {"a", rational_text(spec.a)},
                   {"b3", rational_text(spec.b3)},
                   {"bm", rational_text(spec.bm)},
                   {"p", spec.p},
                   {"q", spec.q},
                   {"r", spec.r},
                   {"initial", to_string(spec.initial)}};
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : spec.params) j["params"][k] = v;
  if (spec.reference) j["reference"] = to_string(*spec.reference);
  return j;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open problem file '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ProblemError("problem file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return problem_from_json(j);
}

FracSeries spatial_operator(const ProblemSpec& spec, const FracSeries& u) {
  std::vector<std::pair<Rational, FracSeries>> parts;
  if (spec.a != 0) parts.emplace_back(spec.a, term(u, spec.p, 1, 0));
  if (spec.b3 != 0) parts.emplace_back(spec.b3, term(u, spec.q, 3, 0));
  if (spec.bm != 0) parts.emplace_back(spec.bm, term(u, spec.r, 1, 2));
  if (parts.empty()) return FracSeries(u.max_order());
  return linear_combine(parts);
}

FracSeries residual(const ProblemSpec& spec, const FracSeries& u) {
  return linear_combine({{1, caputo(u)}, {1, spatial_operator(spec, u)}});
}

double reference_eval(const ProblemSpec& spec, const Bindings& b) {
  if (!spec.reference) throw ProblemError("problem has no reference solution");
  return evaluate(*spec.reference, spec.bind(b));
}

Expr reference_residual(const ProblemSpec& spec) {
  if (!spec.reference) throw ProblemError("problem has no reference solution");
  const Expr& u = *spec.reference;
  auto pow = [&](int k) { return normalize(Expr::power(u, k)); };
  Expr out = differentiate(u, Var::T);
  if (spec.a != 0) out = out + Expr::constant(spec.a) * differentiate(pow(spec.p), Var::X);
  if (spec.b3 != 0) out = out + Expr::constant(spec.b3) * differentiate(pow(spec.q), Var::X, 3);
  if (spec.bm != 0) out = out + Expr::constant(spec.bm) * differentiate_xy(pow(spec.r), 1, 2);
  return simplify(out);
}

std::string_view method_name(Method m) { return m == Method::Pia ? "pia" : "rpsm"; }

}  // namespace fzk
