#include "fzk/fracseries.hpp"

#include <cmath>

#include "fzk/errors.hpp"

namespace fzk {

namespace {

Expr linear_in_alpha(const Rational& a, const Rational& b) {
  return normalize(Expr::sum(
      {Expr::constant(a),
       Expr::product({Expr::constant(b), Expr::parameter(std::string(kAlphaName))})}));
}

// 1/Gamma(a + b*alpha); an exact zero at integer poles.
Expr rgamma_factor(const Rational& a, const Rational& b) {
  return normalize(Expr::power(Expr::call(Func::Gamma, linear_in_alpha(a, b)), -1));
}

// Gamma(l+1)/Gamma(l+1+shift), the weight of both power rules.
Expr gamma_ratio(const FracExponent& l, const FracExponent& shift) {
  const Rational a1 = l.a + 1;
  return gamma_factor(a1, l.b) * rgamma_factor(a1 + shift.a, l.b + shift.b);
}

void check_same_truncation(const FracSeries& x, const FracSeries& y) {
  if (x.max_order() != y.max_order())
    throw DomainError("series with different max_order cannot be combined");
}

nlohmann::json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad rational '" + j.get<std::string>() + "'", 0);
    r.canonicalize();
    return r;
  }
  throw ParseError("expected integer or rational string", 0);
}

}  // namespace

std::string to_string(const FracExponent& e) {
  return "(" + e.a.get_str() + "," + e.b.get_str() + ")";
}

FracSeries FracSeries::constant(const Expr& c, std::optional<Rational> max_order) {
  FracSeries s(std::move(max_order));
  s.add({}, c);
  return s;
}

void FracSeries::add(const FracExponent& e, const Expr& c) {
  if (!keeps(e) || c.is_zero()) return;
  if (!e.admissible())
    throw DomainError("exponent " + to_string(e) + " is negative for some alpha in (0,1]");
  if (depends_on(c, Var::T)) throw DomainError("series coefficient depends on t");
  auto it = terms_.find(e);
  Expr sum = simplify(it == terms_.end() ? c : it->second + c);
  if (sum.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(e, std::move(sum));
  } else {
    it->second = std::move(sum);
  }
}

Expr FracSeries::coefficient(const FracExponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Expr() : it->second;
}

std::size_t FracSeries::node_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n += fzk::node_count(c);
  return n;
}

FracSeries linear_combine(const std::vector<std::pair<Rational, FracSeries>>& parts) {
  if (parts.empty()) return FracSeries();
  FracSeries out(parts.front().second.max_order());
  for (const auto& [scale, s] : parts) {
    check_same_truncation(parts.front().second, s);
    if (scale == 0) continue;
    for (const auto& [e, c] : s.terms()) out.add(e, Expr::constant(scale) * c);
  }
  return out;
}

FracSeries series_mul(const FracSeries& s1, const FracSeries& s2) {
  std::optional<Rational> m = s1.max_order();
  if (s2.max_order() && (!m || *s2.max_order() < *m)) m = s2.max_order();
  // Collect products per exponent so each coefficient is simplified once.
  std::map<FracExponent, std::vector<Expr>> acc;
  for (const auto& [e1, c1] : s1.terms())
    for (const auto& [e2, c2] : s2.terms()) {
      FracExponent e = e1 + e2;
      if (!m || e.order() <= *m) acc[e].push_back(Expr::product({c1, c2}));
    }
  FracSeries out(m);
  for (auto& [e, prods] : acc) out.add(e, Expr::sum(std::move(prods)));
  return out;
}

FracSeries series_int_pow(const FracSeries& s, int p) {
  if (p < 1) throw DomainError("series power must be >= 1");
  FracSeries out = s;
  for (int i = 1; i < p; ++i) out = series_mul(out, s);
  return out;
}

FracSeries caputo(const FracSeries& s, const FracExponent& nu) {
  if (!(nu.a >= 0 && nu.order() > 0 && nu.a <= 1 && nu.order() <= 1))
    throw DomainError("Caputo order " + to_string(nu) + " must lie in (0,1] for every alpha");
  FracSeries out(s.max_order());
  for (const auto& [e, c] : s.terms()) {
    if (e.is_zero()) continue;
    const FracExponent shifted = e - nu;
    if (!shifted.admissible())
      throw DomainError("Caputo derivative of t^" + to_string(e) + " leaves the admissible lattice");
    out.add(shifted, gamma_ratio(e, FracExponent{} - nu) * c);
  }
  return out;
}

FracSeries rl_integral(const FracSeries& s, const FracExponent& beta) {
  if (!(beta.a >= 0 && beta.order() > 0))
    throw DomainError("integral order " + to_string(beta) + " must be positive");
  FracSeries out(s.max_order());
  for (const auto& [e, c] : s.terms()) out.add(e + beta, gamma_ratio(e, beta) * c);
  return out;
}

FracSeries spatial_diff(const FracSeries& s, int order_x, int order_y) {
  if (order_x == 0 && order_y == 0) return s;
  FracSeries out(s.max_order());
  for (const auto& [e, c] : s.terms()) out.add(e, differentiate_xy(c, order_x, order_y));
  return out;
}

double eval_coefficient(const Expr& c, const Bindings& b, double alpha) {
  Bindings full = b;
  full[std::string(kAlphaName)] = alpha;
  return evaluate(c, full);
}

double eval_series(const FracSeries& s, const Bindings& b, double alpha) {
  if (s.empty()) return 0.0;
  auto it = b.find("t");
  if (it == b.end()) throw UnboundSymbolError("t");
  const double t = it->second;
  if (t < 0) throw DomainError("series evaluated at negative t");
  Bindings full = b;
  full[std::string(kAlphaName)] = alpha;
  double sum = 0;
  for (const auto& [e, c] : s.terms()) {
    const double w = evaluate(c, full);
    if (w != 0) sum += w * std::pow(t, e.value(alpha));
  }
  return sum;
}

Expr canonical_coefficient(const FracSeries& s, int n) {
  return simplify(gamma_factor(1, n) * s.coefficient(FracExponent(0, n)));
}

FracSeries from_canonical(const std::vector<Expr>& fs, std::optional<Rational> max_order) {
  FracSeries out(std::move(max_order));
  for (std::size_t n = 0; n < fs.size(); ++n) {
    const long k = static_cast<long>(n);
    out.add(FracExponent(0, k), rgamma_factor(1, k) * fs[n]);
  }
  return out;
}

nlohmann::json to_json(const FracSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) {
    nlohmann::json gamma = nlohmann::json::array();
    for (const auto& [token, rest] : split_gamma_factors(c))
      gamma.push_back({{"token", to_string(token)}, {"rest", to_string(rest)}});
    terms.push_back({{"a", rational_json(e.a)},
                     {"b", rational_json(e.b)},
                     {"coefficient", to_string(c)},
                     {"gamma", std::move(gamma)}});
  }
  nlohmann::json j{{"terms", std::move(terms)}};
  j["max_order"] = s.max_order() ? rational_json(*s.max_order()) : nlohmann::json(nullptr);
  return j;
}

FracSeries series_from_json(const nlohmann::json& j) {
  try {
    std::optional<Rational> m;
    if (j.contains("max_order") && !j.at("max_order").is_null())
      m = rational_from_json(j.at("max_order"));
    FracSeries s(m);
    for (const auto& t : j.at("terms"))
      s.add(FracExponent(rational_from_json(t.at("a")), rational_from_json(t.at("b"))),
            parse(t.at("coefficient").get<std::string>()));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what(), 0);
  }
}

}  // namespace fzk
