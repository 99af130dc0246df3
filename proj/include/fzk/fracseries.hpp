#pragma once

// Fractional power series in t: sum over exponents lambda = a + b*alpha of
// raw coefficients c_lambda(x, y) * t^lambda. alpha stays symbolic; the Gamma
// factors the operators introduce live inside the coefficients as gamma()
// tokens and are resolved by eval_series.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fzk/expr.hpp"

namespace fzk {

/// t^(a + b*alpha). a and b are rational so that fixed numeric orders such
/// as J^(1/2) live on the same lattice as the symbolic alpha.
struct FracExponent {
  Rational a = 0;
  Rational b = 0;

  FracExponent() = default;
  FracExponent(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  static FracExponent alpha() { return {0, 1}; }
  static FracExponent integer(long n) { return {n, 0}; }

  double value(double alpha) const { return a.get_d() + b.get_d() * alpha; }
  /// Value at alpha = 1, the measure used for truncation.
  Rational order() const { return a + b; }
  bool is_zero() const { return a == 0 && b == 0; }
  /// Non-negative for every alpha in (0, 1].
  bool admissible() const { return a >= 0 && a + b >= 0; }

  friend FracExponent operator+(const FracExponent& l, const FracExponent& r) {
    return {l.a + r.a, l.b + r.b};
  }
  friend FracExponent operator-(const FracExponent& l, const FracExponent& r) {
    return {l.a - r.a, l.b - r.b};
  }
  friend bool operator==(const FracExponent& l, const FracExponent& r) {
    return l.a == r.a && l.b == r.b;
  }
  friend bool operator<(const FracExponent& l, const FracExponent& r) {
    return l.a < r.a || (l.a == r.a && l.b < r.b);
  }
};

std::string to_string(const FracExponent& e);

class FracSeries {
 public:
  using Terms = std::map<FracExponent, Expr>;

  /// Empty series; terms with order() > max_order are dropped on insertion.
  explicit FracSeries(std::optional<Rational> max_order = std::nullopt)
      : max_order_(std::move(max_order)) {}

  /// {(0,0) -> c}
  static FracSeries constant(const Expr& c, std::optional<Rational> max_order = std::nullopt);

  /// Adds c to the coefficient of t^e. The coefficient is simplified and the
  /// term removed when it vanishes. Throws DomainError when e is not
  /// admissible or c depends on t.
  void add(const FracExponent& e, const Expr& c);

  const Terms& terms() const noexcept { return terms_; }
  const std::optional<Rational>& max_order() const noexcept { return max_order_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Raw coefficient of t^e, 0 when absent.
  Expr coefficient(const FracExponent& e) const;

  /// Total node count of all coefficients (the size-guard measure).
  std::size_t node_count() const;

  bool keeps(const FracExponent& e) const { return !max_order_ || e.order() <= *max_order_; }

 private:
  Terms terms_;
  std::optional<Rational> max_order_;
};

/// Sum of scale_i * s_i. All max_orders must agree.
FracSeries linear_combine(const std::vector<std::pair<Rational, FracSeries>>& parts);

/// Product; the tighter of the two truncations is kept.
FracSeries series_mul(const FracSeries& s1, const FracSeries& s2);

/// s^p for p >= 1.
FracSeries series_int_pow(const FracSeries& s, int p);

/// Caputo derivative of order nu, 0 < nu <= 1 for every alpha:
/// t^l -> Gamma(l+1)/Gamma(l+1-nu) t^(l-nu), constants -> 0.
FracSeries caputo(const FracSeries& s, const FracExponent& nu = FracExponent::alpha());

/// Riemann-Liouville integral of order beta > 0:
/// t^l -> Gamma(l+1)/Gamma(l+1+beta) t^(l+beta).
FracSeries rl_integral(const FracSeries& s, const FracExponent& beta);

/// Applies d^(nx+ny)/dx^nx dy^ny to every coefficient.
FracSeries spatial_diff(const FracSeries& s, int order_x, int order_y);

/// Numeric value at the bound x, y, t (and parameters) for the given alpha.
double eval_series(const FracSeries& s, const Bindings& b, double alpha);

/// The coefficient expression with its gamma tokens bound at alpha.
double eval_coefficient(const Expr& c, const Bindings& b, double alpha);

/// f_n = Gamma(1 + n*alpha) * c_(0,n): the canonical coefficient of
/// sum f_n t^(n*alpha) / Gamma(1 + n*alpha).
Expr canonical_coefficient(const FracSeries& s, int n);

/// Inverse of canonical_coefficient for n = 0 .. fs.size()-1.
FracSeries from_canonical(const std::vector<Expr>& fs,
                          std::optional<Rational> max_order = std::nullopt);

nlohmann::json to_json(const FracSeries& s);
FracSeries series_from_json(const nlohmann::json& j);

}  // namespace fzk
