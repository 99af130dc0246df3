#pragma once

// Expanded canonical form behind simplify() and differentiate(): a sorted sum
// of rational multiples of monomials. A monomial is a product of atoms raised
// to non-zero integer powers times at most one exponential exp(g); products
// of exponentials add their arguments, which is what collapses products of
// hyperbolic functions.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fzk/expr.hpp"

namespace fzk::detail {

struct Poly;
using PolyPtr = std::shared_ptr<const Poly>;

enum class AtomKind { Variable, Symbol, Gamma, Opaque };

struct Atom {
  AtomKind kind;
  std::string key;  // canonical text; atoms are ordered by (kind, key)
  Var var = Var::X;
  std::string name;
  PolyPtr arg;  // gamma argument, or the primitive base of an opaque power
};
using AtomPtr = std::shared_ptr<const Atom>;

struct Factor {
  AtomPtr atom;
  long power;
};

struct Monomial {
  std::vector<Factor> factors;  // sorted, powers non-zero
  PolyPtr exp_arg;              // null: no exponential factor
};

struct Term {
  Monomial mono;
  Rational coef;
};

struct Poly {
  std::vector<Term> terms;  // sorted by monomial, coefficients non-zero

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() ||
           (terms.size() == 1 && terms[0].mono.factors.empty() &&
            !terms[0].mono.exp_arg);
  }
  Rational constant_value() const {
    return terms.empty() ? Rational(0) : terms[0].coef;
  }
};

int compare(const Atom& a, const Atom& b);
int compare(const Monomial& a, const Monomial& b);
int compare(const Poly& a, const Poly& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
};

/// Accumulates coefficient-weighted monomials; build() yields a sorted Poly
/// with zero coefficients removed.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const Poly& p, const Rational& scale = 1);
  Poly build() &&;

 private:
  std::map<Monomial, Rational, MonomialLess> acc_;
};

Poly constant_poly(const Rational& c);
Poly add(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
Poly multiply(const Poly& a, const Poly& b);
Poly power(const Poly& a, long k);
Poly derivative(const Poly& p, Var v);
bool depends_on(const Poly& p, Var v);

Monomial multiply(const Monomial& a, const Monomial& b);

Poly to_poly(const Expr& e);
Expr from_poly(const Poly& p);

}  // namespace fzk::detail
