#pragma once

#include <string>
#include <vector>

#include "symcc/model/radical.hpp"
#include "symcc/poly/multipoly.hpp"
#include "symcc/poly/sturm.hpp"

namespace symcc {

// g(t) = (t, u_{r_1}(t), ..., u_{r_L}(t)).
struct Curve {
  TablePtr table;
  std::vector<std::size_t> radicals;  // table indices

  std::size_t dim() const { return radicals.size() + 1; }
  std::vector<std::string> vars() const;
  std::vector<FieldElement> at(const Rational& t0) const;
};

// cubic: Q_p^k in a denominator becomes u_p^(2k), as in F = q + sum d_p / u_p^3.
// mixed: Q_p stays a polynomial in t; u_p appears to power at most one.
enum class LiftForm { cubic, mixed };

struct ClearedFactor {
  std::string name;
  int exponent = 0;
  int sign = 1;  // sign of the factor on (0,1)
  MultiPoly poly;
};

struct Lift {
  Curve curve;
  LiftForm form = LiftForm::cubic;
  MultiPoly numerator;
  std::vector<ClearedFactor> clears;

  MultiPoly denominator() const;
  // Sign of the cleared denominator on (0,1).
  int cleared_sign() const;
};

Lift lift(const RadicalExpr& e, LiftForm form = LiftForm::cubic);

// p(g(t)) as a radical expression.
RadicalExpr compose_curve(const MultiPoly& p, const Curve& g);

// I x u_1(I) x ... x u_L(I); I must have rational endpoints inside [0,1].
Box curve_box(const Curve& g, const IntervalQ& I);

// Leading term e ~ coefficient * s^order as s -> 0+, s = t at 0 and s = 1 - t at 1.
struct EndpointLimit {
  int endpoint = 0;
  int order = 0;
  FieldElement coefficient;
  int sign = 0;  // sign of the coefficient
  bool infinite() const { return order < 0; }
  std::string to_string() const;
};

EndpointLimit endpoint_limit(const RadicalExpr& e, int endpoint);

}  // namespace symcc
