#pragma once

#include <optional>
#include <stdexcept>

#include "symcc/model/radical.hpp"
#include "symcc/poly/sturm.hpp"

namespace symcc {

class NotSingleRadical : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// t = kappa(w) = A (w - 1/w) - B and u = C (w + 1/w) turn an expression in one
// radical u = sqrt(a t^2 + b t + c) into a rational function of w.
struct Reparametrization {
  std::size_t radical = 0;
  UniPoly quadratic;
  FieldElement A, B, C;
  UniPoly numerator;
  UniPoly denominator;
  IntervalQ domain;  // w-interval mapped onto t in (0,1)

  FieldElement kappa(const FieldElement& w) const;
  // w with kappa(w) = t0.
  FieldElement inverse(const Rational& t0) const;
  // Numerator of kappa'(w) = A (w^2 + 1) / w^2.
  UniPoly kappa_derivative_numerator() const;
};

// Throws NotSingleRadical if e carries two or more distinct u_p. `radical`
// selects the substitution when e has no radical term.
Reparametrization reparametrize(const RadicalExpr& e, std::optional<std::size_t> radical = std::nullopt);

// The w-interval for a quadratic alone.
IntervalQ reparam_domain(const UniPoly& quadratic);

}  // namespace symcc
