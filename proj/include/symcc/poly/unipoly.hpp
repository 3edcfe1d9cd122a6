#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symcc/exact/field.hpp"

namespace symcc {

// Dense univariate polynomial, coefficients lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldElement> coeffs);
  UniPoly(std::initializer_list<FieldElement> coeffs) : UniPoly(std::vector<FieldElement>(coeffs)) {}

  static UniPoly constant(const FieldElement& c) { return UniPoly(std::vector<FieldElement>{c}); }
  static UniPoly x() { return UniPoly({FieldElement(0), FieldElement(1)}); }
  static UniPoly monomial(int degree, const FieldElement& c);
  // (x - r)
  static UniPoly linear_root(const FieldElement& r) { return UniPoly({-r, FieldElement(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  const FieldElement& coeff(int i) const;
  const FieldElement& leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const FieldElement& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const FieldElement& s) { return a *= s; }
  friend UniPoly operator*(const FieldElement& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(unsigned e) const;
  UniPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  // Exact quotient; throws ArithmeticError if the remainder is nonzero.
  UniPoly exact_div(const UniPoly& d) const;
  bool divisible_by(const UniPoly& d) const;
  // p(q(x))
  UniPoly compose(const UniPoly& q) const;
  UniPoly monic() const;
  static UniPoly gcd(UniPoly a, UniPoly b);

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<FieldElement> c_;
  void trim();
};

}  // namespace symcc
