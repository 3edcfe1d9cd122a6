#pragma once

#include <map>
#include <string>
#include <vector>

#include "symcc/poly/unipoly.hpp"

namespace symcc {

using Exponent = std::vector<int>;

// Graded lexicographic order on exponents.
struct GrLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial; variables ordered (t, u_1, ..., u_L).
class MultiPoly {
 public:
  using Terms = std::map<Exponent, FieldElement, GrLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const FieldElement& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
  // Univariate polynomial placed in variable `index`.
  static MultiPoly from_uni(std::vector<std::string> vars, std::size_t index, const UniPoly& p);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const FieldElement& c);
  FieldElement coeff(const Exponent& e) const;
  int degree(std::size_t var) const;
  Exponent degrees() const;
  int total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const FieldElement& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const FieldElement& s) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  MultiPoly pow(unsigned e) const;

  FieldElement eval(const std::vector<FieldElement>& point) const;
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace symcc
