#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symcc/exact/interval.hpp"
#include "symcc/poly/unipoly.hpp"

namespace symcc {

// Quadratics a_p t^2 + b_p t + c_p with negative discriminant; u_p is the positive root of u_p^2 = Q_p(t).
// Denominator factors are indexed 0: t, 1: t - 1, 2: t + 1, 3 + p: Q_p.
class RadicalTable {
 public:
  explicit RadicalTable(std::vector<UniPoly> quadratics);
  static std::shared_ptr<const RadicalTable> make(std::vector<UniPoly> quadratics);
  static const std::shared_ptr<const RadicalTable>& empty();

  std::size_t size() const { return quadratics_.size(); }
  const UniPoly& quadratic(std::size_t p) const { return quadratics_[p]; }
  const std::vector<UniPoly>& quadratics() const { return quadratics_; }
  std::size_t factor_count() const { return factors_.size(); }
  const UniPoly& factor(std::size_t i) const { return factors_[i]; }
  std::string factor_string(std::size_t i) const;
  // Index of an existing quadratic, or -1.
  int find(const UniPoly& q) const;

 private:
  std::vector<UniPoly> quadratics_;
  std::vector<UniPoly> factors_;
};

using TablePtr = std::shared_ptr<const RadicalTable>;

// N(t) / prod factor_i^{e_i}, with N not divisible by any factor carrying a positive exponent.
struct RatFun {
  UniPoly num;
  std::vector<int> den;

  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num == b.num && a.den == b.den; }
};

// Values of an expression at a rational point: coefficient per radical subset, radicands Q_p(t0).
struct PointValue {
  std::map<std::uint32_t, FieldElement> terms;
  std::vector<Rational> radicands;
};

int sign_of(const PointValue& v);
Interval enclose(const PointValue& v, mpfr_prec_t prec);

class RadicalExpr {
 public:
  RadicalExpr() : table_(RadicalTable::empty()) {}
  RadicalExpr(const FieldElement& c);  // NOLINT
  RadicalExpr(long c) : RadicalExpr(FieldElement(c)) {}  // NOLINT

  static RadicalExpr constant(const FieldElement& c, TablePtr table = RadicalTable::empty());
  static RadicalExpr t(TablePtr table = RadicalTable::empty());
  static RadicalExpr poly(const UniPoly& p, TablePtr table = RadicalTable::empty());
  static RadicalExpr radical(TablePtr table, std::size_t p);
  // factor_i^{-k}
  static RadicalExpr inverse_factor(TablePtr table, std::size_t i, int k = 1);
  static RadicalExpr from_terms(TablePtr table, std::map<std::uint32_t, RatFun> terms);

  const TablePtr& table() const { return table_; }
  const std::map<std::uint32_t, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  // True when no radical appears.
  bool is_rational_function() const;
  std::uint32_t radical_mask() const;
  std::size_t radical_count() const;
  // Part multiplying prod_{p in mask} u_p.
  RadicalExpr component(std::uint32_t mask) const;
  std::vector<int> max_denominator() const;

  RadicalExpr operator-() const;
  RadicalExpr& operator+=(const RadicalExpr& o);
  RadicalExpr& operator-=(const RadicalExpr& o);
  RadicalExpr& operator*=(const RadicalExpr& o);
  RadicalExpr& operator*=(const FieldElement& s);
  friend RadicalExpr operator+(RadicalExpr a, const RadicalExpr& b) { return a += b; }
  friend RadicalExpr operator-(RadicalExpr a, const RadicalExpr& b) { return a -= b; }
  friend RadicalExpr operator*(RadicalExpr a, const RadicalExpr& b) { return a *= b; }
  friend RadicalExpr operator*(RadicalExpr a, const FieldElement& s) { return a *= s; }
  friend RadicalExpr operator*(const FieldElement& s, RadicalExpr a) { return a *= s; }
  friend bool operator==(const RadicalExpr& a, const RadicalExpr& b);
  friend bool operator!=(const RadicalExpr& a, const RadicalExpr& b) { return !(a == b); }
  RadicalExpr pow(unsigned e) const;
  RadicalExpr divide_by_radical(std::size_t p) const;
  RadicalExpr divide_by_factor(std::size_t i, int k = 1) const;
  RadicalExpr divide(const FieldElement& s) const;
  // Multiply every component by prod factor_i^{e_i} (exponents may exceed denominators).
  RadicalExpr multiply_factors(const std::vector<int>& e) const;
  // Replace u_p by -u_p.
  RadicalExpr conjugate(std::size_t p) const;
  RadicalExpr with_table(TablePtr table) const;
  // d/dt, with u_p' = Q_p' u_p / (2 Q_p).
  RadicalExpr derivative() const;

  PointValue at(const Rational& t0) const;
  // Exact value; radicands must have small squarefree kernels.
  FieldElement eval_exact(const Rational& t0) const;
  Interval enclose_at(const Rational& t0, mpfr_prec_t prec) const;
  int sign_at(const Rational& t0) const;

  std::string to_string() const;

 private:
  TablePtr table_;
  std::map<std::uint32_t, RatFun> terms_;

  void adopt(const RadicalExpr& o);
  std::string to_string_rf(const RatFun& f) const;
};

std::string to_string(const RatFun& f, const RadicalTable& table);

// Polynomial in c with RadicalExpr coefficients; matrix entries of S are affine in c.
class CExpr {
 public:
  CExpr() = default;
  CExpr(const RadicalExpr& a) : coef_{a} { trim(); }  // NOLINT
  CExpr(std::vector<RadicalExpr> coef) : coef_(std::move(coef)) { trim(); }  // NOLINT
  static CExpr affine(const RadicalExpr& a, const RadicalExpr& b) { return CExpr(std::vector<RadicalExpr>{a, b}); }
  static CExpr c() { return affine(RadicalExpr(), RadicalExpr(1)); }

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const std::vector<RadicalExpr>& coeffs() const { return coef_; }
  RadicalExpr coeff(int k) const;
  bool is_zero() const { return coef_.empty(); }
  bool is_real() const;

  CExpr operator-() const;
  CExpr& operator+=(const CExpr& o);
  CExpr& operator-=(const CExpr& o);
  CExpr& operator*=(const FieldElement& s);
  friend CExpr operator+(CExpr a, const CExpr& b) { return a += b; }
  friend CExpr operator-(CExpr a, const CExpr& b) { return a -= b; }
  friend CExpr operator*(const CExpr& a, const CExpr& b);
  friend CExpr operator*(CExpr a, const FieldElement& s) { return a *= s; }
  friend bool operator==(const CExpr& a, const CExpr& b) { return a.coef_ == b.coef_; }
  friend bool operator!=(const CExpr& a, const CExpr& b) { return !(a == b); }

  RadicalExpr at_c(const RadicalExpr& c) const;
  // sum_k coef_k num^k den^(deg-k): the numerator after substituting c = num/den.
  RadicalExpr homogenized(const RadicalExpr& num, const RadicalExpr& den) const;
  std::string to_string() const;

 private:
  std::vector<RadicalExpr> coef_;
  void trim();
};

}  // namespace symcc
