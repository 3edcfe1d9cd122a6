#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcc {

using Integer = mpz_class;
using Rational = mpq_class;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits r = s^2 * k with k a signed squarefree integer. Returns {s, k}.
// Throws ArithmeticError if the squarefree kernel does not fit in 63 bits.
std::pair<Rational, std::int64_t> squarefree_split(const Rational& r);

// Element of the multiquadratic closure of Q: a finite sum c_k * sqrt(k)
// over signed squarefree integers k, with sqrt(-s) = i*sqrt(s).
class FieldElement {
 public:
  struct Term {
    std::int64_t radical;
    Rational coeff;
    bool operator==(const Term& o) const { return radical == o.radical && coeff == o.coeff; }
  };

  FieldElement() = default;
  FieldElement(long v);  // NOLINT
  FieldElement(int v) : FieldElement(static_cast<long>(v)) {}  // NOLINT
  FieldElement(const Rational& q);  // NOLINT
  FieldElement(const Integer& z) : FieldElement(Rational(z)) {}  // NOLINT

  static FieldElement sqrt(const Rational& r);
  static FieldElement i() { return sqrt(Rational(-1)); }
  static FieldElement monomial(std::int64_t radical, const Rational& coeff);
  static FieldElement parse(const std::string& text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_real() const;
  // Rational value; throws if not rational.
  Rational rational() const;
  Rational rational_part() const;

  FieldElement real_part() const;
  FieldElement imag_part() const;  // x = re + i*im
  FieldElement conj() const;       // complex conjugate

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;
  // Distinct radicals occurring with nonzero coefficient.
  std::vector<std::int64_t> radicals() const;

  std::string to_string() const;
  std::size_t hash() const;

  // Already-normalized construction; keys must be sorted, unique, squarefree.
  static FieldElement from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;  // sorted by radical, nonzero coefficients
};

// Canonical form is maintained by every operation; kept for API symmetry.
inline FieldElement normalize(const FieldElement& x) { return x; }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// Product of two squarefree radicals: sqrt(a)*sqrt(b) = factor * sqrt(key).
struct RadicalProduct {
  std::int64_t key;
  std::int64_t factor;
};
RadicalProduct multiply_radicals(std::int64_t a, std::int64_t b);

// Tower Q(sqrt r_1, ..., sqrt r_k). Membership is decided on the 2^k
// radical-product monomials.
class FieldTower {
 public:
  struct Adjunction;

  FieldTower() : monomials_{1} {}
  static FieldTower rationals() { return {}; }
  static FieldTower generated_by(const std::vector<Rational>& radicands);

  Adjunction adjoin(const Rational& r) const;
  bool contains(const FieldElement& x) const;
  bool contains_radical(std::int64_t key) const;
  bool is_real() const;
  std::size_t degree() const { return monomials_.size(); }
  const std::vector<Rational>& radicands() const { return radicands_; }
  const std::vector<std::int64_t>& monomials() const { return monomials_; }
  // Coordinates on the monomial basis (size degree()); throws if x is outside.
  std::vector<Rational> coords(const FieldElement& x) const;

 private:
  std::vector<Rational> radicands_;
  std::vector<std::int64_t> monomials_;  // sorted squarefree keys
};

struct FieldTower::Adjunction {
  FieldTower tower;
  bool already_present;
  FieldElement root;  // sqrt(r) as an element of tower
};

}  // namespace symcc

template <>
struct std::hash<symcc::FieldElement> {
  std::size_t operator()(const symcc::FieldElement& x) const { return x.hash(); }
};
