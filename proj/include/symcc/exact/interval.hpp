#pragma once

#include <mpfr.h>

#include <string>

#include "symcc/exact/field.hpp"

namespace symcc {

// Closed interval [lo, hi] with MPFR endpoints; every operation rounds outward.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o) noexcept;
  ~Interval();

  static Interval sqrt_of(const Rational& q, mpfr_prec_t prec);  // q >= 0

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval operator-() const;
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  Interval reciprocal() const;  // throws if 0 is enclosed

  bool contains_zero() const;
  // +1 / -1 if the interval excludes zero, 0 otherwise.
  int certain_sign() const;
  double midpoint() const;
  bool contains(const Rational& q) const;
  // Outward decimal rounding of the endpoints to `digits` places.
  std::pair<std::string, std::string> decimal(int digits) const;
  double width() const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  void swap(Interval& o) noexcept;
};

// Enclosure of a real element at the given working precision.
Interval enclose(const FieldElement& x, mpfr_prec_t prec);

// Exact sign of a real element. Interval refinement from 64 to 4096 bits,
// exact conjugation fallback. Throws ArithmeticError if x is not real.
int sign_of(const FieldElement& x);

// Sign by repeated squaring against one radical at a time; no floating point.
int sign_exact(const FieldElement& x);

int compare(const FieldElement& a, const FieldElement& b);

// Decimal enclosure [lo, hi] with `digits` fractional places, outward rounded.
std::pair<std::string, std::string> decimal_enclosure(const FieldElement& x, int digits);

double to_double(const FieldElement& x);

}  // namespace symcc
