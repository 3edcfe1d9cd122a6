#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <random>

#include "symcc/exact/field.hpp"

namespace oracle {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>>;

inline Real to_real(const symcc::Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

// Real value of a real element at ~60 decimal digits.
inline Real value(const symcc::FieldElement& x) {
  Real s = 0;
  for (const auto& t : x.terms()) s += to_real(t.coeff) * sqrt(Real(t.radical));
  return s;
}

inline symcc::Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> n(-num_bound, num_bound), d(1, den_bound);
  symcc::Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

// Random element of Q(sqrt2, sqrt3, sqrt5) (optionally with i).
inline symcc::FieldElement random_element(std::mt19937_64& rng, bool complex = false) {
  static const long keys[] = {1, 2, 3, 5, 6, 10, 15, 30};
  symcc::FieldElement x;
  for (long k : keys) {
    if (rng() % 2) x += symcc::FieldElement::monomial(k, random_rational(rng, 9, 7));
    if (complex && rng() % 3 == 0) x += symcc::FieldElement::monomial(-k, random_rational(rng, 9, 7));
  }
  return x;
}

}  // namespace oracle
