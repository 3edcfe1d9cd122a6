#include "symcc/exact/interval.hpp"

#include <algorithm>
#include <utility>

namespace symcc {

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(mpfr_get_prec(o.lo_)) { swap(o); }

Interval& Interval::operator=(Interval o) noexcept {
  swap(o);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::swap(Interval& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval Interval::sqrt_of(const Rational& q, mpfr_prec_t prec) {
  if (sgn(q) < 0) throw ArithmeticError("sqrt of negative value in real interval");
  Interval r(q, prec);
  if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
  mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(lo_));
  mpfr_sub(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  mpfr_swap(lo_, t);
  mpfr_clear(t);
  return *this;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator*=(const Interval& o) {
  mpfr_prec_t p = precision();
  mpfr_t c[4], d[4];
  const __mpfr_struct* a[2] = {lo_, hi_};
  const __mpfr_struct* b[2] = {o.lo_, o.hi_};
  for (int k = 0; k < 4; ++k) {
    mpfr_init2(c[k], p);
    mpfr_init2(d[k], p);
    mpfr_mul(c[k], a[k / 2], b[k % 2], MPFR_RNDD);
    mpfr_mul(d[k], a[k / 2], b[k % 2], MPFR_RNDU);
  }
  mpfr_set(lo_, c[0], MPFR_RNDD);
  mpfr_set(hi_, d[0], MPFR_RNDU);
  for (int k = 1; k < 4; ++k) {
    mpfr_min(lo_, lo_, c[k], MPFR_RNDD);
    mpfr_max(hi_, hi_, d[k], MPFR_RNDU);
  }
  for (int k = 0; k < 4; ++k) {
    mpfr_clear(c[k]);
    mpfr_clear(d[k]);
  }
  return *this;
}

Interval Interval::reciprocal() const {
  if (contains_zero()) throw ArithmeticError("reciprocal of interval containing zero");
  Interval r(precision());
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

int Interval::certain_sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

double Interval::midpoint() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width() const { return mpfr_get_d(hi_, MPFR_RNDU) - mpfr_get_d(lo_, MPFR_RNDD); }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

namespace {

std::string fixed_point(const Integer& scaled, int digits) {
  Integer mag = abs(scaled);
  std::string s = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(scaled) < 0 ? "-" : "") + s;
}

}  // namespace

std::pair<std::string, std::string> Interval::decimal(int digits) const {
  mpfr_prec_t p = precision() + 8 + 4 * static_cast<mpfr_prec_t>(digits);
  mpfr_t lo, hi, scale;
  mpfr_inits2(p, lo, hi, scale, static_cast<mpfr_ptr>(nullptr));
  mpfr_ui_pow_ui(scale, 10, static_cast<unsigned long>(digits), MPFR_RNDN);  // exact for small digits
  mpfr_mul(lo, lo_, scale, MPFR_RNDD);
  mpfr_mul(hi, hi_, scale, MPFR_RNDU);
  Integer zl, zh;
  mpfr_get_z(zl.get_mpz_t(), lo, MPFR_RNDD);
  mpfr_get_z(zh.get_mpz_t(), hi, MPFR_RNDU);
  mpfr_clears(lo, hi, scale, static_cast<mpfr_ptr>(nullptr));
  return {fixed_point(zl, digits), fixed_point(zh, digits)};
}

Interval enclose(const FieldElement& x, mpfr_prec_t prec) {
  Interval sum(prec);
  for (const auto& t : x.terms()) {
    if (t.radical < 0) throw ArithmeticError("enclose: element is not real: " + x.to_string());
    Interval c(t.coeff, prec);
    if (t.radical != 1) c *= Interval::sqrt_of(Rational(static_cast<long>(t.radical)), prec);
    sum += c;
  }
  return sum;
}

int sign_exact(const FieldElement& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.rational());
  if (!x.is_real()) throw ArithmeticError("sign of a non-real element: " + x.to_string());
  // Pick one prime factor shared by some radical; split x = A + sqrt(p)*B.
  std::int64_t key = x.terms().back().radical;
  std::int64_t p = 0;
  for (std::int64_t q = 2; q * q <= key; ++q)
    if (key % q == 0) {
      p = q;
      break;
    }
  if (p == 0) p = key;
  std::vector<FieldElement::Term> a, b;
  for (const auto& t : x.terms()) {
    if (t.radical % p == 0) b.push_back({t.radical / p, t.coeff});
    else a.push_back(t);
  }
  std::sort(b.begin(), b.end(), [](const auto& l, const auto& r) { return l.radical < r.radical; });
  FieldElement A = FieldElement::from_terms(a);
  FieldElement B = FieldElement::from_terms(b);
  int sa = sign_exact(A);
  int sb = sign_exact(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  FieldElement d = A * A - B * B * FieldElement(Rational(static_cast<long>(p)));
  return sa * sign_exact(d);
}

int sign_of(const FieldElement& x) {
  if (x.is_zero()) return 0;
  if (!x.is_real()) throw ArithmeticError("sign of a non-real element: " + x.to_string());
  if (x.is_rational()) return sgn(x.rational());
  for (mpfr_prec_t prec = 64; prec <= 4096; prec *= 2) {
    int s = enclose(x, prec).certain_sign();
    if (s != 0) return s;
  }
  return sign_exact(x);
}

int compare(const FieldElement& a, const FieldElement& b) { return sign_of(a - b); }

std::pair<std::string, std::string> decimal_enclosure(const FieldElement& x, int digits) {
  return enclose(x, 128 + 4 * static_cast<mpfr_prec_t>(digits)).decimal(digits);
}

double to_double(const FieldElement& x) { return enclose(x.real_part(), 128).midpoint(); }

}  // namespace symcc
