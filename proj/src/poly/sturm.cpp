#include "symcc/poly/sturm.hpp"

#include "symcc/exact/interval.hpp"

namespace symcc {

bool IntervalQ::contains(const FieldElement& x) const {
  int a = compare(x, lo);
  int b = compare(x, hi);
  return (a > 0 || (a == 0 && lo_closed)) && (b < 0 || (b == 0 && hi_closed));
}

std::string IntervalQ::to_string() const {
  return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() + (hi_closed ? "]" : ")");
}

std::string Box::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i) s += " x ";
    s += intervals[i].to_string();
  }
  return s;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_sequence of the zero polynomial");
  std::vector<UniPoly> seq{p};
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    const UniPoly& a = seq[seq.size() - 2];
    const UniPoly& b = seq.back();
    if (b.degree() == 0) break;
    UniPoly r = -a.divmod(b).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_variations(const std::vector<FieldElement>& values) {
  int count = 0, last = 0;
  for (const auto& v : values) {
    int s = sign_of(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_variations_at(const std::vector<UniPoly>& seq, const FieldElement& x) {
  std::vector<FieldElement> vals;
  vals.reserve(seq.size());
  for (const auto& q : seq) vals.push_back(q.eval(x));
  return sign_variations(vals);
}

int count_roots_with(const std::vector<UniPoly>& seq, const IntervalQ& I) {
  if (seq.front().eval(I.lo).is_zero()) throw EndpointIsRoot(I.lo);
  if (seq.front().eval(I.hi).is_zero()) throw EndpointIsRoot(I.hi);
  return sign_variations_at(seq, I.lo) - sign_variations_at(seq, I.hi);
}

int count_roots(const UniPoly& p, const IntervalQ& I) { return count_roots_with(sturm_sequence(p), I); }

Rational rational_between(const FieldElement& lo, const FieldElement& hi) {
  if (lo.is_rational() && hi.is_rational()) return (lo.rational() + hi.rational()) / 2;
  FieldElement mid = (lo + hi) * Rational(1, 2);
  FieldElement half_width = (hi - lo) * Rational(1, 4);
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    Interval m = enclose(mid, prec);
    Rational q;
    mpfr_get_q(q.get_mpq_t(), m.lo());
    // accept when |q - mid| < half_width, decided exactly
    FieldElement diff = FieldElement(q) - mid;
    if (sign_of(half_width - diff) > 0 && sign_of(half_width + diff) > 0) return q;
    if (prec > 1 << 14) throw ArithmeticError("rational_between: degenerate interval");
  }
}

IntervalQ isolate_root(const UniPoly& p, const IntervalQ& I, const Rational& width) {
  auto seq = sturm_sequence(p);
  int n = count_roots_with(seq, I);
  if (n != 1) throw NoUniqueRoot(n);
  IntervalQ cur = I;
  int v_lo = sign_variations_at(seq, cur.lo);
  while (sign_of(cur.width() - FieldElement(width)) > 0) {
    Rational m = rational_between(cur.lo, cur.hi);
    FieldElement fm(m);
    if (p.eval(fm).is_zero()) return IntervalQ::closed(fm, fm);
    int v_m = sign_variations_at(seq, fm);
    if (v_lo - v_m == 1) {
      cur.hi = fm;
    } else {
      cur.lo = fm;
      v_lo = v_m;
    }
  }
  return cur;
}

}  // namespace symcc
