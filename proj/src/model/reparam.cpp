#include "symcc/model/reparam.hpp"

namespace symcc {

namespace {

struct Coeffs {
  Rational a, b, c;
};

Coeffs coeffs_of(const UniPoly& q) { return {q.coeff(2).rational(), q.coeff(1).rational(), q.coeff(0).rational()}; }

// P(kappa(w)) * w^deg P.
UniPoly substitute(const UniPoly& P, const UniPoly& L) {
  const int n = P.degree();
  UniPoly out;
  UniPoly Lk = UniPoly::constant(FieldElement(1));
  for (int k = 0; k <= n; ++k) {
    if (!P.coeff(k).is_zero()) out += Lk * UniPoly::monomial(n - k, P.coeff(k));
    Lk = Lk * L;
  }
  return out;
}

UniPoly shift_up(const UniPoly& p, int k) { return k <= 0 ? p : p * UniPoly::monomial(k, FieldElement(1)); }

}  // namespace

IntervalQ reparam_domain(const UniPoly& quadratic) {
  auto [a, b, c] = coeffs_of(quadratic);
  Rational disc = b * b - 4 * a * c;
  FieldElement root = FieldElement::sqrt(-disc);
  FieldElement lo = (FieldElement(b) + FieldElement::sqrt(4 * a * c)) / root;
  Rational b2 = b + 2 * a;
  FieldElement hi = (FieldElement(b2) + FieldElement::sqrt(b2 * b2 - disc)) / root;
  return IntervalQ::open(lo, hi);
}

FieldElement Reparametrization::kappa(const FieldElement& w) const { return A * (w - w.inverse()) - B; }

FieldElement Reparametrization::inverse(const Rational& t0) const {
  Rational s = t0 + B.rational();
  Rational a2 = (A * A).rational();
  return (FieldElement(s) + FieldElement::sqrt(s * s + 4 * a2)) / (FieldElement(2) * A);
}

UniPoly Reparametrization::kappa_derivative_numerator() const { return UniPoly({A, FieldElement(0), A}); }

Reparametrization reparametrize(const RadicalExpr& e, std::optional<std::size_t> radical) {
  const std::uint32_t mask = e.radical_mask();
  if (__builtin_popcount(mask) > 1) throw NotSingleRadical("expression mentions " + std::to_string(__builtin_popcount(mask)) + " radicals");
  const RadicalTable& T = *e.table();
  std::size_t p;
  if (mask != 0) {
    p = static_cast<std::size_t>(__builtin_ctz(mask));
    if (radical && *radical != p) throw NotSingleRadical("expression carries u" + std::to_string(p + 1));
  } else if (radical) {
    p = *radical;
  } else {
    throw NotSingleRadical("expression has no radical to eliminate");
  }
  if (p >= T.size()) throw std::out_of_range("radical index");

  Reparametrization r;
  r.radical = p;
  r.quadratic = T.quadratic(p);
  auto [a, b, c] = coeffs_of(r.quadratic);
  Rational disc = b * b - 4 * a * c;
  r.A = FieldElement::sqrt(-disc) / FieldElement(4 * a);
  r.B = FieldElement(b / (2 * a));
  r.C = FieldElement::sqrt(-disc / (4 * a)) / FieldElement(2);
  r.domain = reparam_domain(r.quadratic);

  // e = (G0 + G1 u) / D with D the common denominator.
  const std::vector<int> E = e.max_denominator();
  UniPoly D = UniPoly::constant(FieldElement(1));
  for (std::size_t i = 0; i < E.size(); ++i)
    if (E[i] > 0) D = D * T.factor(i).pow(static_cast<unsigned>(E[i]));
  UniPoly G[2];
  for (const auto& [m, f] : e.terms()) {
    UniPoly g = f.num;
    for (std::size_t i = 0; i < E.size(); ++i) {
      int k = E[i] - (i < f.den.size() ? f.den[i] : 0);
      if (k > 0) g = g * T.factor(i).pow(static_cast<unsigned>(k));
    }
    G[m == 0 ? 0 : 1] = g;
  }

  const UniPoly L({-r.A, -r.B, r.A});  // A w^2 - B w - A
  const UniPoly w2p1({FieldElement(1), FieldElement(0), FieldElement(1)});
  int M = 0;
  if (!G[0].is_zero()) M = std::max(M, G[0].degree());
  if (!G[1].is_zero()) M = std::max(M, G[1].degree() + 1);
  UniPoly num;
  if (!G[0].is_zero()) num += shift_up(substitute(G[0], L), M - G[0].degree());
  if (!G[1].is_zero()) num += shift_up(substitute(G[1], L) * w2p1 * r.C, M - G[1].degree() - 1);
  UniPoly den = substitute(D, L);
  const int nD = D.degree();
  if (nD >= M)
    num = shift_up(num, nD - M);
  else
    den = shift_up(den, M - nD);
  while (!num.is_zero() && num.coeff(0).is_zero() && den.coeff(0).is_zero()) {
    num = UniPoly(std::vector<FieldElement>(num.coeffs().begin() + 1, num.coeffs().end()));
    den = UniPoly(std::vector<FieldElement>(den.coeffs().begin() + 1, den.coeffs().end()));
  }
  UniPoly g = UniPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  r.numerator = std::move(num);
  r.denominator = std::move(den);
  return r;
}

}  // namespace symcc
