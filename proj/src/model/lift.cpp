#include "symcc/model/lift.hpp"

#include <algorithm>

namespace symcc {

std::vector<std::string> Curve::vars() const {
  std::vector<std::string> v{"t"};
  for (std::size_t p : radicals) v.push_back("u" + std::to_string(p + 1));
  return v;
}

std::vector<FieldElement> Curve::at(const Rational& t0) const {
  std::vector<FieldElement> x{FieldElement(t0)};
  for (std::size_t p : radicals) x.push_back(FieldElement::sqrt(table->quadratic(p).eval(FieldElement(t0)).rational()));
  return x;
}

MultiPoly Lift::denominator() const {
  MultiPoly d = MultiPoly::constant(curve.vars(), FieldElement(1));
  for (const auto& f : clears) d = d * f.poly.pow(static_cast<unsigned>(f.exponent));
  return d;
}

int Lift::cleared_sign() const {
  int s = 1;
  for (const auto& f : clears)
    if (f.sign < 0 && f.exponent % 2 == 1) s = -s;
  return s;
}

namespace {

int den_of(const RatFun& f, std::size_t i) { return i < f.den.size() ? f.den[i] : 0; }

}  // namespace

Lift lift(const RadicalExpr& e, LiftForm form) {
  const RadicalTable& T = *e.table();
  Lift out;
  out.form = form;
  out.curve.table = e.table();
  const std::uint32_t mask = e.radical_mask();
  for (std::size_t p = 0; p < T.size(); ++p) {
    bool used = mask & (1u << p);
    if (form == LiftForm::cubic)
      for (const auto& [m, f] : e.terms()) used = used || den_of(f, 3 + p) > 0;
    if (used) out.curve.radicals.push_back(p);
  }
  const auto vars = out.curve.vars();
  const std::size_t L = out.curve.radicals.size();
  auto bit = [](std::uint32_t m, std::size_t p) { return (m >> p) & 1u ? 1 : 0; };

  // Factors cleared as polynomials in t.
  const std::size_t tfactors = form == LiftForm::cubic ? 3 : T.factor_count();
  std::vector<int> E(tfactors, 0);
  for (const auto& [m, f] : e.terms())
    for (std::size_t i = 0; i < tfactors; ++i) E[i] = std::max(E[i], den_of(f, i));
  std::vector<int> K(L, 0);
  if (form == LiftForm::cubic)
    for (const auto& [m, f] : e.terms())
      for (std::size_t k = 0; k < L; ++k) {
        std::size_t p = out.curve.radicals[k];
        K[k] = std::max(K[k], 2 * den_of(f, 3 + p) - bit(m, p));
      }

  MultiPoly num(vars);
  for (const auto& [m, f] : e.terms()) {
    UniPoly g = f.num;
    for (std::size_t i = 0; i < tfactors; ++i) {
      int k = E[i] - den_of(f, i);
      if (k > 0) g = g * T.factor(i).pow(static_cast<unsigned>(k));
    }
    Exponent ex(L + 1, 0);
    for (std::size_t k = 0; k < L; ++k) {
      std::size_t p = out.curve.radicals[k];
      ex[k + 1] = form == LiftForm::cubic ? bit(m, p) - 2 * den_of(f, 3 + p) + K[k] : bit(m, p);
    }
    for (int d = 0; d <= g.degree(); ++d) {
      if (g.coeff(d).is_zero()) continue;
      ex[0] = d;
      num.add_term(ex, g.coeff(d));
    }
  }
  out.numerator = std::move(num);

  const char* names[] = {"t", "t - 1", "t + 1"};
  for (std::size_t i = 0; i < tfactors; ++i) {
    if (E[i] == 0) continue;
    ClearedFactor c;
    c.exponent = E[i];
    c.sign = i == 1 ? -1 : 1;
    if (i < 3) {
      c.name = names[i];
    } else {
      c.name = T.factor(i).to_string("t");
    }
    c.poly = MultiPoly::from_uni(vars, 0, T.factor(i));
    out.clears.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < L; ++k) {
    if (K[k] == 0) continue;
    ClearedFactor c;
    c.name = vars[k + 1];
    c.exponent = K[k];
    c.poly = MultiPoly::variable(vars, k + 1);
    out.clears.push_back(std::move(c));
  }
  return out;
}

RadicalExpr compose_curve(const MultiPoly& p, const Curve& g) {
  RadicalExpr out = RadicalExpr::constant(FieldElement(0), g.table);
  std::vector<std::vector<RadicalExpr>> powers(g.radicals.size());
  auto power = [&](std::size_t k, int e) {
    auto& v = powers[k];
    if (v.empty()) v.push_back(RadicalExpr::constant(FieldElement(1), g.table));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * RadicalExpr::radical(g.table, g.radicals[k]));
    return v[static_cast<std::size_t>(e)];
  };
  // Group by u-exponents so each radical product is formed once.
  std::map<Exponent, UniPoly> by_u;
  for (const auto& [ex, c] : p.terms()) {
    Exponent key(ex.begin() + 1, ex.end());
    by_u[key] += UniPoly::monomial(ex[0], c);
  }
  for (const auto& [key, tpoly] : by_u) {
    RadicalExpr term = RadicalExpr::poly(tpoly, g.table);
    for (std::size_t k = 0; k < key.size(); ++k)
      if (key[k] > 0) term = term * power(k, key[k]);
    out += term;
  }
  return out;
}

Box curve_box(const Curve& g, const IntervalQ& I) {
  if (!I.lo.is_rational() || !I.hi.is_rational()) throw std::invalid_argument("curve_box needs rational endpoints");
  const Rational lo = I.lo.rational(), hi = I.hi.rational();
  if (lo < 0 || hi > 1 || hi < lo) throw std::invalid_argument("curve_box interval must lie in [0,1]");
  Box B;
  B.intervals.push_back(I);
  for (std::size_t p : g.radicals) {
    const UniPoly& q = g.table->quadratic(p);
    struct Cand {
      Rational value;
      bool attained;
    };
    std::vector<Cand> cands{{q.eval(FieldElement(lo)).rational(), I.lo_closed},
                            {q.eval(FieldElement(hi)).rational(), I.hi_closed}};
    Rational v = -q.coeff(1).rational() / (2 * q.coeff(2).rational());
    if (lo < v && v < hi) cands.push_back({q.eval(FieldElement(v)).rational(), true});
    Rational mn = cands[0].value, mx = cands[0].value;
    for (const auto& c : cands) {
      mn = std::min(mn, c.value);
      mx = std::max(mx, c.value);
    }
    bool mn_closed = false, mx_closed = false;
    for (const auto& c : cands) {
      if (c.value == mn && c.attained) mn_closed = true;
      if (c.value == mx && c.attained) mx_closed = true;
    }
    B.intervals.push_back({FieldElement::sqrt(mn), FieldElement::sqrt(mx), mn_closed, mx_closed});
  }
  return B;
}

std::string EndpointLimit::to_string() const {
  std::string s = endpoint == 0 ? "t" : "(1 - t)";
  std::string lim = endpoint == 0 ? "t -> 0+" : "t -> 1-";
  std::string value = order < 0 ? (sign > 0 ? "+inf" : "-inf") : order == 0 ? coefficient.to_string() : "0";
  return lim + ": (" + coefficient.to_string() + ") * " + s + "^" + std::to_string(order) + ", limit " + value;
}

EndpointLimit endpoint_limit(const RadicalExpr& e, int endpoint) {
  if (e.is_zero()) throw std::invalid_argument("limit of the zero expression");
  const std::size_t idx = endpoint == 0 ? 0 : 1;
  const std::vector<int> den = e.max_denominator();
  const int K = idx < den.size() ? den[idx] : 0;
  std::vector<int> mult(idx + 1, 0);
  mult[idx] = K;
  RadicalExpr h = e.multiply_factors(mult);
  const Rational at(endpoint);
  Rational fact = 1;
  for (int m = 0; m <= 64; ++m) {
    if (m > 0) {
      h = h.derivative();
      fact *= m;
    }
    FieldElement v = h.eval_exact(at);
    if (v.is_zero()) continue;
    EndpointLimit r;
    r.endpoint = endpoint;
    r.order = m - K;
    // In s = 1 - t: d/ds = -d/dt, and (t - 1)^K = (-1)^K s^K.
    int flip = endpoint == 0 ? 1 : ((m + K) % 2 == 0 ? 1 : -1);
    r.coefficient = v * FieldElement(Rational(flip) / fact);
    r.sign = sign_of(r.coefficient);
    return r;
  }
  throw std::runtime_error("no nonzero Taylor coefficient up to order 64");
}

}  // namespace symcc
