#include "symcc/model/radical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symcc {

RadicalTable::RadicalTable(std::vector<UniPoly> quadratics) : quadratics_(std::move(quadratics)) {
  if (quadratics_.size() > 31) throw std::invalid_argument("too many radicals");
  factors_.push_back(UniPoly::x());
  factors_.push_back(UniPoly({FieldElement(-1), FieldElement(1)}));
  factors_.push_back(UniPoly({FieldElement(1), FieldElement(1)}));
  for (const auto& q : quadratics_) {
    if (q.degree() != 2) throw std::invalid_argument("radicand must be quadratic: " + q.to_string("t"));
    for (const auto& c : q.coeffs())
      if (!c.is_rational()) throw std::invalid_argument("radicand must have rational coefficients");
    Rational a = q.coeff(2).rational(), b = q.coeff(1).rational(), c = q.coeff(0).rational();
    if (b * b - 4 * a * c >= 0) throw std::invalid_argument("radicand discriminant must be negative: " + q.to_string("t"));
    factors_.push_back(q);
  }
}

std::shared_ptr<const RadicalTable> RadicalTable::make(std::vector<UniPoly> quadratics) {
  return std::make_shared<const RadicalTable>(std::move(quadratics));
}

const std::shared_ptr<const RadicalTable>& RadicalTable::empty() {
  static const std::shared_ptr<const RadicalTable> e = std::make_shared<const RadicalTable>(std::vector<UniPoly>{});
  return e;
}

int RadicalTable::find(const UniPoly& q) const {
  for (std::size_t p = 0; p < quadratics_.size(); ++p)
    if (quadratics_[p] == q) return static_cast<int>(p);
  return -1;
}

std::string RadicalTable::factor_string(std::size_t i) const {
  if (i == 0) return "t";
  if (i == 1) return "(t - 1)";
  if (i == 2) return "(t + 1)";
  return "(" + factors_[i].to_string("t") + ")";
}

namespace {

// Exact division by a factor when possible; linear factors tested by evaluation.
bool try_divide(UniPoly& num, const RadicalTable& table, std::size_t i) {
  if (num.is_zero()) return false;
  if (i == 0) {
    if (!num.coeff(0).is_zero()) return false;
    std::vector<FieldElement> c(num.coeffs().begin() + 1, num.coeffs().end());
    num = UniPoly(std::move(c));
    return true;
  }
  if (i <= 2) {
    FieldElement root(i == 1 ? 1 : -1);
    if (!num.eval(root).is_zero()) return false;
    // synthetic division by (t - root)
    const auto& a = num.coeffs();
    std::vector<FieldElement> q(a.size() - 1);
    FieldElement carry;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
      carry = a[k + 1] + carry * root;
      q[k] = carry;
    }
    num = UniPoly(std::move(q));
    return true;
  }
  auto [q, r] = num.divmod(table.factor(i));
  if (!r.is_zero()) return false;
  num = std::move(q);
  return true;
}

UniPoly factor_power(const RadicalTable& table, std::size_t i, int k) {
  if (k <= 0) return UniPoly::constant(FieldElement(1));
  if (i == 0) return UniPoly::monomial(k, FieldElement(1));
  return table.factor(i).pow(static_cast<unsigned>(k));
}

void trim_den(std::vector<int>& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

void normalize(RatFun& f, const RadicalTable& table) {
  if (f.num.is_zero()) {
    f.den.clear();
    return;
  }
  for (std::size_t i = 0; i < f.den.size(); ++i)
    while (f.den[i] > 0 && try_divide(f.num, table, i)) --f.den[i];
  trim_den(f.den);
}

int den_at(const std::vector<int>& d, std::size_t i) { return i < d.size() ? d[i] : 0; }

UniPoly scale_up(const UniPoly& n, const std::vector<int>& from, const std::vector<int>& to, const RadicalTable& table) {
  UniPoly r = n;
  for (std::size_t i = 0; i < to.size(); ++i) {
    int k = to[i] - den_at(from, i);
    if (k > 0) r = r * factor_power(table, i, k);
  }
  return r;
}

RatFun add(const RatFun& a, const RatFun& b, const RadicalTable& table) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFun r;
  if (a.den == b.den) {
    r.num = a.num + b.num;
    r.den = a.den;
  } else {
    std::size_t n = std::max(a.den.size(), b.den.size());
    r.den.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) r.den[i] = std::max(den_at(a.den, i), den_at(b.den, i));
    r.num = scale_up(a.num, a.den, r.den, table) + scale_up(b.num, b.den, r.den, table);
  }
  normalize(r, table);
  return r;
}

RatFun mul(const RatFun& a, const RatFun& b, const RadicalTable& table) {
  RatFun r;
  if (a.is_zero() || b.is_zero()) return r;
  r.num = a.num * b.num;
  std::size_t n = std::max(a.den.size(), b.den.size());
  r.den.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) r.den[i] = den_at(a.den, i) + den_at(b.den, i);
  if (!(a.den.empty() && b.den.empty())) normalize(r, table);
  return r;
}

std::string poly_string(const UniPoly& p) {
  std::size_t nonzero = 0;
  for (const auto& c : p.coeffs()) nonzero += c.is_zero() ? 0 : 1;
  std::string s = p.to_string("t");
  bool simple = nonzero <= 1 && p.leading().terms().size() <= 1;
  return simple ? s : "(" + s + ")";
}

std::string mask_string(std::uint32_t mask) {
  std::string s;
  for (std::size_t p = 0; p < 32; ++p)
    if (mask & (1u << p)) s += "*u" + std::to_string(p + 1);
  return s;
}

PointValue pv_mul(const PointValue& a, const PointValue& b) {
  PointValue r;
  r.radicands = a.radicands.size() >= b.radicands.size() ? a.radicands : b.radicands;
  for (const auto& [m1, c1] : a.terms)
    for (const auto& [m2, c2] : b.terms) {
      FieldElement c = c1 * c2;
      std::uint32_t common = m1 & m2;
      for (std::size_t p = 0; common; ++p, common >>= 1)
        if (common & 1u) c *= r.radicands[p];
      auto& slot = r.terms[m1 ^ m2];
      slot += c;
      if (slot.is_zero()) r.terms.erase(m1 ^ m2);
    }
  return r;
}

}  // namespace

std::string to_string(const RatFun& f, const RadicalTable& table) {
  if (f.num.is_zero()) return "0";
  std::string s = poly_string(f.num);
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < f.den.size(); ++i) {
    if (f.den[i] == 0) continue;
    std::string base = table.factor_string(i);
    parts.push_back(f.den[i] == 1 ? base : base + "^" + std::to_string(f.den[i]));
  }
  if (parts.empty()) return s;
  std::string d;
  for (std::size_t k = 0; k < parts.size(); ++k) d += (k ? "*" : "") + parts[k];
  return s + "/" + (parts.size() > 1 ? "(" + d + ")" : d);
}

Interval enclose(const PointValue& v, mpfr_prec_t prec) {
  Interval sum(Rational(0), prec);
  std::vector<Interval> roots;
  for (const auto& r : v.radicands) roots.push_back(Interval::sqrt_of(r, prec));
  for (const auto& [m, c] : v.terms) {
    Interval term = enclose(c, prec);
    for (std::size_t p = 0; p < roots.size(); ++p)
      if (m & (1u << p)) term *= roots[p];
    sum += term;
  }
  return sum;
}

int sign_of(const PointValue& v) {
  if (v.terms.empty()) return 0;
  for (mpfr_prec_t prec : {128, 512}) {
    int s = enclose(v, prec).certain_sign();
    if (s != 0) return s;
  }
  std::uint32_t all = 0;
  for (const auto& [m, c] : v.terms) all |= m;
  if (all == 0) return sign_of(v.terms.begin()->second);
  std::size_t p = 31;
  while (!(all & (1u << p))) --p;
  const std::uint32_t bit = 1u << p;
  PointValue A, B;
  A.radicands = B.radicands = v.radicands;
  for (const auto& [m, c] : v.terms) {
    if (m & bit) B.terms[m ^ bit] = c;
    else A.terms[m] = c;
  }
  if (v.radicands[p] < 0) throw ArithmeticError("negative radicand at evaluation point");
  int sa = sign_of(A);
  if (v.radicands[p] == 0) return sa;
  int sb = sign_of(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  PointValue diff = pv_mul(A, A);
  PointValue b2 = pv_mul(B, B);
  for (const auto& [m, c] : b2.terms) {
    auto& slot = diff.terms[m];
    slot -= c * FieldElement(v.radicands[p]);
    if (slot.is_zero()) diff.terms.erase(m);
  }
  return sa * sign_of(diff);
}

RadicalExpr::RadicalExpr(const FieldElement& c) : table_(RadicalTable::empty()) {
  if (!c.is_zero()) terms_[0] = RatFun{UniPoly::constant(c), {}};
}

RadicalExpr RadicalExpr::constant(const FieldElement& c, TablePtr table) {
  RadicalExpr e(c);
  e.table_ = std::move(table);
  return e;
}

RadicalExpr RadicalExpr::t(TablePtr table) { return poly(UniPoly::x(), std::move(table)); }

RadicalExpr RadicalExpr::poly(const UniPoly& p, TablePtr table) {
  RadicalExpr e;
  e.table_ = std::move(table);
  if (!p.is_zero()) e.terms_[0] = RatFun{p, {}};
  return e;
}

RadicalExpr RadicalExpr::radical(TablePtr table, std::size_t p) {
  if (p >= table->size()) throw std::out_of_range("radical index");
  RadicalExpr e;
  e.table_ = std::move(table);
  e.terms_[1u << p] = RatFun{UniPoly::constant(FieldElement(1)), {}};
  return e;
}

RadicalExpr RadicalExpr::inverse_factor(TablePtr table, std::size_t i, int k) {
  RadicalExpr e = constant(FieldElement(1), std::move(table));
  return e.divide_by_factor(i, k);
}

RadicalExpr RadicalExpr::from_terms(TablePtr table, std::map<std::uint32_t, RatFun> terms) {
  RadicalExpr e;
  e.table_ = std::move(table);
  for (auto& [m, f] : terms) {
    normalize(f, *e.table_);
    if (!f.is_zero()) e.terms_[m] = std::move(f);
  }
  return e;
}

bool RadicalExpr::is_real() const {
  for (const auto& [m, f] : terms_)
    for (const auto& c : f.num.coeffs())
      if (!c.is_real()) return false;
  return true;
}

bool RadicalExpr::is_rational_function() const { return radical_mask() == 0; }

std::uint32_t RadicalExpr::radical_mask() const {
  std::uint32_t m = 0;
  for (const auto& [k, f] : terms_) m |= k;
  return m;
}

std::size_t RadicalExpr::radical_count() const {
  return static_cast<std::size_t>(__builtin_popcount(radical_mask()));
}

RadicalExpr RadicalExpr::component(std::uint32_t mask) const {
  RadicalExpr e;
  e.table_ = table_;
  auto it = terms_.find(mask);
  if (it != terms_.end()) e.terms_[0] = it->second;
  return e;
}

std::vector<int> RadicalExpr::max_denominator() const {
  std::vector<int> d;
  for (const auto& [m, f] : terms_) {
    if (f.den.size() > d.size()) d.resize(f.den.size(), 0);
    for (std::size_t i = 0; i < f.den.size(); ++i) d[i] = std::max(d[i], f.den[i]);
  }
  return d;
}

void RadicalExpr::adopt(const RadicalExpr& o) {
  if (table_ == o.table_ || o.table_->size() == 0) return;
  if (table_->size() == 0) {
    table_ = o.table_;
    return;
  }
  if (table_->quadratics() != o.table_->quadratics())
    throw std::invalid_argument("expressions over different radical tables");
}

RadicalExpr RadicalExpr::operator-() const {
  RadicalExpr e = *this;
  for (auto& [m, f] : e.terms_) f.num = -f.num;
  return e;
}

RadicalExpr& RadicalExpr::operator+=(const RadicalExpr& o) {
  adopt(o);
  for (const auto& [m, f] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = f;
      continue;
    }
    it->second = add(it->second, f, *table_);
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

RadicalExpr& RadicalExpr::operator-=(const RadicalExpr& o) { return *this += -o; }

RadicalExpr& RadicalExpr::operator*=(const RadicalExpr& o) {
  adopt(o);
  std::map<std::uint32_t, RatFun> out;
  for (const auto& [m1, f1] : terms_)
    for (const auto& [m2, f2] : o.terms_) {
      RatFun f = mul(f1, f2, *table_);
      std::uint32_t common = m1 & m2;
      for (std::size_t p = 0; common; ++p, common >>= 1)
        if (common & 1u) {
          f.num = f.num * table_->quadratic(p);
          normalize(f, *table_);
        }
      auto it = out.find(m1 ^ m2);
      if (it == out.end()) out[m1 ^ m2] = std::move(f);
      else it->second = add(it->second, f, *table_);
    }
  terms_.clear();
  for (auto& [m, f] : out)
    if (!f.is_zero()) terms_[m] = std::move(f);
  return *this;
}

RadicalExpr& RadicalExpr::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, f] : terms_) f.num *= s;
  return *this;
}

bool operator==(const RadicalExpr& a, const RadicalExpr& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.terms_.empty() || a.table_ == b.table_) return true;
  if (a.radical_mask() == 0) return true;
  return a.table_->quadratics() == b.table_->quadratics();
}

RadicalExpr RadicalExpr::pow(unsigned e) const {
  RadicalExpr r = constant(FieldElement(1), table_);
  RadicalExpr b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

RadicalExpr RadicalExpr::divide_by_radical(std::size_t p) const {
  return (*this * radical(table_, p)).divide_by_factor(3 + p);
}

RadicalExpr RadicalExpr::divide_by_factor(std::size_t i, int k) const {
  if (i >= table_->factor_count()) throw std::out_of_range("factor index");
  RadicalExpr e = *this;
  for (auto& [m, f] : e.terms_) {
    if (f.den.size() <= i) f.den.resize(i + 1, 0);
    f.den[i] += k;
    normalize(f, *table_);
  }
  return e;
}

RadicalExpr RadicalExpr::divide(const FieldElement& s) const { return *this * s.inverse(); }

RadicalExpr RadicalExpr::multiply_factors(const std::vector<int>& e) const {
  RadicalExpr r = *this;
  for (auto& [m, f] : r.terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      int cancel = std::min(den_at(f.den, i), e[i]);
      if (cancel > 0) f.den[i] -= cancel;
      if (e[i] - cancel > 0) f.num = f.num * factor_power(*table_, i, e[i] - cancel);
    }
    trim_den(f.den);
  }
  return r;
}

RadicalExpr RadicalExpr::conjugate(std::size_t p) const {
  RadicalExpr r = *this;
  for (auto& [m, f] : r.terms_)
    if (m & (1u << p)) f.num = -f.num;
  return r;
}

RadicalExpr RadicalExpr::derivative() const {
  RadicalExpr out;
  out.table_ = table_;
  const RadicalTable& T = *table_;
  for (const auto& [m, f] : terms_) {
    // (N/D)' = (N' prod f_i - N sum_i e_i f_i' prod_{j != i} f_j) / (D prod f_i), over i with e_i > 0
    RatFun r;
    r.den = f.den;
    UniPoly all = UniPoly::constant(FieldElement(1));
    for (std::size_t i = 0; i < f.den.size(); ++i)
      if (f.den[i] > 0) {
        all = all * T.factor(i);
        ++r.den[i];
      }
    r.num = f.num.derivative() * all;
    for (std::size_t i = 0; i < f.den.size(); ++i) {
      if (f.den[i] <= 0) continue;
      UniPoly rest = f.num * T.factor(i).derivative() * FieldElement(f.den[i]);
      for (std::size_t j = 0; j < f.den.size(); ++j)
        if (j != i && f.den[j] > 0) rest = rest * T.factor(j);
      r.num -= rest;
    }
    std::map<std::uint32_t, RatFun> parts{{m, r}};
    out += from_terms(table_, parts);
    for (std::size_t p = 0; p < T.size(); ++p) {
      if (!(m & (1u << p))) continue;
      RatFun q{f.num * T.quadratic(p).derivative() * FieldElement(Rational(1, 2)), f.den};
      if (q.den.size() < 4 + p) q.den.resize(4 + p, 0);
      ++q.den[3 + p];
      std::map<std::uint32_t, RatFun> extra{{m, q}};
      out += from_terms(table_, extra);
    }
  }
  return out;
}

RadicalExpr RadicalExpr::with_table(TablePtr table) const {
  if (radical_mask() >> table->size()) throw std::invalid_argument("table too small for expression");
  RadicalExpr r = *this;
  r.table_ = std::move(table);
  return r;
}

PointValue RadicalExpr::at(const Rational& t0) const {
  PointValue v;
  FieldElement x(t0);
  for (std::size_t p = 0; p < table_->size(); ++p) v.radicands.push_back(table_->quadratic(p).eval(x).rational());
  for (const auto& [m, f] : terms_) {
    FieldElement den(1);
    for (std::size_t i = 0; i < f.den.size(); ++i) {
      if (f.den[i] == 0) continue;
      FieldElement fi = table_->factor(i).eval(x);
      if (fi.is_zero()) throw ArithmeticError("pole at t = " + t0.get_str());
      den *= fi.pow(static_cast<unsigned>(f.den[i]));
    }
    FieldElement c = f.num.eval(x) / den;
    if (!c.is_zero()) v.terms[m] = c;
  }
  return v;
}

FieldElement RadicalExpr::eval_exact(const Rational& t0) const {
  PointValue v = at(t0);
  FieldElement sum;
  for (const auto& [m, c] : v.terms) {
    FieldElement term = c;
    for (std::size_t p = 0; p < v.radicands.size(); ++p)
      if (m & (1u << p)) term *= FieldElement::sqrt(v.radicands[p]);
    sum += term;
  }
  return sum;
}

Interval RadicalExpr::enclose_at(const Rational& t0, mpfr_prec_t prec) const { return enclose(at(t0), prec); }

int RadicalExpr::sign_at(const Rational& t0) const { return sign_of(at(t0)); }

std::string RadicalExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, f] : terms_) {
    std::string part = to_string_rf(f);
    if (m != 0) {
      bool bare = f.den.empty() && f.num.degree() == 0 && f.num.coeff(0) == FieldElement(1);
      part = bare ? mask_string(m).substr(1) : "(" + part + ")" + mask_string(m);
    }
    s += (first ? "" : " + ") + part;
    first = false;
  }
  return s;
}

std::string RadicalExpr::to_string_rf(const RatFun& f) const { return symcc::to_string(f, *table_); }

RadicalExpr CExpr::coeff(int k) const {
  if (k < 0 || k > degree()) return RadicalExpr();
  return coef_[static_cast<std::size_t>(k)];
}

bool CExpr::is_real() const {
  for (const auto& c : coef_)
    if (!c.is_real()) return false;
  return true;
}

void CExpr::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

CExpr CExpr::operator-() const {
  CExpr r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

CExpr& CExpr::operator+=(const CExpr& o) {
  if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size());
  for (std::size_t k = 0; k < o.coef_.size(); ++k) coef_[k] += o.coef_[k];
  trim();
  return *this;
}

CExpr& CExpr::operator-=(const CExpr& o) { return *this += -o; }

CExpr& CExpr::operator*=(const FieldElement& s) {
  for (auto& c : coef_) c *= s;
  trim();
  return *this;
}

CExpr operator*(const CExpr& a, const CExpr& b) {
  if (a.is_zero() || b.is_zero()) return CExpr();
  std::vector<RadicalExpr> r(a.coef_.size() + b.coef_.size() - 1);
  for (std::size_t i = 0; i < a.coef_.size(); ++i)
    for (std::size_t j = 0; j < b.coef_.size(); ++j) r[i + j] += a.coef_[i] * b.coef_[j];
  return CExpr(std::move(r));
}

RadicalExpr CExpr::at_c(const RadicalExpr& c) const {
  RadicalExpr r;
  for (std::size_t k = coef_.size(); k-- > 0;) r = r * c + coef_[k];
  return r;
}

RadicalExpr CExpr::homogenized(const RadicalExpr& num, const RadicalExpr& den) const {
  RadicalExpr r;
  const int d = degree();
  for (int k = 0; k <= d; ++k) r += coef_[static_cast<std::size_t>(k)] * num.pow(static_cast<unsigned>(k)) * den.pow(static_cast<unsigned>(d - k));
  return r;
}

std::string CExpr::to_string() const {
  if (coef_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    if (coef_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = coef_[k].to_string();
    if (k == 0) s += c;
    else s += "(" + c + ")*c" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

}  // namespace symcc
