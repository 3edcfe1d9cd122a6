#include "symcc/poly/unipoly.hpp"

#include <sstream>

namespace symcc {

namespace {
const FieldElement kZero;
}

UniPoly::UniPoly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(int degree, const FieldElement& c) {
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

const FieldElement& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const FieldElement& UniPoly::leading() const { return c_.empty() ? kZero : c_.back(); }

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<FieldElement> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * FieldElement(static_cast<long>(i));
  return UniPoly(std::move(r));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  FieldElement acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (degree() < d.degree()) return {{}, *this};
  FieldElement inv = d.leading().inverse();
  std::vector<FieldElement> rem = c_;
  std::vector<FieldElement> q(c_.size() - d.c_.size() + 1);
  const std::size_t dn = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const FieldElement& top = rem[k + dn];
    if (top.is_zero()) continue;
    FieldElement f = top * inv;
    for (std::size_t j = 0; j <= dn; ++j)
      if (!d.c_[j].is_zero()) rem[k + j] -= f * d.c_[j];
    q[k] = std::move(f);
  }
  rem.resize(dn);
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  return q;
}

bool UniPoly::divisible_by(const UniPoly& d) const { return divmod(d).second.is_zero(); }

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].to_string() << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace symcc
