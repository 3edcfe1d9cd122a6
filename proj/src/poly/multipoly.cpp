#include "symcc/poly/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symcc {

bool GrLex::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const FieldElement& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  Exponent e(p.nvars(), 0);
  e.at(index) = 1;
  p.add_term(e, FieldElement(1));
  return p;
}

MultiPoly MultiPoly::from_uni(std::vector<std::string> vars, std::size_t index, const UniPoly& q) {
  MultiPoly p(std::move(vars));
  Exponent e(p.nvars(), 0);
  for (int i = 0; i <= q.degree(); ++i) {
    e.at(index) = i;
    p.add_term(e, q.coeff(i));
  }
  return p;
}

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement() : it->second;
}

int MultiPoly::degree(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Exponent MultiPoly::degrees() const {
  Exponent d(vars_.size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) d[i] = std::max(d[i], e[i]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (vars_.empty()) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (vars_.empty()) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, FieldElement(1)), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point arity mismatch");
  // cache powers per variable
  Exponent d = degrees();
  std::vector<std::vector<FieldElement>> powers(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) {
    powers[v].push_back(FieldElement(1));
    for (int k = 1; k <= d[v]; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  FieldElement s;
  for (const auto& [e, c] : terms_) {
    FieldElement m = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) m *= powers[v][static_cast<std::size_t>(e[v])];
    s += m;
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      int k = it->first[v];
      if (k == 0) continue;
      os << "*" << vars_[v];
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace symcc
