#include "symcc/exact/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace symcc {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) throw ArithmeticError("radical key overflow");
  return static_cast<std::int64_t>(v);
}

// Squarefree kernel of a positive integer; returns {square root of the
// square part, kernel}.
std::pair<Integer, Integer> squarefree_integer(const Integer& n) {
  Integer rest = n;
  Integer root = 1;
  Integer kernel = 1;
  if (rest == 0) return {0, 0};
  if (mpz_sizeinbase(rest.get_mpz_t(), 2) > 80) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      return {root, 1};
    }
    throw ArithmeticError("radicand too large to reduce: " + rest.get_str());
  }
  for (unsigned long p = 2;; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    if (Integer(p) * pp > rest) {
      // rest has no prime factor < p, so rest = q, q*r, or q^2 with q, r >= p.
      if (mpz_perfect_square_p(rest.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
        root *= s;
        rest = 1;
      }
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2) kernel *= p;
  }
  kernel *= rest;
  return {root, kernel};
}

void add_term(std::vector<FieldElement::Term>& out, std::int64_t key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(out.begin(), out.end(), key,
                             [](const FieldElement::Term& t, std::int64_t k) { return t.radical < k; });
  if (it != out.end() && it->radical == key) {
    it->coeff += c;
    if (sgn(it->coeff) == 0) out.erase(it);
  } else {
    out.insert(it, FieldElement::Term{key, c});
  }
}

std::vector<std::int64_t> coprime_basis(std::vector<std::uint64_t> xs) {
  std::vector<std::uint64_t> basis;
  xs.erase(std::remove(xs.begin(), xs.end(), 1u), xs.end());
  while (!xs.empty()) {
    std::uint64_t x = xs.back();
    xs.pop_back();
    if (x == 1) continue;
    bool split = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      std::uint64_t g = std::gcd(x, basis[j]);
      if (g == 1) continue;
      std::uint64_t b = basis[j];
      basis.erase(basis.begin() + static_cast<long>(j));
      xs.push_back(g);
      if (b / g != 1) xs.push_back(b / g);
      if (x / g != 1) xs.push_back(x / g);
      split = true;
      break;
    }
    if (!split) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return {basis.begin(), basis.end()};
}

}  // namespace

std::pair<Rational, std::int64_t> squarefree_split(const Rational& r) {
  if (sgn(r) == 0) return {Rational(0), 1};
  // r = n/d = n*d / d^2
  Integer n = abs(r.get_num()) * r.get_den();
  auto [root, kernel] = squarefree_integer(n);
  if (!kernel.fits_slong_p()) throw ArithmeticError("radicand kernel exceeds 63 bits");
  Rational s(root, r.get_den());
  s.canonicalize();
  std::int64_t k = kernel.get_si();
  return {s, sgn(r) < 0 ? -k : k};
}

RadicalProduct multiply_radicals(std::int64_t a, std::int64_t b) {
  if (a == 1) return {b, 1};
  if (b == 1) return {a, 1};
  std::int64_t sign = (a < 0 && b < 0) ? -1 : 1;
  std::int64_t ua = a < 0 ? -a : a;
  std::int64_t ub = b < 0 ? -b : b;
  std::int64_t g = std::gcd(ua, ub);
  i128 key = static_cast<i128>(ua / g) * (ub / g);
  if ((a < 0) != (b < 0)) key = -key;
  return {checked_narrow(key), sign * g};
}

FieldElement::FieldElement(long v) {
  if (v != 0) terms_.push_back({1, Rational(v)});
}

FieldElement::FieldElement(const Rational& q) {
  if (sgn(q) != 0) {
    terms_.push_back({1, q});
    terms_.back().coeff.canonicalize();
  }
}

FieldElement FieldElement::from_terms(std::vector<Term> terms) {
  FieldElement x;
  x.terms_ = std::move(terms);
  return x;
}

FieldElement FieldElement::monomial(std::int64_t radical, const Rational& coeff) {
  FieldElement x;
  if (sgn(coeff) != 0) {
    x.terms_.push_back({radical, coeff});
    x.terms_.back().coeff.canonicalize();
  }
  return x;
}

FieldElement FieldElement::sqrt(const Rational& r) {
  auto [s, k] = squarefree_split(r);
  return monomial(k, s);
}

bool FieldElement::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radical == 1);
}

bool FieldElement::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.radical > 0; });
}

Rational FieldElement::rational() const {
  if (!is_rational()) throw ArithmeticError("element is not rational: " + to_string());
  return rational_part();
}

Rational FieldElement::rational_part() const {
  for (const auto& t : terms_)
    if (t.radical == 1) return t.coeff;
  return Rational(0);
}

FieldElement FieldElement::real_part() const {
  FieldElement r;
  for (const auto& t : terms_)
    if (t.radical > 0) r.terms_.push_back(t);
  return r;
}

FieldElement FieldElement::imag_part() const {
  // c*sqrt(-s) = i * c*sqrt(s)
  FieldElement r;
  for (const auto& t : terms_)
    if (t.radical < 0) r.terms_.push_back({-t.radical, t.coeff});
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.radical < b.radical; });
  return r;
}

FieldElement FieldElement::conj() const {
  FieldElement r = *this;
  for (auto& t : r.terms_)
    if (t.radical < 0) t.coeff = -t.coeff;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->radical < b->radical)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radical < a->radical) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (sgn(c) != 0) out.push_back({a->radical, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= q;
  }
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.is_rational()) {
    r = b;
    r *= a.terms_[0].coeff;
    return r;
  }
  if (b.is_rational()) {
    r = a;
    r *= b.terms_[0].coeff;
    return r;
  }
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto p = multiply_radicals(x.radical, y.radical);
      Rational c = x.coeff * y.coeff;
      if (p.factor != 1) c *= Rational(static_cast<long>(p.factor));
      add_term(r.terms_, p.key, c);
    }
  }
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) return FieldElement(Rational(1) / terms_[0].coeff);
  // x * conj_1(x) * conj_2(...) ... until the denominator is rational.
  FieldElement num(1);
  FieldElement den = *this;
  for (;;) {
    if (den.is_rational()) break;
    std::vector<std::uint64_t> mags;
    bool has_negative = false;
    for (const auto& t : den.terms_) {
      if (t.radical < 0) has_negative = true;
      mags.push_back(static_cast<std::uint64_t>(t.radical < 0 ? -t.radical : t.radical));
    }
    auto basis = coprime_basis(mags);
    // Flip terms depending on one generator: -1 first, then a prime-like factor.
    FieldElement flipped = den;
    if (has_negative) {
      for (auto& t : flipped.terms_)
        if (t.radical < 0) t.coeff = -t.coeff;
    } else {
      std::int64_t g = basis.front();
      for (auto& t : flipped.terms_)
        if (t.radical % g == 0) t.coeff = -t.coeff;
    }
    num *= flipped;
    den *= flipped;
  }
  num *= Rational(1) / den.terms_[0].coeff;
  return num;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_rational() && !b.is_zero()) {
    FieldElement r = a;
    r *= Rational(1) / b.terms_[0].coeff;
    return r;
  }
  return a * b.inverse();
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this = *this / o; }

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::vector<std::int64_t> FieldElement::radicals() const {
  std::vector<std::int64_t> r;
  for (const auto& t : terms_) r.push_back(t.radical);
  return r;
}

std::size_t FieldElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& t : terms_) {
    h = (h ^ std::hash<std::int64_t>()(t.radical)) * 1099511628211ull;
    h = (h ^ std::hash<std::string>()(t.coeff.get_str())) * 1099511628211ull;
  }
  return h;
}

std::string FieldElement::to_string() const {
  if (terms_.empty()) return "0";
  // rational part first, then real radicals, then imaginary ones
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto rank = [](std::int64_t k) { return k > 0 ? k : INT64_MAX / 2 - k; };
  std::sort(order.begin(), order.end(), [&](const Term* a, const Term* b) { return rank(a->radical) < rank(b->radical); });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::int64_t mag = t->radical < 0 ? -t->radical : t->radical;
    std::string base = mag == 1 ? "" : "sqrt(" + std::to_string(mag) + ")";
    std::string body;
    if (base.empty()) body = (c == 1 && t->radical < 0) ? "" : c.get_str();
    else if (c == 1) body = base;
    else if (c.get_num() == 1) body = base + "/" + c.get_den().get_str();
    else body = c.get_str() + "*" + base;
    if (t->radical < 0) body = body.empty() ? "i" : body + "*i";
    os << body;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("cannot parse field element '" + s_ + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement v;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    FieldElement t = term();
    v = neg ? -t : t;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else break;
    }
    return v;
  }

  FieldElement term() {
    FieldElement v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) v /= factor();
      else break;
    }
    return v;
  }

  FieldElement factor() {
    skip();
    if (eat('(')) {
      FieldElement v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('-')) return -factor();
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      FieldElement arg = expr();
      if (!eat(')')) fail("expected ')'");
      if (!arg.is_rational()) fail("sqrt of irrational");
      return FieldElement::sqrt(arg.rational());
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return FieldElement::i();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return FieldElement(Rational(Integer(s_.substr(start, pos_ - start))));
  }
};

}  // namespace

FieldElement FieldElement::parse(const std::string& text) { return Parser(text).parse(); }

FieldTower FieldTower::generated_by(const std::vector<Rational>& radicands) {
  FieldTower t;
  for (const auto& r : radicands) t = t.adjoin(r).tower;
  return t;
}

bool FieldTower::contains_radical(std::int64_t key) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), key);
}

FieldTower::Adjunction FieldTower::adjoin(const Rational& r) const {
  FieldElement root = FieldElement::sqrt(r);
  std::int64_t key = root.is_zero() ? 1 : root.terms().front().radical;
  if (contains_radical(key)) return {*this, true, root};
  FieldTower t = *this;
  t.radicands_.push_back(r);
  std::vector<std::int64_t> extra;
  for (auto m : monomials_) extra.push_back(multiply_radicals(m, key).key);
  t.monomials_.insert(t.monomials_.end(), extra.begin(), extra.end());
  std::sort(t.monomials_.begin(), t.monomials_.end());
  return {t, false, root};
}

bool FieldTower::contains(const FieldElement& x) const {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [&](const FieldElement::Term& t) { return contains_radical(t.radical); });
}

bool FieldTower::is_real() const {
  return std::all_of(monomials_.begin(), monomials_.end(), [](std::int64_t k) { return k > 0; });
}

std::vector<Rational> FieldTower::coords(const FieldElement& x) const {
  std::vector<Rational> c(monomials_.size());
  for (const auto& t : x.terms()) {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), t.radical);
    if (it == monomials_.end() || *it != t.radical) throw ArithmeticError("element outside tower");
    c[static_cast<std::size_t>(it - monomials_.begin())] = t.coeff;
  }
  return c;
}

}  // namespace symcc
