#include "symcc/poly/mobius.hpp"

#include <stdexcept>

#include "symcc/exact/interval.hpp"

namespace symcc {

namespace {

std::vector<std::vector<Integer>> binomials(int n) {
  std::vector<std::vector<Integer>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

Exponent unflatten(std::size_t flat, const Exponent& deg) {
  Exponent k(deg.size());
  for (std::size_t j = deg.size(); j-- > 0;) {
    std::size_t base = static_cast<std::size_t>(deg[j]) + 1;
    k[j] = static_cast<int>(flat % base);
    flat /= base;
  }
  return k;
}

}  // namespace

MobiusRestriction::MobiusRestriction(const MultiPoly& p, const Box& B) : p_(p) {
  if (B.dim() != p.nvars()) throw std::invalid_argument("box dimension does not match polynomial");
  deg_ = p.degrees();
  for (auto& d : deg_) d = std::max(d, 0);
  weight_.resize(deg_.size());
  for (std::size_t j = 0; j < deg_.size(); ++j) {
    const int D = deg_[j];
    const FieldElement& a = B.intervals[j].lo;
    const FieldElement& b = B.intervals[j].hi;
    auto C = binomials(D);
    std::vector<FieldElement> apow{FieldElement(1)}, bpow{FieldElement(1)};
    for (int s = 1; s <= D; ++s) {
      apow.push_back(apow.back() * a);
      bpow.push_back(bpow.back() * b);
    }
    auto& w = weight_[j];
    w.assign(static_cast<std::size_t>(D) + 1, std::vector<FieldElement>(static_cast<std::size_t>(D) + 1));
    for (int i = 0; i <= D; ++i) {
      for (int k = 0; k <= D; ++k) {
        FieldElement sum;
        for (int s = std::max(0, k - (D - i)); s <= std::min(i, k); ++s) {
          FieldElement term = apow[s] * bpow[i - s];
          term *= Rational(C[i][s] * C[D - i][k - s]);
          sum += term;
        }
        w[i][k] = std::move(sum);
      }
    }
  }
}

std::size_t MobiusRestriction::grid_size() const {
  std::size_t n = 1;
  for (int d : deg_) n *= static_cast<std::size_t>(d) + 1;
  return n;
}

FieldElement MobiusRestriction::coefficient(const Exponent& k) const {
  FieldElement sum;
  for (const auto& [e, c] : p_.terms()) {
    FieldElement m = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      const FieldElement& w = weight_[j][e[j]][k[j]];
      if (w.is_zero()) {
        m = FieldElement();
        break;
      }
      m *= w;
    }
    sum += m;
  }
  return sum;
}

MultiPoly MobiusRestriction::full() const {
  const std::size_t n = grid_size();
  std::vector<FieldElement> cur(n);
  auto flatten = [&](const Exponent& e) {
    std::size_t f = 0;
    for (std::size_t j = 0; j < e.size(); ++j) f = f * (static_cast<std::size_t>(deg_[j]) + 1) + static_cast<std::size_t>(e[j]);
    return f;
  };
  for (const auto& [e, c] : p_.terms()) cur[flatten(e)] = c;
  std::size_t stride = 1;
  for (std::size_t j = deg_.size(); j-- > 0;) {
    const std::size_t base = static_cast<std::size_t>(deg_[j]) + 1;
    std::vector<FieldElement> next(n);
    for (std::size_t f = 0; f < n; ++f) {
      const FieldElement& v = cur[f];
      if (v.is_zero()) continue;
      const std::size_t i = (f / stride) % base;
      const std::size_t rest = f - i * stride;
      for (std::size_t k = 0; k < base; ++k) {
        const FieldElement& w = weight_[j][i][k];
        if (!w.is_zero()) next[rest + k * stride] += v * w;
      }
    }
    cur = std::move(next);
    stride *= base;
  }
  MultiPoly r(p_.vars());
  for (std::size_t f = 0; f < n; ++f)
    if (!cur[f].is_zero()) r.add_term(unflatten(f, deg_), cur[f]);
  return r;
}

MultiPoly mobius_restrict(const MultiPoly& p, const Box& B) { return MobiusRestriction(p, B).full(); }

FieldElement mobius_coefficient(const MultiPoly& p, const Box& B, const Exponent& k) {
  return MobiusRestriction(p, B).coefficient(k);
}

int SignSummary::strict_sign() const {
  if (!complete || zero != 0) return 0;
  if (positive == total) return 1;
  if (negative == total) return -1;
  return 0;
}

SignSummary mobius_sign_summary(const MultiPoly& p, const Box& B, MobiusMode mode, bool stop_early) {
  MobiusRestriction R(p, B);
  SignSummary s;
  s.total = static_cast<long>(R.grid_size());
  auto tally = [&](const FieldElement& c) {
    int sg = sign_of(c);
    if (sg > 0) ++s.positive;
    else if (sg < 0) ++s.negative;
    else ++s.zero;
    return s.zero == 0 && (s.positive == 0 || s.negative == 0);
  };
  if (mode == MobiusMode::full) {
    MultiPoly full = R.full();
    s.zero = s.total - static_cast<long>(full.size());
    for (const auto& [e, c] : full.terms()) {
      bool ok = tally(c);
      if (!ok && stop_early) {
        s.complete = false;
        return s;
      }
    }
    return s;
  }
  for (std::size_t f = 0; f < R.grid_size(); ++f) {
    bool ok = tally(R.coefficient(unflatten(f, R.degrees())));
    if (!ok && stop_early) {
      s.complete = false;
      return s;
    }
  }
  return s;
}

}  // namespace symcc
