#include "symcc/group/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace symcc {

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) throw std::invalid_argument("permutation degree mismatch");
  Permutation r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[static_cast<std::size_t>(h[i])];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size());
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : ",") << j + 1;
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<Permutation>& generators) {
  if (generators.empty()) throw std::invalid_argument("group needs at least one generator");
  FiniteGroup G;
  G.name_ = std::move(name);
  G.degree_ = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != G.degree_) throw ValidationFailed("generator " + cycle_string(g) + " has wrong degree");
    Permutation s = g;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i)) throw ValidationFailed("generator is not a permutation");
  }
  std::map<Permutation, std::size_t> index;
  Permutation id(G.degree_);
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  G.elements_.push_back(id);
  G.words_.push_back({});
  G.parent_.push_back(0);
  G.parent_gen_.push_back(-1);
  index[id] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Permutation p = compose(generators[s], G.elements_[k]);
      if (index.count(p)) continue;
      std::size_t n = G.elements_.size();
      index[p] = n;
      G.elements_.push_back(p);
      std::vector<int> w{static_cast<int>(s)};
      w.insert(w.end(), G.words_[k].begin(), G.words_[k].end());
      G.words_.push_back(std::move(w));
      G.parent_.push_back(k);
      G.parent_gen_.push_back(static_cast<int>(s));
      queue.push_back(n);
    }
  }
  for (const auto& g : generators) G.generators_.push_back(index.at(g));
  const std::size_t n = G.order();
  G.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) G.table_[a * n + b] = index.at(compose(G.elements_[a], G.elements_[b]));
  G.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) G.inverse_[a] = index.at(symcc::inverse(G.elements_[a]));
  G.class_of_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (G.class_of_[a] != n) continue;
    std::vector<std::size_t> cls{a};
    G.class_of_[a] = G.classes_.size();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t s : G.generators_) {
        std::size_t c = G.multiply(G.multiply(s, cls[i]), G.inverse(s));
        if (G.class_of_[c] == n) {
          G.class_of_[c] = G.classes_.size();
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    G.classes_.push_back(std::move(cls));
  }
  return G;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k] == p) return k;
  throw std::out_of_range("permutation " + cycle_string(p) + " is not in group " + name_);
}

void FiniteGroup::validate() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a) {
    if (multiply(a, inverse(a)) != 0 || multiply(inverse(a), a) != 0)
      throw ValidationFailed("inverse table inconsistent at element " + cycle_string(elements_[a]));
    if (multiply(0, a) != a || multiply(a, 0) != a) throw ValidationFailed("identity is not neutral");
  }
  if (n > 48) return;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw ValidationFailed("associativity fails at " + cycle_string(elements_[a]) + ", " +
                                 cycle_string(elements_[b]) + ", " + cycle_string(elements_[c]));
}

}  // namespace symcc
