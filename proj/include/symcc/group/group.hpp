#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcc {

using Permutation = std::vector<int>;  // p[i] is the image of point i

Permutation compose(const Permutation& g, const Permutation& h);  // g after h
Permutation inverse(const Permutation& p);
std::string cycle_string(const Permutation& p);  // 1-based cycles, "()" for identity

class ValidationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Permutation group enumerated breadth-first from its generators.
// Element 0 is the identity; elements()[k] = gens[w[0]] o ... o gens[w[m]] with w = word(k).
class FiniteGroup {
 public:
  FiniteGroup() = default;
  static FiniteGroup from_permutations(std::string name, const std::vector<Permutation>& generators);

  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t k) const { return elements_[k]; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<int>& word(std::size_t k) const { return words_[k]; }
  // BFS parent: element k = gens[parent_gen(k)] o parent(k).
  std::size_t parent(std::size_t k) const { return parent_[k]; }
  int parent_gen(std::size_t k) const { return parent_gen_[k]; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t index_of(const Permutation& p) const;

  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(std::size_t k) const { return class_of_[k]; }

  // Exhaustive associativity and inverse checks; throws ValidationFailed.
  void validate() const;

 private:
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> parent_;
  std::vector<int> parent_gen_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

}  // namespace symcc
