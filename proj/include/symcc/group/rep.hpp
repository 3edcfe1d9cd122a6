#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symcc/group/group.hpp"
#include "symcc/group/matrix.hpp"

namespace symcc {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class GroupRep {
 public:
  GroupRep() = default;
  // Extends generator images along the group's BFS tree, then checks the
  // homomorphism property on every (generator, element) pair.
  static GroupRep from_generators(GroupPtr group, const std::vector<FieldMatrix>& generator_images,
                                  std::string label = {});
  static GroupRep permutation(GroupPtr group, const std::vector<Permutation>& generator_perms, std::string label = {});
  static GroupRep trivial(GroupPtr group, std::size_t degree);

  const GroupPtr& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  const FieldMatrix& operator()(std::size_t element) const { return matrices_[element]; }
  const std::vector<FieldMatrix>& matrices() const { return matrices_; }
  FieldMatrix generator_image(std::size_t s) const { return matrices_[group_->generators()[s]]; }

 private:
  GroupPtr group_;
  std::size_t degree_ = 0;
  std::string label_;
  std::vector<FieldMatrix> matrices_;
};

class Character {
 public:
  Character() = default;
  explicit Character(const GroupRep& rep);

  const GroupPtr& group() const { return group_; }
  const FieldElement& operator()(std::size_t element) const { return values_[element]; }
  // One value per conjugacy class, in class order.
  std::vector<FieldElement> class_values() const;

 private:
  GroupPtr group_;
  std::vector<FieldElement> values_;
};

FieldElement char_inner_product(const Character& a, const Character& b);
// (n_j/|G|) sum chi_j(g^-1) rep(g); idempotent.
FieldMatrix isotypic_projection(const GroupRep& rep, const GroupRep& irrep);
// (n_j/|G|) sum d^j_{ki}(g^-1) rep(g); k and i are 1-based.
FieldMatrix transference(const GroupRep& rep, const GroupRep& irrep, std::size_t k, std::size_t i);
GroupRep tensor_rep(const GroupRep& a, const GroupRep& b);
// Change of basis B^-1 rep(g) B for every element.
GroupRep conjugate_rep(const GroupRep& rep, const FieldMatrix& basis);

}  // namespace symcc
