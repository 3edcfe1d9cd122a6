#include "symcc/group/rep.hpp"

namespace symcc {

GroupRep GroupRep::from_generators(GroupPtr group, const std::vector<FieldMatrix>& generator_images, std::string label) {
  if (generator_images.size() != group->generator_count())
    throw ValidationFailed(label + ": expected " + std::to_string(group->generator_count()) + " generator matrices");
  GroupRep r;
  r.group_ = group;
  r.label_ = std::move(label);
  r.degree_ = generator_images[0].rows();
  for (std::size_t s = 0; s < generator_images.size(); ++s)
    if (generator_images[s].rows() != r.degree_ || generator_images[s].cols() != r.degree_)
      throw ValidationFailed(r.label_ + ": generator " + std::to_string(s + 1) + " matrix has wrong shape");
  const std::size_t n = group->order();
  r.matrices_.resize(n);
  r.matrices_[0] = FieldMatrix::identity(r.degree_);
  for (std::size_t k = 1; k < n; ++k)
    r.matrices_[k] = generator_images[static_cast<std::size_t>(group->parent_gen(k))] * r.matrices_[group->parent(k)];
  for (std::size_t s = 0; s < generator_images.size(); ++s) {
    std::size_t gs = group->generators()[s];
    if (r.matrices_[gs] != generator_images[s])
      throw ValidationFailed(r.label_ + ": generator " + std::to_string(s + 1) + " (" +
                             cycle_string(group->element(gs)) + ") image inconsistent with group relations");
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = group->multiply(gs, k);
      if (generator_images[s] * r.matrices_[k] != r.matrices_[p])
        throw ValidationFailed(r.label_ + ": homomorphism fails for " + cycle_string(group->element(gs)) + " * " +
                               cycle_string(group->element(k)));
    }
  }
  return r;
}

GroupRep GroupRep::permutation(GroupPtr group, const std::vector<Permutation>& generator_perms, std::string label) {
  std::vector<FieldMatrix> mats;
  for (const auto& p : generator_perms) {
    FieldMatrix m(p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) m(static_cast<std::size_t>(p[j]), j) = FieldElement(1);
    mats.push_back(std::move(m));
  }
  return from_generators(std::move(group), mats, std::move(label));
}

GroupRep GroupRep::trivial(GroupPtr group, std::size_t degree) {
  std::vector<FieldMatrix> mats(group->generator_count(), FieldMatrix::identity(degree));
  return from_generators(std::move(group), mats, "trivial");
}

Character::Character(const GroupRep& rep) : group_(rep.group()) {
  for (const auto& m : rep.matrices()) values_.push_back(trace(m));
}

std::vector<FieldElement> Character::class_values() const {
  std::vector<FieldElement> out;
  for (const auto& cls : group_->conjugacy_classes()) out.push_back(values_[cls.front()]);
  return out;
}

FieldElement char_inner_product(const Character& a, const Character& b) {
  if (a.group() != b.group()) throw std::invalid_argument("characters of different groups");
  const auto& G = *a.group();
  FieldElement sum;
  for (std::size_t g = 0; g < G.order(); ++g) sum += a(G.inverse(g)) * b(g);
  return sum / FieldElement(static_cast<long>(G.order()));
}

namespace {

FieldMatrix weighted_sum(const GroupRep& rep, const std::vector<FieldElement>& weights) {
  FieldMatrix sum(rep.degree(), rep.degree());
  for (std::size_t g = 0; g < weights.size(); ++g) {
    if (weights[g].is_zero()) continue;
    const FieldMatrix& m = rep(g);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) sum(r, c) += weights[g] * m(r, c);
  }
  return sum;
}

}  // namespace

FieldMatrix isotypic_projection(const GroupRep& rep, const GroupRep& irrep) {
  const auto& G = *rep.group();
  FieldElement scale = FieldElement(static_cast<long>(irrep.degree())) / FieldElement(static_cast<long>(G.order()));
  std::vector<FieldElement> w(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) w[g] = trace(irrep(G.inverse(g))) * scale;
  return weighted_sum(rep, w);
}

FieldMatrix transference(const GroupRep& rep, const GroupRep& irrep, std::size_t k, std::size_t i) {
  if (k < 1 || i < 1 || k > irrep.degree() || i > irrep.degree())
    throw std::out_of_range("transference index outside irrep degree");
  const auto& G = *rep.group();
  FieldElement scale = FieldElement(static_cast<long>(irrep.degree())) / FieldElement(static_cast<long>(G.order()));
  std::vector<FieldElement> w(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) w[g] = irrep(G.inverse(g))(k - 1, i - 1) * scale;
  return weighted_sum(rep, w);
}

GroupRep tensor_rep(const GroupRep& a, const GroupRep& b) {
  if (a.group() != b.group()) throw std::invalid_argument("tensor product of representations of different groups");
  std::vector<FieldMatrix> gens;
  for (std::size_t s = 0; s < a.group()->generator_count(); ++s) gens.push_back(kron(a.generator_image(s), b.generator_image(s)));
  return GroupRep::from_generators(a.group(), gens, a.label() + "(x)" + b.label());
}

GroupRep conjugate_rep(const GroupRep& rep, const FieldMatrix& basis) {
  FieldMatrix inv = inverse(basis);
  std::vector<FieldMatrix> gens;
  for (std::size_t s = 0; s < rep.group()->generator_count(); ++s) gens.push_back(inv * rep.generator_image(s) * basis);
  return GroupRep::from_generators(rep.group(), gens, rep.label());
}

}  // namespace symcc
