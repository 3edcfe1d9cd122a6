#include "symcc/group/basis.hpp"

#include <future>

namespace symcc {

std::size_t SymAdaptedBasis::size() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.multiplicity * p.degree;
  return n;
}

std::vector<std::size_t> SymAdaptedBasis::multiplicities() const {
  std::vector<std::size_t> m;
  for (const auto& p : parts) m.push_back(p.multiplicity);
  return m;
}

std::size_t SymAdaptedBasis::offset(std::size_t j) const {
  std::size_t off = 0;
  for (std::size_t l = 0; l < j; ++l) off += parts[l].multiplicity * parts[l].degree;
  return off;
}

FieldMatrix SymAdaptedBasis::matrix() const {
  FieldMatrix m(rep.degree(), size());
  std::size_t col = 0;
  for (const auto& p : parts) {
    if (ordering == Ordering::by_copy) {
      for (std::size_t i = 0; i < p.multiplicity; ++i)
        for (std::size_t k = 0; k < p.degree; ++k) m.set_column(col++, p.vectors[i][k]);
    } else {
      for (std::size_t k = 0; k < p.degree; ++k)
        for (std::size_t i = 0; i < p.multiplicity; ++i) m.set_column(col++, p.vectors[i][k]);
    }
  }
  return m;
}

std::vector<std::size_t> multiplicities(const GroupRep& rep, const std::vector<GroupRep>& irreps) {
  Character chi(rep);
  std::vector<std::size_t> out;
  for (const auto& r : irreps) {
    FieldElement c = char_inner_product(chi, Character(r));
    if (!c.is_rational() || c.rational().get_den() != 1 || c.rational() < 0)
      throw DegenerateImage("multiplicity of " + r.label() + " is not a nonnegative integer: " + c.to_string());
    out.push_back(c.rational().get_num().get_ui());
  }
  return out;
}

namespace {

std::vector<FieldElement> mat_vec(const FieldMatrix& m, const std::vector<FieldElement>& v) {
  std::vector<FieldElement> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

IsotypicPart build_part(const GroupRep& rep, const GroupRep& irrep, std::size_t j, std::size_t c, BasisScaling scaling) {
  IsotypicPart part;
  part.irrep = j;
  part.label = irrep.label();
  part.multiplicity = c;
  part.degree = irrep.degree();
  if (c == 0) return part;
  FieldElement scale(1);
  if (scaling == BasisScaling::printed)
    scale = FieldElement(static_cast<long>(rep.group()->order())) / FieldElement(static_cast<long>(irrep.degree()));
  FieldMatrix p11 = transference(rep, irrep, 1, 1) * scale;
  part.source_columns = pivot_columns(p11);
  if (part.source_columns.size() != c)
    throw DegenerateImage("image of P^" + std::to_string(j + 1) + "_11 (" + irrep.label() + ") has rank " +
                          std::to_string(part.source_columns.size()) + ", multiplicity is " + std::to_string(c));
  std::vector<FieldMatrix> p1k{p11};
  for (std::size_t k = 2; k <= irrep.degree(); ++k) p1k.push_back(transference(rep, irrep, 1, k) * scale);
  for (std::size_t col : part.source_columns) {
    std::vector<std::vector<FieldElement>> copy;
    auto v1 = p11.column(col);
    copy.push_back(v1);
    for (std::size_t k = 1; k < p1k.size(); ++k) copy.push_back(mat_vec(p1k[k], v1));
    part.vectors.push_back(std::move(copy));
  }
  return part;
}

}  // namespace

SymAdaptedBasis symmetry_adapted_basis(const GroupRep& rep, const std::vector<GroupRep>& irreps, BasisScaling scaling) {
  SymAdaptedBasis b;
  b.rep = rep;
  b.irreps = irreps;
  b.ordering = Ordering::by_copy;
  auto mult = multiplicities(rep, irreps);
  std::vector<std::future<IsotypicPart>> jobs;
  for (std::size_t j = 0; j < irreps.size(); ++j)
    jobs.push_back(std::async(std::launch::async, build_part, std::cref(rep), std::cref(irreps[j]), j, mult[j], scaling));
  for (auto& f : jobs) b.parts.push_back(f.get());
  if (b.size() != rep.degree())
    throw DegenerateImage("basis has " + std::to_string(b.size()) + " vectors for a space of dimension " +
                          std::to_string(rep.degree()));
  if (rank(b.matrix()) != rep.degree()) throw DegenerateImage("symmetry-adapted vectors are linearly dependent");
  return b;
}

SymAdaptedBasis reorder_for_equivariant(const SymAdaptedBasis& b) {
  SymAdaptedBasis r = b;
  r.ordering = Ordering::by_row;
  return r;
}

}  // namespace symcc
