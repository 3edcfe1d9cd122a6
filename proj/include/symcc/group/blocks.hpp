#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symcc/group/basis.hpp"

namespace symcc {

class NotEquivariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonzeroForbiddenBlock : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
struct Block {
  std::size_t irrep = 0;
  std::string label;
  std::size_t copies = 0;  // irrep degree
  Matrix<T> matrix;        // codomain multiplicity x domain multiplicity
};

template <class T>
struct BlockStructure {
  FieldMatrix P;  // domain basis, row ordering
  FieldMatrix Q;  // codomain basis, row ordering
  Matrix<T> transformed;
  std::vector<Block<T>> blocks;  // only irreps present on both sides
  bool forbidden_zero = false;
  bool copies_equal = false;
  bool real = false;
};

// Checks M rep_dom(g) == rep_cod(g) M on generators.
template <class T>
void check_equivariant(const Matrix<T>& M, const GroupRep& dom, const GroupRep& cod) {
  if (M.rows() != cod.degree() || M.cols() != dom.degree()) throw NotEquivariant("matrix shape does not match representations");
  for (std::size_t s = 0; s < dom.group()->generator_count(); ++s) {
    Matrix<T> lhs = multiply(M, dom.generator_image(s));
    Matrix<T> rhs = multiply_left(cod.generator_image(s), M);
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (std::size_t c = 0; c < M.cols(); ++c)
        if (!(lhs(r, c) == rhs(r, c)))
          throw NotEquivariant("generator " + std::to_string(s + 1) + " (" +
                               cycle_string(dom.group()->element(dom.group()->generators()[s])) + ") fails at entry (" +
                               std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
  }
}

namespace detail {

struct Slot {
  std::size_t irrep;
  std::size_t row;   // k
  std::size_t copy;  // i
};

inline std::vector<Slot> slots(const SymAdaptedBasis& b) {
  std::vector<Slot> out;
  for (const auto& p : b.parts)
    for (std::size_t k = 0; k < p.degree; ++k)
      for (std::size_t i = 0; i < p.multiplicity; ++i) out.push_back({p.irrep, k, i});
  return out;
}

}  // namespace detail

template <class T>
BlockStructure<T> block_decompose(const Matrix<T>& M, const SymAdaptedBasis& domain, const SymAdaptedBasis& codomain) {
  if (domain.irreps.size() != codomain.irreps.size()) throw std::invalid_argument("irrep lists differ");
  for (std::size_t j = 0; j < domain.irreps.size(); ++j) {
    FieldElement ip = char_inner_product(Character(domain.irreps[j]), Character(codomain.irreps[j]));
    if (ip != FieldElement(1)) throw std::invalid_argument("irrep " + std::to_string(j + 1) + " differs between bases");
  }
  check_equivariant(M, domain.rep, codomain.rep);
  BlockStructure<T> bs;
  bs.P = reorder_for_equivariant(domain).matrix();
  bs.Q = reorder_for_equivariant(codomain).matrix();
  FieldMatrix Qinv = inverse(bs.Q);
  bs.transformed = multiply_left(Qinv, multiply(M, bs.P));
  const auto rs = detail::slots(codomain);
  const auto cs = detail::slots(domain);
  const Matrix<T>& X = bs.transformed;
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (std::size_t c = 0; c < cs.size(); ++c) {
      bool allowed = rs[r].irrep == cs[c].irrep && rs[r].row == cs[c].row;
      if (!allowed && !X(r, c).is_zero())
        throw NonzeroForbiddenBlock("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") between " +
                                    codomain.parts[rs[r].irrep].label + " and " + domain.parts[cs[c].irrep].label +
                                    " is nonzero");
    }
  bs.forbidden_zero = true;
  bs.copies_equal = true;
  for (std::size_t j = 0; j < domain.parts.size(); ++j) {
    const auto& dp = domain.parts[j];
    const auto& cp = codomain.parts[j];
    if (dp.multiplicity == 0 || cp.multiplicity == 0) continue;
    const std::size_t r0 = codomain.offset(j), c0 = domain.offset(j);
    Block<T> blk;
    blk.irrep = j;
    blk.label = dp.label;
    blk.copies = dp.degree;
    blk.matrix = X.block(r0, c0, cp.multiplicity, dp.multiplicity);
    for (std::size_t k = 1; k < dp.degree; ++k) {
      Matrix<T> other = X.block(r0 + k * cp.multiplicity, c0 + k * dp.multiplicity, cp.multiplicity, dp.multiplicity);
      if (!(other == blk.matrix)) bs.copies_equal = false;
    }
    bs.blocks.push_back(std::move(blk));
  }
  bs.real = true;
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < X.cols(); ++c)
      if (!X(r, c).is_real()) bs.real = false;
  return bs;
}

}  // namespace symcc
