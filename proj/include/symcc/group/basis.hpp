#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symcc/group/rep.hpp"

namespace symcc {

class DegenerateImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// V: grouped by copy (v_1^i .. v_n^i for each i). U: grouped by row (v_k^1 .. v_k^c for each k).
enum class Ordering { by_copy, by_row };

// printed: transferences taken without the n_j/|G| factor, as in the tetrahedron displays.
// normalized: idempotent projectors and exact irrep matrices on each copy.
enum class BasisScaling { printed, normalized };

struct IsotypicPart {
  std::size_t irrep = 0;  // index into the irrep list
  std::string label;
  std::size_t multiplicity = 0;
  std::size_t degree = 0;
  std::vector<std::size_t> source_columns;                  // pivot columns of P^j_11
  std::vector<std::vector<std::vector<FieldElement>>> vectors;  // [copy i][row k] -> column vector
};

struct SymAdaptedBasis {
  GroupRep rep;
  std::vector<GroupRep> irreps;
  std::vector<IsotypicPart> parts;  // one per irrep, including multiplicity 0
  Ordering ordering = Ordering::by_copy;

  std::size_t size() const;
  std::vector<std::size_t> multiplicities() const;
  FieldMatrix matrix() const;
  // Column offset of the first vector belonging to irrep j in matrix().
  std::size_t offset(std::size_t j) const;
};

std::vector<std::size_t> multiplicities(const GroupRep& rep, const std::vector<GroupRep>& irreps);
SymAdaptedBasis symmetry_adapted_basis(const GroupRep& rep, const std::vector<GroupRep>& irreps,
                                       BasisScaling scaling = BasisScaling::printed);
SymAdaptedBasis reorder_for_equivariant(const SymAdaptedBasis& b);

}  // namespace symcc
