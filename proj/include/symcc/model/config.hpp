#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symcc/group/blocks.hpp"
#include "symcc/group/data.hpp"
#include "symcc/model/radical.hpp"

namespace symcc {

class CoincidentPositions : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PolyhedronKind { tetrahedron, octahedron, cube };

PolyhedronKind parse_kind(const std::string& name);
std::string kind_name(PolyhedronKind k);

using Point = std::vector<FieldElement>;

// Two nested copies of one polyhedron: bodies 1..n at q_j, bodies n+1..2n at t*q_j.
struct Configuration {
  PolyhedronKind kind = PolyhedronKind::tetrahedron;
  std::size_t dim = 3;
  std::vector<Point> outer;
  GroupData group;
  std::vector<FieldMatrix> rho_generators;
  std::vector<Permutation> zeta_generators;  // on the 2n bodies
  GroupRep rho;
  GroupRep theta;
  // printed_label[j] is the printed index of data irrep j (1-based).
  std::vector<int> printed_label;

  std::size_t bodies() const { return 2 * outer.size(); }
  // Position of body i at t = t0.
  Point position(std::size_t i, const FieldElement& t0) const;
  GroupRep theta_rho() const { return tensor_rep(theta, rho); }
  // Data irrep index for a printed label.
  std::size_t irrep_for_label(int label) const;
};

// Orthogonal matrix mapping the data points as the permutation prescribes.
FieldMatrix derive_rho(const std::vector<Point>& points, const Permutation& perm);
// Index map induced by R on the outer positions, extended to the inner copy.
Permutation derive_zeta(const FieldMatrix& R, const std::vector<Point>& outer);

Configuration make_configuration(PolyhedronKind kind, std::vector<Point> outer, GroupData group,
                                 std::vector<int> printed_label);
Configuration nested_polyhedron(PolyhedronKind kind);

using ParamMatrix = Matrix<CExpr>;

struct SMatrix {
  TablePtr table;
  ParamMatrix S;
};

SMatrix build_S(const Configuration& config);

struct SymmetryVerdict {
  bool holds = true;
  std::size_t generator = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;
};

SymmetryVerdict check_symmetry(const ParamMatrix& S, const Configuration& config);

}  // namespace symcc
