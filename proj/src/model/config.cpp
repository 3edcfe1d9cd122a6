#include "symcc/model/config.hpp"

#include <algorithm>

namespace symcc {

PolyhedronKind parse_kind(const std::string& name) {
  if (name == "tetrahedron") return PolyhedronKind::tetrahedron;
  if (name == "octahedron") return PolyhedronKind::octahedron;
  if (name == "cube") return PolyhedronKind::cube;
  throw std::invalid_argument("unknown polyhedron: " + name);
}

std::string kind_name(PolyhedronKind k) {
  switch (k) {
    case PolyhedronKind::tetrahedron: return "tetrahedron";
    case PolyhedronKind::octahedron: return "octahedron";
    case PolyhedronKind::cube: return "cube";
  }
  return "?";
}

Point Configuration::position(std::size_t i, const FieldElement& t0) const {
  const std::size_t n = outer.size();
  Point p = outer[i % n];
  if (i >= n)
    for (auto& x : p) x *= t0;
  return p;
}

std::size_t Configuration::irrep_for_label(int label) const {
  for (std::size_t j = 0; j < printed_label.size(); ++j)
    if (printed_label[j] == label) return j;
  throw std::out_of_range("no irrep with label " + std::to_string(label));
}

namespace {

FieldMatrix columns(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
  FieldMatrix m(pts[0].size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = pts[idx[c]][r];
  return m;
}

Point map_point(const FieldMatrix& R, const Point& p) {
  Point out(R.rows());
  for (std::size_t a = 0; a < R.rows(); ++a)
    for (std::size_t b = 0; b < R.cols(); ++b) out[a] += R(a, b) * p[b];
  return out;
}

}  // namespace

FieldMatrix derive_rho(const std::vector<Point>& points, const Permutation& perm) {
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  FieldMatrix A = columns(points, all);
  auto piv = pivot_columns(A);
  const std::size_t d = points[0].size();
  if (piv.size() != d) throw ValidationFailed("defining points do not span the space");
  std::vector<std::size_t> img;
  for (std::size_t i : piv) img.push_back(static_cast<std::size_t>(perm[i]));
  FieldMatrix R = columns(points, img) * inverse(columns(points, piv));
  for (std::size_t i = 0; i < points.size(); ++i)
    if (map_point(R, points[i]) != points[static_cast<std::size_t>(perm[i])])
      throw ValidationFailed("permutation " + cycle_string(perm) + " is not induced by a linear map");
  if (R.transpose() * R != FieldMatrix::identity(d))
    throw ValidationFailed("permutation " + cycle_string(perm) + " is not induced by an orthogonal map");
  return R;
}

Permutation derive_zeta(const FieldMatrix& R, const std::vector<Point>& outer) {
  const std::size_t n = outer.size();
  Permutation z(2 * n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    Point img = map_point(R, outer[j]);
    for (std::size_t k = 0; k < n; ++k)
      if (outer[k] == img) {
        z[j] = static_cast<int>(k);
        z[j + n] = static_cast<int>(k + n);
      }
    if (z[j] < 0) throw ValidationFailed("symmetry does not preserve the positions");
  }
  return z;
}

Configuration make_configuration(PolyhedronKind kind, std::vector<Point> outer, GroupData group,
                                 std::vector<int> printed_label) {
  Configuration c;
  c.kind = kind;
  c.dim = outer.at(0).size();
  c.outer = std::move(outer);
  c.group = std::move(group);
  const auto& G = *c.group.group;
  for (std::size_t s = 0; s < G.generator_count(); ++s) {
    FieldMatrix R = derive_rho(c.group.points, G.element(G.generators()[s]));
    c.zeta_generators.push_back(derive_zeta(R, c.outer));
    c.rho_generators.push_back(std::move(R));
  }
  c.rho = GroupRep::from_generators(c.group.group, c.rho_generators, "rho");
  c.theta = GroupRep::permutation(c.group.group, c.zeta_generators, "theta");
  if (printed_label.empty())
    for (std::size_t j = 0; j < c.group.irreps.size(); ++j) printed_label.push_back(static_cast<int>(j + 1));
  if (printed_label.size() != c.group.irreps.size()) throw std::invalid_argument("label table size mismatch");
  c.printed_label = std::move(printed_label);
  return c;
}

Configuration nested_polyhedron(PolyhedronKind kind) {
  auto pt = [](long x, long y, long z) { return Point{FieldElement(x), FieldElement(y), FieldElement(z)}; };
  switch (kind) {
    case PolyhedronKind::tetrahedron:
      return make_configuration(kind, {pt(1, 1, 1), pt(-1, -1, 1), pt(-1, 1, -1), pt(1, -1, -1)}, load_builtin_group("s4"), {});
    case PolyhedronKind::octahedron:
      return make_configuration(kind, {pt(1, 0, 0), pt(-1, 0, 0), pt(0, 1, 0), pt(0, -1, 0), pt(0, 0, 1), pt(0, 0, -1)},
                                load_builtin_group("oh"), {});
    case PolyhedronKind::cube:
      return make_configuration(kind,
                                {pt(1, 1, 1), pt(1, 1, -1), pt(1, -1, 1), pt(-1, 1, 1), pt(1, -1, -1), pt(-1, 1, -1),
                                 pt(-1, -1, 1), pt(-1, -1, -1)},
                                load_builtin_group("oh"), {1, 2, 3, 4, 5, 6, 9, 8, 7, 10});
  }
  throw std::invalid_argument("unknown polyhedron");
}

namespace {

// Coordinate a of sigma_j q_j - sigma_i q_i as a polynomial in t.
UniPoly coordinate(const Configuration& c, std::size_t i, std::size_t j, std::size_t a) {
  const std::size_t n = c.outer.size();
  auto term = [&](std::size_t k) {
    const FieldElement& x = c.outer[k % n][a];
    return k >= n ? UniPoly({FieldElement(0), x}) : UniPoly::constant(x);
  };
  return term(j) - term(i);
}

struct Distance {
  enum Kind { constant, inner, radical, linear } kind;
  Rational scale;   // constant r, or a in a*t^2, or a in a*(t - root)^2
  int root = 0;     // +1 or -1 for linear
  UniPoly quadratic;
};

Distance classify(const UniPoly& D, std::size_t i, std::size_t j) {
  if (D.is_zero()) throw CoincidentPositions("bodies " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  for (const auto& x : D.coeffs())
    if (!x.is_rational()) throw std::invalid_argument("irrational squared distance");
  Rational c = D.coeff(0).rational();
  if (D.degree() == 0) return {Distance::constant, c, 0, {}};
  if (D.degree() != 2) throw std::invalid_argument("squared distance is not quadratic in t");
  Rational a = D.coeff(2).rational(), b = D.coeff(1).rational();
  if (b == 0 && c == 0) return {Distance::inner, a, 0, {}};
  Rational disc = b * b - 4 * a * c;
  if (disc < 0) return {Distance::radical, a, 0, D};
  if (disc == 0) {
    Rational root = -b / (2 * a);
    if (root == 1) return {Distance::linear, a, 1, {}};
    if (root == -1) return {Distance::linear, a, -1, {}};
  }
  throw std::invalid_argument("unsupported distance " + D.to_string("t"));
}

// Radicands ordered by linear coefficient descending, then a, then c.
bool radicand_less(const UniPoly& x, const UniPoly& y) {
  Rational xb = x.coeff(1).rational(), yb = y.coeff(1).rational();
  if (xb != yb) return xb > yb;
  Rational xa = x.coeff(2).rational(), ya = y.coeff(2).rational();
  if (xa != ya) return xa < ya;
  return x.coeff(0).rational() < y.coeff(0).rational();
}

FieldElement inv_cube_root(const Rational& r) {
  // 1/(r*sqrt(r))
  return FieldElement::sqrt(r).inverse() / FieldElement(r);
}

}  // namespace

SMatrix build_S(const Configuration& config) {
  const std::size_t N = config.bodies();
  const std::size_t d = config.dim;
  std::vector<std::vector<Distance>> dist(N, std::vector<Distance>(N));
  std::vector<UniPoly> radicands;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      UniPoly D;
      for (std::size_t a = 0; a < d; ++a) {
        UniPoly x = coordinate(config, i, j, a);
        D += x * x;
      }
      dist[i][j] = classify(D, i, j);
      if (dist[i][j].kind == Distance::radical &&
          std::find(radicands.begin(), radicands.end(), dist[i][j].quadratic) == radicands.end())
        radicands.push_back(dist[i][j].quadratic);
    }
  std::sort(radicands.begin(), radicands.end(), radicand_less);
  SMatrix out;
  out.table = RadicalTable::make(radicands);
  const TablePtr& T = out.table;
  out.S = ParamMatrix(N * d, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      const Distance& ds = dist[i][j];
      RadicalExpr inv;
      switch (ds.kind) {
        case Distance::constant: inv = RadicalExpr::constant(inv_cube_root(ds.scale), T); break;
        case Distance::inner: inv = RadicalExpr::inverse_factor(T, 0, 3) * inv_cube_root(ds.scale); break;
        case Distance::radical: {
          std::size_t p = static_cast<std::size_t>(T->find(ds.quadratic));
          inv = RadicalExpr::radical(T, p).divide_by_factor(3 + p, 2);
          break;
        }
        case Distance::linear:
          // |t - 1| = 1 - t on (0,1)
          inv = RadicalExpr::inverse_factor(T, ds.root == 1 ? 1 : 2, 3) * inv_cube_root(ds.scale);
          if (ds.root == 1) inv = -inv;
          break;
      }
      for (std::size_t a = 0; a < d; ++a) {
        RadicalExpr x = RadicalExpr::poly(coordinate(config, i, j, a), T);
        out.S(i * d + a, j) = CExpr::affine(x * inv, -x);
      }
    }
  return out;
}

SymmetryVerdict check_symmetry(const ParamMatrix& S, const Configuration& config) {
  SymmetryVerdict v;
  GroupRep tr = config.theta_rho();
  const auto& G = *config.group.group;
  for (std::size_t s = 0; s < G.generator_count(); ++s) {
    ParamMatrix lhs = multiply(S, config.theta.generator_image(s));
    ParamMatrix rhs = multiply_left(tr.generator_image(s), S);
    for (std::size_t r = 0; r < S.rows(); ++r)
      for (std::size_t c = 0; c < S.cols(); ++c)
        if (lhs(r, c) != rhs(r, c)) {
          v.holds = false;
          v.generator = s;
          v.row = r;
          v.col = c;
          v.message = "generator " + std::to_string(s + 1) + " (" + cycle_string(G.element(G.generators()[s])) +
                      ") fails at entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
          return v;
        }
  }
  return v;
}

}  // namespace symcc
