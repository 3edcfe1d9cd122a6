#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "printed.hpp"
#include "symcc/model/config.hpp"
#include "symcc/model/lift.hpp"
#include "symcc/model/reparam.hpp"

using namespace symcc;

namespace {

FieldElement sqrt_q(long n) { return FieldElement::sqrt(Rational(n)); }

RadicalExpr rq(long n, long d = 1) { return RadicalExpr(FieldElement(Rational(n, d))); }

BlockStructure<CExpr> decompose(const Configuration& c, const SMatrix& s) {
  auto dom = symmetry_adapted_basis(c.theta, c.group.irreps);
  auto cod = symmetry_adapted_basis(c.theta_rho(), c.group.irreps);
  return block_decompose(s.S, dom, cod);
}

}  // namespace

TEST_CASE("configurations derive orthogonal generators") {
  for (auto k : {PolyhedronKind::tetrahedron, PolyhedronKind::octahedron, PolyhedronKind::cube}) {
    auto c = nested_polyhedron(k);
    CHECK(c.rho.degree() == 3);
    CHECK(c.theta.degree() == c.bodies());
    for (const auto& R : c.rho_generators) CHECK(R.transpose() * R == FieldMatrix::identity(3));
  }
  auto tet = nested_polyhedron(PolyhedronKind::tetrahedron);
  CHECK(tet.position(5, FieldElement(Rational(1, 2)))[0] == FieldElement(Rational(-1, 2)));
  auto cube = nested_polyhedron(PolyhedronKind::cube);
  CHECK(cube.irrep_for_label(7) == 8);
  CHECK(cube.irrep_for_label(9) == 6);
  auto oct = nested_polyhedron(PolyhedronKind::octahedron);
  CHECK_THROWS_AS(derive_rho(oct.group.points, Permutation{2, 1, 0, 3, 4, 5}), ValidationFailed);
}

TEST_CASE("parse_kind") {
  CHECK(parse_kind("cube") == PolyhedronKind::cube);
  CHECK(kind_name(PolyhedronKind::octahedron) == "octahedron");
  CHECK_THROWS(parse_kind("dodecahedron"));
}

TEST_CASE("S has the expected shape and radicals") {
  auto tet = build_S(nested_polyhedron(PolyhedronKind::tetrahedron));
  CHECK(tet.S.rows() == 24);
  CHECK(tet.S.cols() == 8);
  REQUIRE(tet.table->size() == 1);
  CHECK(tet.table->quadratic(0) == UniPoly({FieldElement(3), FieldElement(2), FieldElement(3)}));

  auto oct = build_S(nested_polyhedron(PolyhedronKind::octahedron));
  CHECK(oct.S.rows() == 36);
  CHECK(oct.S.cols() == 12);
  CHECK(oct.table->size() == 1);

  auto cube = build_S(nested_polyhedron(PolyhedronKind::cube));
  CHECK(cube.S.rows() == 48);
  CHECK(cube.S.cols() == 16);
  REQUIRE(cube.table->size() == 2);
  CHECK(cube.table->quadratic(0) == UniPoly({FieldElement(3), FieldElement(2), FieldElement(3)}));
  CHECK(cube.table->quadratic(1) == UniPoly({FieldElement(3), FieldElement(-2), FieldElement(3)}));
  for (std::size_t j = 0; j < 16; ++j)
    for (std::size_t a = 0; a < 3; ++a) CHECK(cube.S(j * 3 + a, j).is_zero());
}

TEST_CASE("S entries match a direct floating evaluation") {
  std::mt19937_64 rng(11);
  for (auto k : {PolyhedronKind::tetrahedron, PolyhedronKind::octahedron, PolyhedronKind::cube}) {
    auto conf = nested_polyhedron(k);
    auto s = build_S(conf);
    const std::size_t N = conf.bodies();
    for (int trial = 0; trial < 70; ++trial) {
      std::uniform_int_distribution<int> num(1, 998);
      Rational t0(num(rng), 999);
      t0.canonicalize();
      oracle::Real tr = oracle::to_real(t0);
      auto pos = [&](std::size_t i, std::size_t a) {
        oracle::Real x = oracle::value(conf.outer[i % (N / 2)][a]);
        return i >= N / 2 ? x * tr : x;
      };
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          if (i == j) continue;
          oracle::Real d2 = 0;
          for (std::size_t a = 0; a < 3; ++a) d2 += (pos(j, a) - pos(i, a)) * (pos(j, a) - pos(i, a));
          oracle::Real inv = 1 / (d2 * sqrt(d2));
          for (std::size_t a = 0; a < 3; ++a) {
            oracle::Real diff = pos(j, a) - pos(i, a);
            const CExpr& e = s.S(i * 3 + a, j);
            double c0 = e.coeff(0).enclose_at(t0, 200).midpoint();
            double c1 = e.coeff(1).enclose_at(t0, 200).midpoint();
            CHECK(std::abs(c0 - static_cast<double>(diff * inv)) < 1e-9 * (1 + std::abs(c0)));
            CHECK(std::abs(c1 + static_cast<double>(diff)) < 1e-12);
          }
        }
    }
  }
}

TEST_CASE("two bodies on a line") {
  std::vector<Point> outer{{FieldElement(1)}, {FieldElement(-1)}};
  auto data = parse_group_data(R"J({
    "name": "C2", "degree": 2, "order": 2, "generators": ["(1,2)"],
    "points": [["1"], ["-1"]],
    "irreps": [{"label": "+", "degree": 1, "matrices": [[["1"]]]},
               {"label": "-", "degree": 1, "matrices": [[["-1"]]]}]})J");
  auto conf = make_configuration(PolyhedronKind::tetrahedron, outer, data, {});
  CHECK(conf.dim == 1);
  auto s = build_S(conf);
  // q2 - q1 = -2, |.|^3 = 8
  CHECK(s.S(0, 1) == CExpr::affine(rq(-1, 4), rq(2)));
  CHECK(s.S(1, 0) == CExpr::affine(rq(1, 4), rq(-2)));
  CHECK(check_symmetry(s.S, conf).holds);
}

TEST_CASE("coincident positions are rejected") {
  auto conf = nested_polyhedron(PolyhedronKind::octahedron);
  conf.outer.push_back(conf.outer[0]);
  CHECK_THROWS_AS(build_S(conf), CoincidentPositions);
}

TEST_CASE("symmetry identity holds exactly") {
  for (auto k : {PolyhedronKind::tetrahedron, PolyhedronKind::octahedron, PolyhedronKind::cube}) {
    auto conf = nested_polyhedron(k);
    auto s = build_S(conf);
    auto v = check_symmetry(s.S, conf);
    CHECK_MESSAGE(v.holds, v.message);
    auto bad = s.S;
    bad(1, 0) += CExpr(rq(1, 1000));
    auto w = check_symmetry(bad, conf);
    CHECK_FALSE(w.holds);
    CHECK(w.message.find("fails at entry") != std::string::npos);
  }
}

TEST_CASE("tetrahedron first block matches the printed entries") {
  auto conf = nested_polyhedron(PolyhedronKind::tetrahedron);
  auto s = build_S(conf);
  auto bs = decompose(conf, s);
  CHECK(bs.forbidden_zero);
  CHECK(bs.copies_equal);
  CHECK(bs.real);
  REQUIRE(bs.blocks.size() == 2);
  const auto& T1 = bs.blocks[0].matrix;
  REQUIRE(T1.rows() == 2);
  REQUIRE(T1.cols() == 2);
  const auto& T = s.table;
  RadicalExpr t = RadicalExpr::t(T), u = RadicalExpr::radical(T, 0);
  RadicalExpr u3inv = u.divide_by_factor(3, 2);  // Q^{-3/2}
  FieldElement r2 = sqrt_q(2), r3 = sqrt_q(3);
  CHECK(T1(0, 0) == CExpr::affine(RadicalExpr::constant(FieldElement(Rational(-3, 8)) * r2, T), rq(12)));
  CHECK(T1(0, 1) == CExpr::affine(-(rq(3) * (t + rq(3)) * u3inv) -
                                      RadicalExpr::inverse_factor(T, 1, 2) * (r3 * FieldElement(Rational(1, 3))),
                                  rq(12)));
  CHECK(T1(1, 0) == CExpr::affine(-(rq(3) * (rq(3) * t + rq(1)) * u3inv) +
                                      RadicalExpr::inverse_factor(T, 1, 2) * (r3 * FieldElement(Rational(1, 3))),
                                  rq(12) * t));
  CHECK(T1(1, 1) == CExpr::affine(RadicalExpr::inverse_factor(T, 0, 2) * (FieldElement(Rational(-3, 8)) * r2),
                                  rq(12) * t));
  const auto& t4 = bs.blocks[1];
  CHECK(t4.copies == 3);
  CHECK(t4.matrix.rows() == 4);
  CHECK(t4.matrix.cols() == 2);
}

TEST_CASE("octahedron and cube block inventories") {
  struct Want {
    PolyhedronKind kind;
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> blocks;  // printed label, rows x cols
  };
  std::vector<Want> wants{
      {PolyhedronKind::octahedron, {{1, {2, 2}}, {5, {2, 2}}, {9, {4, 2}}}},
      {PolyhedronKind::cube, {{1, {2, 2}}, {2, {2, 2}}, {7, {4, 2}}, {8, {4, 2}}}},
  };
  for (const auto& want : wants) {
    auto conf = nested_polyhedron(want.kind);
    auto s = build_S(conf);
    auto bs = decompose(conf, s);
    CHECK(bs.forbidden_zero);
    CHECK(bs.copies_equal);
    CHECK(bs.real);
    REQUIRE(bs.blocks.size() == want.blocks.size());
    for (const auto& [label, shape] : want.blocks) {
      std::size_t j = conf.irrep_for_label(label);
      bool found = false;
      for (const auto& b : bs.blocks)
        if (b.irrep == j) {
          found = true;
          CHECK(b.matrix.rows() == shape.first);
          CHECK(b.matrix.cols() == shape.second);
        }
      CHECK_MESSAGE(found, "label " << label);
    }
  }
}

namespace {

struct Det {
  RadicalExpr a1, a0;
};

Det det_of(const Matrix<CExpr>& M) {
  CExpr d = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  REQUIRE(d.degree() <= 1);
  return {d.coeff(1), d.coeff(0)};
}

Matrix<CExpr> first_block(PolyhedronKind k, int label = 1) {
  auto conf = nested_polyhedron(k);
  auto s = build_S(conf);
  auto bs = decompose(conf, s);
  for (auto& b : bs.blocks)
    if (conf.printed_label[b.irrep] == label) return b.matrix;
  FAIL("block not found");
  return {};
}

using printed::from_strings;
using printed::proportional;

}  // namespace

TEST_CASE("reparametrization domain and kappa") {
  UniPoly q({FieldElement(3), FieldElement(2), FieldElement(3)});
  IntervalQ I = reparam_domain(q);
  CHECK(I.lo == sqrt_q(2));
  CHECK(I.hi == sqrt_q(2) + sqrt_q(3));
  auto T = RadicalTable::make({q});
  auto r = reparametrize(RadicalExpr::radical(T, 0));
  CHECK(r.kappa(I.lo).is_zero());
  CHECK(r.kappa(I.hi) == FieldElement(1));
  // kappa' = A (w^2 + 1) / w^2 has no zero and positive sign on the domain
  CHECK(count_roots(r.kappa_derivative_numerator(), I) == 0);
  CHECK(sign_of(r.kappa_derivative_numerator().eval(FieldElement(2))) > 0);
  CHECK(r.kappa(r.inverse(Rational(1, 2))) == FieldElement(Rational(1, 2)));
  CHECK_THROWS_AS(reparametrize(RadicalExpr::t(T)), NotSingleRadical);
}

TEST_CASE("tetrahedron alpha numerators after reparametrization") {
  auto d = det_of(first_block(PolyhedronKind::tetrahedron));
  auto r1 = reparametrize(d.a1);
  UniPoly printed1 = from_strings({"-6*sqrt(6)", "42*sqrt(3)", "-39*sqrt(6)+144", "-42*sqrt(3)+288*sqrt(2)",
                                   "129*sqrt(6)-3672", "-210*sqrt(3)+1800*sqrt(2)", "540*sqrt(6)+8496", "-4320*sqrt(2)",
                                   "540*sqrt(6)-8568", "210*sqrt(3)+2088*sqrt(2)", "129*sqrt(6)+3888",
                                   "42*sqrt(3)+432*sqrt(2)", "-39*sqrt(6)", "-42*sqrt(3)", "-6*sqrt(6)"});
  CHECK(r1.numerator.degree() == 14);
  CHECK(proportional(r1.numerator, printed1));
  CHECK(count_roots(r1.numerator, r1.domain) == 0);

  auto r0 = reparametrize(d.a0);
  UniPoly printed0 = from_strings({"-81", "810*sqrt(2)", "-4833", "-972*sqrt(2)", "9477", "256770*sqrt(2)", "-1733643",
                                   "1413936*sqrt(2)", "3448278", "-5534892*sqrt(2)", "-3077514", "8276472*sqrt(2)",
                                   "2820906", "-5711148*sqrt(2)", "-3340278", "1548720*sqrt(2)", "1995435",
                                   "426114*sqrt(2)", "96795", "14580*sqrt(2)", "6561", "810*sqrt(2)", "81", "0", "0"});
  // The printed polynomial keeps the factor w^2 - 2 sqrt2 w - 1 with roots sqrt2 +- sqrt3.
  UniPoly extra({FieldElement(-1), FieldElement(-2) * sqrt_q(2), FieldElement(1)});
  CHECK(proportional(r0.numerator * extra, printed0));
  IntervalQ wide = IntervalQ::open(sqrt_q(2), FieldElement(4));
  CHECK(count_roots(printed0, wide) == 1);
  CHECK(printed0.eval(sqrt_q(2) + sqrt_q(3)).is_zero());
  CHECK(count_roots(r0.numerator, r0.domain) == 0);
}

TEST_CASE("reparametrized function reproduces the expression") {
  auto d = det_of(first_block(PolyhedronKind::tetrahedron));
  for (const auto* e : {&d.a1, &d.a0}) {
    auto r = reparametrize(*e);
    for (Rational t0 : {Rational(1, 2), Rational(1, 7), Rational(9, 10)}) {
      FieldElement w0 = r.inverse(t0);
      CHECK(r.kappa(w0) == FieldElement(t0));
      Interval lhs = enclose(r.numerator.eval(w0), 200) * enclose(r.denominator.eval(w0), 200).reciprocal();
      Interval rhs = e->enclose_at(t0, 200);
      CHECK(std::abs(lhs.midpoint() - rhs.midpoint()) < 1e-40 * (1 + std::abs(rhs.midpoint())));
    }
  }
}

TEST_CASE("endpoint limits from Laurent leading terms") {
  auto d = det_of(first_block(PolyhedronKind::tetrahedron));
  auto l = endpoint_limit(d.a1, 0);
  CHECK(l.order == -2);
  CHECK(l.sign < 0);
  CHECK(l.coefficient == FieldElement(Rational(-9, 2)) * sqrt_q(2));
  l = endpoint_limit(d.a1, 1);
  CHECK(l.order == -1);
  CHECK(l.sign < 0);
  l = endpoint_limit(d.a0, 0);
  CHECK(l.infinite());
  CHECK(l.sign > 0);
  l = endpoint_limit(d.a0, 1);
  CHECK(l.order == -4);
  CHECK(l.coefficient == FieldElement(Rational(1, 3)));
  // finite limit and a vanishing limit
  auto T = RadicalTable::empty();
  l = endpoint_limit(RadicalExpr::poly(UniPoly({FieldElement(2), FieldElement(1)}), T), 0);
  CHECK(l.order == 0);
  CHECK(l.coefficient == FieldElement(2));
  l = endpoint_limit(RadicalExpr::poly(UniPoly({FieldElement(-1), FieldElement(0), FieldElement(1)}), T), 1);
  CHECK(l.order == 1);
  CHECK(l.coefficient == FieldElement(-2));
}

TEST_CASE("derivative obeys the product rule") {
  auto C1 = first_block(PolyhedronKind::cube);
  RadicalExpr a = C1(0, 1).coeff(0), b = C1(1, 0).coeff(0);
  CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  auto T = a.table();
  RadicalExpr u = RadicalExpr::radical(T, 0);
  CHECK(u.derivative() * u * rq(2) == RadicalExpr::poly(T->quadratic(0).derivative(), T));
}

TEST_CASE("cube first and second blocks match the printed entries") {
  auto C1 = first_block(PolyhedronKind::cube, 1);
  auto C2 = first_block(PolyhedronKind::cube, 2);
  const auto T = C1(0, 1).coeff(0).table();
  RadicalExpr t = RadicalExpr::t(T);
  RadicalExpr u1 = RadicalExpr::radical(T, 0).divide_by_factor(3, 2), u2 = RadicalExpr::radical(T, 1).divide_by_factor(4, 2);
  FieldElement r2 = sqrt_q(2), r3 = sqrt_q(3);
  FieldElement k1 = FieldElement(Rational(-1, 12)) * r3 - FieldElement(Rational(3, 8)) * r2 - FieldElement(Rational(3, 4));
  RadicalExpr sq_plus = RadicalExpr::inverse_factor(T, 2, 3) * (t + rq(1)) * (r3 / FieldElement(3));
  RadicalExpr sq_minus = RadicalExpr::inverse_factor(T, 1, 3) * (t - rq(1)) * (r3 / FieldElement(3));
  CHECK(C1(0, 0) == CExpr::affine(RadicalExpr::constant(k1, T), rq(24)));
  CHECK(C1(0, 1) == CExpr::affine(-sq_plus - rq(3) * (t + rq(3)) * u1 + rq(3) * (t - rq(3)) * u2 - sq_minus, rq(24)));
  CHECK(C1(1, 0) == CExpr::affine(-sq_plus - rq(3) * (rq(3) * t + rq(1)) * u1 - rq(3) * (rq(3) * t - rq(1)) * u2 + sq_minus,
                                  rq(24) * t));
  CHECK(C1(1, 1) == CExpr::affine(RadicalExpr::inverse_factor(T, 0, 2) * k1, rq(24) * t));
  FieldElement k2 = FieldElement(Rational(1, 12)) * r3 - FieldElement(Rational(3, 8)) * r2 + FieldElement(Rational(3, 4));
  CHECK(C2(0, 0) == CExpr(RadicalExpr::constant(k2, T)));
  CHECK(C2(0, 1) == CExpr(sq_plus - rq(3) * (t + rq(3)) * u1 - rq(3) * (t - rq(3)) * u2 - sq_minus));
  CHECK(C2(1, 0) == CExpr(sq_plus - rq(3) * (rq(3) * t + rq(1)) * u1 + rq(3) * (rq(3) * t - rq(1)) * u2 + sq_minus));
  CHECK(C2(1, 1) == CExpr(RadicalExpr::inverse_factor(T, 0, 2) * k2));
}

TEST_CASE("lift of the cube gamma functions") {
  auto d = det_of(first_block(PolyhedronKind::cube));
  CHECK_THROWS_AS(reparametrize(d.a1), NotSingleRadical);
  auto L = lift(d.a1);
  REQUIRE(L.curve.radicals.size() == 2);
  CHECK(L.curve.vars() == std::vector<std::string>{"t", "u1", "u2"});
  CHECK(L.numerator.degrees() == Exponent{6, 3, 3});
  CHECK(L.cleared_sign() == -1);
  for (auto form : {LiftForm::cubic, LiftForm::mixed})
    for (const auto* e : {&d.a1, &d.a0}) {
      auto F = lift(*e, form);
      CHECK(compose_curve(F.numerator, F.curve) == *e * compose_curve(F.denominator(), F.curve));
    }
  auto C1 = first_block(PolyhedronKind::cube);
  RadicalExpr n11 = C1(0, 0).homogenized(-d.a0, d.a1);
  auto F = lift(n11, LiftForm::mixed);
  CHECK(compose_curve(F.numerator, F.curve) == n11 * compose_curve(F.denominator(), F.curve));
  CHECK(F.numerator.degrees() == Exponent{21, 1, 1});

  auto plain = lift(RadicalExpr::poly(UniPoly({FieldElement(1), FieldElement(2)})));
  CHECK(plain.curve.dim() == 1);
  CHECK(plain.clears.empty());
  CHECK(plain.numerator == MultiPoly::from_uni({"t"}, 0, UniPoly({FieldElement(1), FieldElement(2)})));
}

TEST_CASE("curve boxes") {
  auto d = det_of(first_block(PolyhedronKind::cube));
  auto g = lift(d.a1).curve;
  Box B = curve_box(g, {FieldElement(0), FieldElement(Rational(1, 2)), false, true});
  REQUIRE(B.dim() == 3);
  CHECK(B.intervals[1].lo == sqrt_q(3));
  CHECK(B.intervals[1].hi == FieldElement::sqrt(Rational(19, 4)));
  CHECK_FALSE(B.intervals[1].lo_closed);
  CHECK(B.intervals[1].hi_closed);
  CHECK(B.intervals[2].lo == FieldElement::sqrt(Rational(8, 3)));
  CHECK(B.intervals[2].lo_closed);
  CHECK(B.intervals[2].hi == sqrt_q(3));

  Box P = curve_box(g, IntervalQ::closed(FieldElement(Rational(1, 3)), FieldElement(Rational(1, 3))));
  auto pt = g.at(Rational(1, 3));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(P.intervals[k].lo == pt[k]);
    CHECK(P.intervals[k].hi == pt[k]);
  }
  // monotone radicand on [1/2, 1): both endpoints come from the interval ends
  Box M = curve_box(g, {FieldElement(Rational(1, 2)), FieldElement(1), true, false});
  CHECK(M.intervals[1].lo == FieldElement::sqrt(Rational(19, 4)));
  CHECK(M.intervals[1].hi == FieldElement::sqrt(Rational(8)));
  CHECK(M.intervals[2].lo == FieldElement::sqrt(Rational(11, 4)));
  CHECK(M.intervals[2].hi == FieldElement(2));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Rational t0(static_cast<long>(rng() % 999) + 1, 2000);
    t0.canonicalize();
    auto x = g.at(t0);
    for (std::size_t k = 0; k < 3; ++k) CHECK(B.intervals[k].contains(x[k]));
  }
}
