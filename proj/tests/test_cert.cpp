#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "symcc/cert/cases.hpp"
#include "symcc/exact/interval.hpp"
#include "symcc/model/reparam.hpp"

using namespace symcc;

namespace {

const CaseAnalysis& tet() {
  static const CaseAnalysis a = analyze_case(PolyhedronKind::tetrahedron);
  return a;
}
const CaseAnalysis& oct() {
  static const CaseAnalysis a = analyze_case(PolyhedronKind::octahedron);
  return a;
}
const CaseAnalysis& cube() {
  static const CaseAnalysis a = analyze_case(PolyhedronKind::cube);
  return a;
}

Rational random_t(std::mt19937_64& rng, long den = 1000003) {
  std::uniform_int_distribution<long> n(1, den - 1);
  Rational q(n(rng), den);
  q.canonicalize();
  return q;
}

using oracle::Real;

Real tet_ratio_printed(const Real& t) {
  const Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
  const Real Q = 3 * t * t + 2 * t + 3, Q32 = Q * sqrt(Q);
  Real num = -9 * (3 * t + 1) * (t + 3) / (Q * Q * Q) - 2 * s3 / (Q32 * (t - 1)) + 9 / (32 * t * t) +
             1 / (3 * pow(t - 1, 4));
  Real den = -(9 * s2 * t - 72 * (t * t + 6 * t + 1) / Q32 - 8 * s3 / (t - 1) + 9 * s2 / (t * t)) / 2;
  // the printed c(t) carries the opposite sign of -alpha0/alpha1
  Real c = -num / den;
  return -(36 * c - 9 * (t + 3) / Q32 - s3 / ((t - 1) * (t - 1))) / (3 * (12 * c - 3 * s2 / 8));
}

Real cube_ratio_printed(const Real& t) {
  const Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
  const Real P = 3 * t * t + 2 * t + 3, M = 3 * t * t - 2 * t + 3;
  const Real P32 = P * sqrt(P), M32 = M * sqrt(M);
  Real g1 = -((2 * s3 + 9 * s2 + 18) * t - 72 * (t * t + 6 * t + 1) / P32 + 72 * (t * t - 6 * t + 1) / M32 -
              8 * s3 / (t + 1) - 8 * s3 / (t - 1) + (2 * s3 + 9 * s2 + 18) / (t * t));
  Real g0 = -9 * (3 * t + 1) * (t + 3) / (P * P * P) + 9 * (3 * t - 1) * (t - 3) / (M * M * M) +
            (6 * s3 * s2 + 12 * s3 + 54 * s2 + 83) / (96 * t * t) - 4 * s3 / (P32 * (t + 1)) -
            2 * s3 / (M32 * (t + 1)) - 2 * s3 / (P32 * (t - 1)) - 4 * s3 / (M32 * (t - 1)) - 144 * t / (P32 * M32) -
            1 / (3 * pow(t + 1, 4)) + 1 / (3 * pow(t - 1, 4));
  Real c = -g0 / g1;
  Real num = 24 * c - (s3 * t + s3) / (3 * pow(t + 1, 3)) - 3 * (t + 3) / P32 + 3 * (t - 3) / M32 -
             (s3 * t - s3) / (3 * pow(t - 1, 3));
  return -num / (24 * c - s3 / 12 - 3 * s2 / 8 - Real(3) / 4);
}

// Soundness spot check: the certified sign holds at random points, by 100-bit enclosures.
void spot_check(const RadicalExpr& e, int sign, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < points; ++i) {
    Rational t0 = random_t(rng);
    Interval v = e.enclose_at(t0, 100);
    int s = v.certain_sign();
    if (s == 0) s = e.sign_at(t0);
    REQUIRE_MESSAGE(s == sign, "t = " << t0.get_str());
  }
}

// Short decimals just outside [lo, hi].
Rational below(const Rational& x) {
  mpz_class k = x.get_num() * 1000 / x.get_den();
  return Rational(k, 1000);
}
Rational above(const Rational& x) { return below(x) + Rational(1, 1000); }

}  // namespace

TEST_CASE("field elements survive serialization") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    FieldElement x = oracle::random_element(rng, i % 2 == 1);
    CHECK(field_from(field_json(x)) == x);
  }
  UniPoly p({FieldElement::parse("1/2*sqrt(3)"), FieldElement(-4), FieldElement::parse("sqrt(6) - 2")});
  CHECK(uni_from(uni_json(p)) == p);
  MultiPoly m({"t", "u1"});
  m.add_term({2, 1}, FieldElement::parse("-3/7"));
  m.add_term({0, 0}, FieldElement::parse("sqrt(2)"));
  CHECK(multi_from(multi_json(m)) == m);
  IntervalQ I{FieldElement::sqrt(2), FieldElement::parse("sqrt(2) + sqrt(3)"), false, true};
  IntervalQ J = interval_from(interval_json(I));
  CHECK(J.lo == I.lo);
  CHECK(J.hi == I.hi);
  CHECK(J.hi_closed);
  CHECK_FALSE(J.lo_closed);
}

TEST_CASE("univariate certificates for the tetrahedron determinant") {
  const auto& a = tet();
  Certificate c1 = certify_sign_univariate(a.alpha1, -1, "alpha1");
  CHECK(c1.verified);
  CHECK(c1.claimed_sign == -1);
  CHECK(c1.data["variable"] == "w");
  CHECK(c1.data["roots"] == 0);
  CHECK(replay(c1));
  Certificate c0 = certify_sign_univariate(a.alpha0, 1, "alpha0");
  CHECK(c0.claimed_sign == 1);
  CHECK(replay(c0));
  CHECK_THROWS_AS(certify_sign_univariate(a.alpha1, 1, "alpha1"), CertificationFailed);

  // limits recorded as parts
  int limits = 0;
  for (const auto& p : c1.parts)
    if (p.kind == "endpoint-limit") {
      ++limits;
      CHECK(p.data["sign"] == -1);
    }
  CHECK(limits == 2);

  // JSON round trip keeps replayability
  Certificate back = Certificate::from_json(Json::parse(c1.to_json().dump()));
  CHECK(back.to_json() == c1.to_json());
  CHECK(replay(back));
}

TEST_CASE("replay rejects tampered certificates") {
  Certificate c = certify_sign_univariate(tet().alpha1, -1, "alpha1");
  std::string why;
  Certificate bad = c;
  bad.data["roots"] = 1;
  CHECK_FALSE(replay(bad, &why));
  CHECK(why.find("alpha1") != std::string::npos);
  bad = c;
  bad.data["sequence"][1][0] = "12345";
  CHECK_FALSE(replay(bad));
  bad = c;
  bad.claimed_sign = 1;
  CHECK_FALSE(replay(bad));
  bad = c;
  bad.parts[0].data["v_hi"] = 99;
  CHECK_FALSE(replay(bad));
  bad = c;
  bad.verified = false;
  CHECK_FALSE(replay(bad));

  auto ex = example_one();
  Certificate cov = certify_polynomial_on_curve(ex.P, ex.curve, IntervalQ::closed(FieldElement(0), FieldElement(1)));
  CHECK(replay(cov));
  Certificate gap = cov;
  gap.data["boxes"].erase(1);
  CHECK_FALSE(replay(gap, &why));
  Certificate census = cov;
  census.data["boxes"][0]["positive"] = 0;
  CHECK_FALSE(replay(census));
  Certificate shifted = cov;
  shifted.data["boxes"][0]["box"][1]["hi"] = "1";
  CHECK_FALSE(replay(shifted));
}

TEST_CASE("sign certification finds roots") {
  // u - 2 with u = sqrt(3t^2 + 2t + 3) vanishes at t = 1/3
  auto T = tet().s.table;
  RadicalExpr e = RadicalExpr::radical(T, 0) - RadicalExpr(2);
  CHECK_THROWS_AS(certify_sign_univariate(e, 1, "u - 2"), RootFound);
  CHECK_THROWS_AS(certify_nonvanishing(e, "u - 2"), RootFound);
  RadicalExpr r = RadicalExpr::poly(UniPoly({FieldElement(Rational(-1, 3)), FieldElement(1)}));
  CHECK_THROWS_AS(certify_sign_univariate(r, -1, "t - 1/3"), RootFound);
  // double root: no sign change, Sturm still counts it
  RadicalExpr sq = r * r + RadicalExpr(0);
  try {
    certify_sign_univariate(sq, 1, "(t - 1/3)^2");
    FAIL("expected a root");
  } catch (const RootFound& f) {
    CHECK(f.count == 1);
  }
  CHECK(certify_sign_univariate(RadicalExpr::poly(UniPoly({FieldElement(1), FieldElement(1)})), 1, "t + 1").verified);
}

TEST_CASE("univariate and curve paths agree on alpha1") {
  const auto& a = tet();
  Certificate u = certify_sign_univariate(a.alpha1, 0, "alpha1");
  Certificate c = certify_sign_on_curve(a.alpha1, 0, "alpha1");
  CHECK(u.claimed_sign == c.claimed_sign);
  CHECK(c.kind == "box-covering");
  CHECK(replay(c));
  CurveOptions mixed;
  mixed.form = LiftForm::mixed;
  CHECK(certify_sign_on_curve(a.alpha1, 0, "alpha1", mixed).claimed_sign == u.claimed_sign);
  Certificate c0 = certify_sign_on_curve(a.alpha0, 0, "alpha0");
  CHECK(c0.claimed_sign == 1);
}

TEST_CASE("covering with depth limit") {
  std::vector<std::string> vars{"u"};
  MultiPoly p = MultiPoly::variable(vars, 0) - MultiPoly::constant(vars, FieldElement(Rational(1, 3)));
  std::vector<UniPoly> curve{UniPoly::x()};
  try {
    certify_polynomial_on_curve(p, curve, IntervalQ::closed(FieldElement(0), FieldElement(1)), "u - 1/3", 5);
    FAIL("expected DepthExceeded");
  } catch (const DepthExceeded& d) {
    CHECK(d.interval.lo.is_rational());
    CHECK(compare(d.interval.lo, FieldElement(Rational(1, 3))) <= 0);
    CHECK(compare(d.interval.hi, FieldElement(Rational(1, 3))) >= 0);
  }
}

TEST_CASE("example covering needs depth two") {
  auto ex = example_one();
  Certificate c = certify_polynomial_on_curve(ex.P, ex.curve, IntervalQ::closed(FieldElement(0), FieldElement(1)));
  CHECK(c.claimed_sign == 1);
  int deepest = 0;
  for (const auto& b : c.data["boxes"]) deepest = std::max(deepest, b["depth"].get<int>());
  CHECK(deepest == 2);
  for (long i = 0; i < 4; ++i) {
    Box q = polynomial_curve_box(ex.curve, IntervalQ::closed(FieldElement(Rational(i, 4)), FieldElement(Rational(i + 1, 4))));
    CHECK(mobius_sign_summary(ex.P, q).strict_sign() == 1);
  }
  Box whole = polynomial_curve_box(ex.curve, IntervalQ::closed(FieldElement(0), FieldElement(1)));
  CHECK(mobius_sign_summary(ex.P, whole).strict_sign() == 0);
}

TEST_CASE("parallel covering is deterministic") {
  WorkerPool pool(4);
  CurveOptions opt;
  opt.pool = &pool;
  const auto& a = cube();
  Certificate seq = certify_sign_on_curve(a.alpha1, -1, "gamma1");
  Certificate par = certify_sign_on_curve(a.alpha1, -1, "gamma1", opt);
  CHECK(seq.to_json().dump() == par.to_json().dump());
  CHECK(seq.data["boxes"].size() == 2);
}

TEST_CASE("det_affine") {
  Matrix<CExpr> I(2, 2);
  I(0, 0) = CExpr(RadicalExpr(1));
  I(1, 1) = CExpr(RadicalExpr(1));
  auto [b, a] = det_affine(I);
  CHECK(b.is_zero());
  CHECK(a == RadicalExpr(1));
  Matrix<CExpr> C(2, 2);
  C(0, 0) = CExpr::c();
  C(1, 1) = CExpr::c();
  CHECK_THROWS_AS(det_affine(C), NotAffine);

  std::mt19937_64 rng(17);
  for (const CaseAnalysis* cs : {&tet(), &oct()}) {
    const auto& B = cs->first().matrix;
    for (int i = 0; i < 50; ++i) {
      Rational t0 = random_t(rng, 97);
      Rational c0 = oracle::random_rational(rng, 20, 9);
      auto at = [&](const CExpr& e) { return e.coeff(0).eval_exact(t0) + FieldElement(c0) * e.coeff(1).eval_exact(t0); };
      FieldElement direct = at(B(0, 0)) * at(B(1, 1)) - at(B(0, 1)) * at(B(1, 0));
      FieldElement viaab = cs->alpha1.eval_exact(t0) * FieldElement(c0) + cs->alpha0.eval_exact(t0);
      CHECK(direct == viaab);
    }
  }
}

TEST_CASE("kernel triviality strategies") {
  Certificate t4 = certify_block(tet(), "t4");
  CHECK(t4.kind == "kernel-trivial");
  CHECK(t4.data["strategy"] == "a");
  CHECK(replay(t4));

  Certificate o9 = certify_block(oct(), "O9");
  CHECK(o9.data["strategy"] == "b");
  CHECK(o9.data["minors"][0]["rows"] == Json::array({1, 3}));
  CHECK(o9.data["minors"][1]["rows"] == Json::array({1, 4}));
  CHECK(replay(o9));

  // rank-one block: every minor vanishes
  Matrix<CExpr> R(4, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    R(i, 0) = CExpr(RadicalExpr(static_cast<long>(i + 1)));
    R(i, 1) = CExpr::affine(RadicalExpr(static_cast<long>(i + 1)) * RadicalExpr::t(), RadicalExpr(0));
  }
  CHECK_THROWS_AS(kernel_trivial_rect(R, "rank one"), StrategyExhausted);
}

TEST_CASE("nonsingular c-free blocks agree with exact rank") {
  std::mt19937_64 rng(23);
  for (auto [cs, name] : {std::pair{&oct(), "O5"}, std::pair{&cube(), "C2"}}) {
    Certificate c = certify_block(*cs, name);
    CHECK(c.data["strategy"] == "det");
    CHECK(replay(c));
    const auto& B = cs->block(name).matrix;
    for (int i = 0; i < 20; ++i) {
      Rational t0 = random_t(rng, 101);
      FieldMatrix m(2, 2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t k = 0; k < 2; ++k) {
          REQUIRE(B(r, k).degree() <= 0);
          m(r, k) = B(r, k).coeff(0).eval_exact(t0);
        }
      CHECK(rank(m) == 2);
    }
  }
}

TEST_CASE("certified signs hold at random points") {
  const auto& a = tet();
  spot_check(a.alpha1, -1, 1000, 1);
  spot_check(a.alpha0, 1, 1000, 2);
  Certificate t4 = certify_block(a, "t4");
  const auto& M = a.block("t4").matrix;
  int r0 = t4.data["minors"][0]["rows"][0].get<int>() - 1, r1 = t4.data["minors"][0]["rows"][1].get<int>() - 1;
  auto ur0 = static_cast<std::size_t>(r0), ur1 = static_cast<std::size_t>(r1);
  RadicalExpr minor = (M(ur0, 0) * M(ur1, 1) - M(ur0, 1) * M(ur1, 0)).coeff(0);
  spot_check(minor, t4.parts[0].claimed_sign, 1000, 3);
  auto [b1, b0] = det_affine(oct().block("O5").matrix);
  spot_check(b0, certify_block(oct(), "O5").parts[0].claimed_sign, 1000, 4);
  spot_check(cube().alpha1, -1, 300, 5);
  spot_check(cube().alpha0, 1, 300, 6);
}

TEST_CASE("mass ratio against the printed formulas") {
  for (Rational t0 : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(9, 10)}) {
    MassRatio m = mass_ratio_at(tet(), t0, 20);
    Real want = tet_ratio_printed(oracle::to_real(t0));
    CHECK(abs(oracle::value(m.ratio) - want) < Real("1e-40") * (1 + abs(want)));
    CHECK(m.sign == (want > 0 ? 1 : -1));
    Real lo(m.ratio_decimal.first), hi(m.ratio_decimal.second);
    CHECK(lo <= want);
    CHECK(want <= hi);
  }
  MassRatio mc = mass_ratio_at(cube(), Rational(1, 4), 20);
  Real want = cube_ratio_printed(Real(1) / 4);
  CHECK(abs(oracle::value(mc.ratio) - want) < Real("1e-40") * (1 + abs(want)));
  CHECK_THROWS_AS(mass_ratio_at(tet(), Rational(0)), std::invalid_argument);
}

TEST_CASE("thresholds") {
  DeltaResult t = find_delta(tet(), 4);
  CHECK(replay(t.certificate));
  CHECK(t.hi - t.lo <= Rational(1, 1000000));
  // ratio changes sign across delta
  CHECK(mass_ratio_at(tet(), below(t.lo)).sign == 1);
  CHECK(mass_ratio_at(tet(), above(t.hi)).sign == -1);
  CHECK(t.inverse_decimal.first.substr(0, 4) == "1.88");

  DeltaResult c = find_delta(cube(), 4);
  CHECK(replay(c.certificate));
  CHECK(c.certificate.kind == "box-covering");
  CHECK(c.lo > Rational(1, 2));
  CHECK(mass_ratio_at(cube(), below(c.lo)).sign == 1);
  CHECK(mass_ratio_at(cube(), above(c.hi)).sign == -1);
}
