#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "symcc/report/report.hpp"

using namespace symcc;
using oracle::Real;

namespace {

// Printed tetrahedron formulas; the printed c(t) is negated to match -alpha0/alpha1.
Real tet_c(const Real& t) {
  const Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
  const Real Q = 3 * t * t + 2 * t + 3, Q32 = Q * sqrt(Q);
  Real num = -9 * (3 * t + 1) * (t + 3) / (Q * Q * Q) - 2 * s3 / (Q32 * (t - 1)) + 9 / (32 * t * t) +
             1 / (3 * pow(t - 1, 4));
  Real den = -(9 * s2 * t - 72 * (t * t + 6 * t + 1) / Q32 - 8 * s3 / (t - 1) + 9 * s2 / (t * t)) / 2;
  return -num / den;
}

Real tet_ratio(const Real& t) {
  const Real s2 = sqrt(Real(2)), s3 = sqrt(Real(3));
  const Real Q = 3 * t * t + 2 * t + 3, Q32 = Q * sqrt(Q);
  Real c = tet_c(t);
  return -(36 * c - 9 * (t + 3) / Q32 - s3 / ((t - 1) * (t - 1))) / (3 * (12 * c - 3 * s2 / 8));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("decomposition summary") {
  Json j = decomposition_json(analyze_case(PolyhedronKind::tetrahedron));
  CHECK(j["theta"] == Json::array({2, 0, 0, 2, 0}));
  CHECK(j["theta_rho"] == Json::array({2, 0, 2, 4, 2}));
  CHECK(j["blocks"].size() == 2);
  CHECK(j["blocks"][1]["name"] == "t4");
  CHECK(j["blocks"][1]["rows"] == 4);
  CHECK(j["blocks"][1]["copies"] == 3);
  CHECK(j["checks"]["forbidden_blocks_zero"] == true);
  CHECK(j["checks"]["real"] == true);
}

TEST_CASE("tetrahedron report") {
  CaseReport r = run_case(PolyhedronKind::tetrahedron);
  CHECK(r.ok());
  CHECK(r.equal_masses);
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[0].name == "T1");
  CHECK(r.blocks[1].rows == 4);
  CHECK(r.blocks[1].cols == 2);
  CHECK(r.blocks[1].copies == 3);
  REQUIRE(r.delta);
  CHECK(r.delta->inverse_decimal.first.substr(0, 4) == "1.88");
  Json j = r.to_json();
  CHECK(j.contains("timing"));
  CHECK_FALSE(r.to_json(false).contains("timing"));
  // every block claim and delta point at a replayable certificate
  for (const auto& b : j["blocks"]) {
    REQUIRE(b["certificate"].is_number());
    CHECK(b["verified"] == true);
  }
  CHECK(j["delta"]["certificate"].is_number());
  // decimals enclose the stored exact values
  Rational lo(j["delta"]["lo"].get<std::string>()), hi(j["delta"]["hi"].get<std::string>());
  CHECK(Real(j["delta"]["decimal"][0].get<std::string>()) <= oracle::to_real(lo));
  CHECK(oracle::to_real(hi) <= Real(j["delta"]["decimal"][1].get<std::string>()));
  std::ostringstream log;
  CHECK(replay_document(Json::parse(j.dump()), &log));
  CHECK(log.str().find("FAIL") == std::string::npos);

  Json bad = j;
  bad["certificates"][0]["claimed_sign"] = -bad["certificates"][0]["claimed_sign"].get<int>();
  std::ostringstream blog;
  CHECK_FALSE(replay_document(bad, &blog));
  CHECK(blog.str().find("FAIL") != std::string::npos);
}

TEST_CASE("reports do not depend on the worker count") {
  WorkerPool pool(4);
  for (auto kind : {PolyhedronKind::tetrahedron, PolyhedronKind::octahedron}) {
    CaseOptions one;
    CaseOptions many;
    many.pool = &pool;
    std::string a = run_case(kind, one).to_json(false).dump();
    std::string b = run_case(kind, many).to_json(false).dump();
    CHECK(a == b);
  }
}

TEST_CASE("single block and failure stages") {
  CaseOptions opt;
  opt.blocks = {"O9"};
  opt.threshold = false;
  CaseReport r = run_case(PolyhedronKind::octahedron, opt);
  CHECK(r.ok());
  CHECK_FALSE(r.equal_masses);
  CHECK(r.certificates.size() == 1);
  CHECK(r.blocks[2].certificate);
  CHECK_FALSE(r.blocks[1].certificate);

  opt.blocks = {"nope"};
  CaseReport bad = run_case(PolyhedronKind::octahedron, opt);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].stage == "certify");

  opt.blocks = {"c2"};
  opt.max_depth = 1;
  CaseReport shallow = run_case(PolyhedronKind::cube, opt);
  CHECK_FALSE(shallow.ok());
  REQUIRE_FALSE(shallow.failures.empty());
  CHECK(shallow.failures[0].stage == "certify C2");
  CHECK_FALSE(shallow.blocks[1].error.empty());
}

TEST_CASE("curve grid") {
  auto g = curve_grid(2);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Rational(1, 3));
  CHECK(g[1] == Rational(2, 3));
  CHECK(curve_grid(3)[1] == Rational(1, 2));
  CHECK_THROWS_AS(curve_grid(1), std::invalid_argument);
}

TEST_CASE("tetrahedron curve samples against the printed formulas") {
  auto rows = sample_curve(analyze_case(PolyhedronKind::tetrahedron), 3, 15);
  REQUIRE(rows.size() == 3);
  const int want_sign[] = {1, 1, -1};
  for (std::size_t i = 0; i < 3; ++i) {
    Real t = oracle::to_real(rows[i].t);
    Real c = tet_c(t), q = tet_ratio(t);
    CHECK(Real(rows[i].c_decimal.first) <= c);
    CHECK(c <= Real(rows[i].c_decimal.second));
    CHECK(Real(rows[i].ratio_decimal.first) <= q);
    CHECK(q <= Real(rows[i].ratio_decimal.second));
    CHECK(rows[i].sign == want_sign[i]);
    CHECK(abs(oracle::value(rows[i].ratio) - q) < Real("1e-40"));
  }
}

TEST_CASE("cube curve brackets delta") {
  WorkerPool pool(4);
  CaseAnalysis a = analyze_case(PolyhedronKind::cube);
  auto rows = sample_curve(a, 10, 12, &pool);
  DeltaResult d = find_delta(a, 4);
  int changes = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i].sign != 0);
    if (rows[i].sign != rows[i + 1].sign) {
      ++changes;
      CHECK(rows[i].t < d.lo);
      CHECK(d.hi < rows[i + 1].t);
      CHECK(rows[i].sign == 1);
    }
  }
  CHECK(changes == 1);
}

TEST_CASE("curve export") {
  auto dir = std::filesystem::temp_directory_path() / "symcc_report_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "tet.csv").string();
  export_curve(PolyhedronKind::tetrahedron, 2, path, 6);
  std::istringstream in(slurp(path));
  std::string header, l1, l2, extra;
  std::getline(in, header);
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK(header == "t_num,t_den,c_lo,c_hi,ratio_lo,ratio_hi,ratio_sign");
  CHECK(l1.rfind("1,3,", 0) == 0);
  CHECK(l2.rfind("2,3,", 0) == 0);
  CHECK_FALSE(std::getline(in, extra));
  CHECK_THROWS(export_curve(PolyhedronKind::tetrahedron, 2, (dir / "missing" / "x.csv").string()));
  CHECK_THROWS_AS(export_curve(PolyhedronKind::tetrahedron, 1, path), std::invalid_argument);
  std::filesystem::remove_all(dir);
}
