#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcc/cert/certify.hpp"
#include "symcc/model/config.hpp"

namespace symcc {

class DenominatorZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedBlock {
  std::string name;
  int label = 0;  // irrep index as printed
  std::size_t irrep = 0;
  std::size_t copies = 0;
  Matrix<CExpr> matrix;
};

struct CaseAnalysis {
  PolyhedronKind kind = PolyhedronKind::tetrahedron;
  Configuration config;
  SMatrix s;
  SymmetryVerdict symmetry;
  BlockStructure<CExpr> structure;
  std::vector<NamedBlock> blocks;
  // det of the first block = alpha1 * c + alpha0, so c(t) = -alpha0 / alpha1.
  RadicalExpr alpha1, alpha0;

  const NamedBlock& block(const std::string& name) const;
  const NamedBlock& first() const { return blocks.front(); }
  // alpha1 * (first block)_{1k}(c(t), t)
  RadicalExpr entry_numerator(std::size_t col) const;
  // Multiplicities indexed by printed label (entry 0 is label 1).
  std::vector<std::size_t> theta_multiplicities() const;
  std::vector<std::size_t> theta_rho_multiplicities() const;
};

CaseAnalysis analyze_case(PolyhedronKind kind);
std::vector<std::string> block_names(PolyhedronKind kind);

struct MassRatio {
  Rational t;
  FieldElement c;
  FieldElement ratio;
  std::pair<std::string, std::string> c_decimal;
  std::pair<std::string, std::string> ratio_decimal;
  int sign = 0;
};

// mu1/mu2 = -(B)_{12} / (B)_{11} at c = c(t0) for the first block B.
MassRatio mass_ratio_at(const CaseAnalysis& a, const Rational& t0, int digits = 12);

struct DeltaResult {
  Rational lo, hi;  // delta in [lo, hi]
  std::pair<std::string, std::string> delta_decimal;
  std::pair<std::string, std::string> inverse_decimal;  // 1/delta
  Certificate certificate;  // uniqueness of the sign change
};

// Certifies a single sign change of (B)_{12}(c(t), t) and isolates it to `digits` decimals.
Certificate certify_threshold(const CaseAnalysis& a, const CurveOptions& opt = {});
DeltaResult find_delta(const CaseAnalysis& a, int digits = 4, const CurveOptions& opt = {});

// Equal-masses verdict: every block other than the first has a trivial kernel for all c.
Certificate certify_block(const CaseAnalysis& a, const std::string& name, const CurveOptions& opt = {});

// P(u, v) and the curve (t, (t - 7/10)^2 + 1/4).
struct ExampleOne {
  MultiPoly P;
  std::vector<UniPoly> curve;
};
ExampleOne example_one();

}  // namespace symcc
