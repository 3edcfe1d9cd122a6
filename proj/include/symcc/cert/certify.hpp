#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcc/cert/certificate.hpp"
#include "symcc/group/matrix.hpp"
#include "symcc/model/lift.hpp"
#include "symcc/poly/mobius.hpp"
#include "symcc/util/pool.hpp"

namespace symcc {

struct RootFound : CertificationFailed {
  int count;
  RootFound(const std::string& target, int c)
      : CertificationFailed(target + ": " + std::to_string(c) + " root(s) in the interval"), count(c) {}
};

struct DepthExceeded : CertificationFailed {
  IntervalQ interval;
  DepthExceeded(const std::string& target, IntervalQ I)
      : CertificationFailed(target + ": no strict sign on " + I.to_string() + " at maximum depth"), interval(std::move(I)) {}
};

class NotAffine : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StrategyExhausted : public CertificationFailed {
 public:
  using CertificationFailed::CertificationFailed;
};

// The open interval (0,1).
IntervalQ unit_interval();

// Sturm root count of p on the open interval I, after dividing out roots at its ends.
// verified is true when the count equals `expected`.
Certificate sturm_certificate(const UniPoly& p, const IntervalQ& I, const std::string& var, int expected,
                              const std::string& target);
// Leading Laurent term of e at t = endpoint; throws when claimed != 0 and the sign differs.
Certificate limit_certificate(const RadicalExpr& e, int endpoint, int claimed, const std::string& target);

// Sign of e on (0,1) from a Sturm count on its reparametrized (or rational) numerator.
Certificate certify_sign_univariate(const RadicalExpr& e, int claimed, const std::string& target = "expression",
                                    bool with_limits = true);

struct CoverPiece {
  IntervalQ t;
  Box box;
  SignSummary summary;
  int depth = 0;
};

struct CoveringResult {
  std::vector<CoverPiece> pieces;  // ordered by t
  int sign = 0;
  int rejected = 0;  // boxes that failed the strict-sign test
};

using BoxOf = std::function<Box(const IntervalQ&)>;

// Midpoint bisection of `domain` until p has a strict sign on every box.
CoveringResult cover(const MultiPoly& p, const BoxOf& box_of, const IntervalQ& domain, int max_depth = 16,
                     WorkerPool* pool = nullptr, const std::string& target = "polynomial");

struct CurveOptions {
  int max_depth = 16;
  LiftForm form = LiftForm::cubic;
  IntervalQ domain = unit_interval();
  bool with_limits = true;
  WorkerPool* pool = nullptr;
};

Certificate certify_sign_on_curve(const RadicalExpr& e, int claimed, const std::string& target = "expression",
                                  const CurveOptions& opt = {});

// I x g_1(I) x ... for a polynomial curve with components of degree at most 2.
Box polynomial_curve_box(const std::vector<UniPoly>& components, const IntervalQ& I);

// Covering certificate for P along t -> (g_1(t), ..., g_k(t)).
Certificate certify_polynomial_on_curve(const MultiPoly& P, const std::vector<UniPoly>& components,
                                        const IntervalQ& domain, const std::string& target = "polynomial",
                                        int max_depth = 16, WorkerPool* pool = nullptr);

// Claimed sign from the value at t = 1/2; univariate path when at most one radical occurs.
Certificate certify_nonvanishing(const RadicalExpr& e, const std::string& target = "expression",
                                 const CurveOptions& opt = {});

// det = first * c + second.
std::pair<RadicalExpr, RadicalExpr> det_affine(const Matrix<CExpr>& block);

struct KernelOptions {
  CurveOptions curve;
  // Row pairs (0-based) tried first in strategy (b), in order.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> preferred;
};

Certificate kernel_trivial_rect(const Matrix<CExpr>& block, const std::string& target = "block",
                                const KernelOptions& opt = {});

// Nonzero determinant of a 2x2 block free of c.
Certificate block_nonsingular(const Matrix<CExpr>& block, const std::string& target = "block",
                              const CurveOptions& opt = {});

}  // namespace symcc
