#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symcc/cert/cases.hpp"

namespace symcc {

struct CaseOptions {
  int max_depth = 16;
  int digits = 4;
  WorkerPool* pool = nullptr;
  std::vector<std::string> blocks;  // empty: every block
  bool threshold = true;
};

struct BlockReport {
  std::string name;
  int label = 0;
  std::size_t rows = 0, cols = 0, copies = 0;
  std::string claim;  // "alpha1 nonzero", "nonsingular", "kernel trivial"
  std::optional<std::size_t> certificate;  // index into CaseReport::certificates
  std::string error;
};

struct StageFailure {
  std::string stage;
  std::string message;
};

struct CaseReport {
  std::string name;
  std::vector<std::size_t> theta, theta_rho;  // by printed label
  bool symmetry = false, forbidden_zero = false, copies_equal = false, real = false;
  std::vector<BlockReport> blocks;
  std::optional<DeltaResult> delta;
  std::optional<std::size_t> delta_certificate;
  bool equal_masses = false;
  std::vector<Certificate> certificates;
  std::vector<StageFailure> failures;
  std::vector<std::pair<std::string, double>> timing;  // seconds per stage

  // True when nothing failed and every certificate is verified.
  bool ok() const;
  Json to_json(bool with_timing = true) const;
};

// Decomposition part only: multiplicities, inventory and structural checks.
Json decomposition_json(const CaseAnalysis& a);

// build -> symmetry -> basis -> blocks -> per-block certification -> delta.
CaseReport run_case(PolyhedronKind kind, const CaseOptions& opt = {});

// Replays a certificate file or every certificate of a report. Messages go to `log` when given.
bool replay_document(const Json& doc, std::ostream* log = nullptr);

struct CurveSample {
  Rational t;
  FieldElement c, ratio;
  std::pair<std::string, std::string> c_decimal, ratio_decimal;
  int sign = 0;
};

// Grid t = k/(n+1), k = 1..n.
std::vector<Rational> curve_grid(int samples);
std::vector<CurveSample> sample_curve(const CaseAnalysis& a, int samples, int digits = 12, WorkerPool* pool = nullptr);
void write_curve_csv(const std::vector<CurveSample>& rows, std::ostream& out);
void export_curve(PolyhedronKind kind, int samples, const std::string& path, int digits = 12, WorkerPool* pool = nullptr);

}  // namespace symcc
