#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symcc/poly/unipoly.hpp"

namespace symcc {

// Real interval with exact (possibly irrational) endpoints.
struct IntervalQ {
  FieldElement lo;
  FieldElement hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static IntervalQ open(FieldElement lo, FieldElement hi) { return {std::move(lo), std::move(hi), false, false}; }
  static IntervalQ closed(FieldElement lo, FieldElement hi) { return {std::move(lo), std::move(hi), true, true}; }
  FieldElement width() const { return hi - lo; }
  bool contains(const FieldElement& x) const;
  std::string to_string() const;
};

struct Box {
  std::vector<IntervalQ> intervals;
  std::size_t dim() const { return intervals.size(); }
  std::string to_string() const;
};

struct EndpointIsRoot : std::runtime_error {
  FieldElement endpoint;
  explicit EndpointIsRoot(FieldElement e)
      : std::runtime_error("interval endpoint is a root: " + e.to_string()), endpoint(std::move(e)) {}
};

struct NoUniqueRoot : std::runtime_error {
  int count;
  explicit NoUniqueRoot(int c) : std::runtime_error("expected exactly one root, found " + std::to_string(c)), count(c) {}
};

std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Sign changes in a sequence, zeros skipped.
int sign_variations(const std::vector<FieldElement>& values);
int sign_variations_at(const std::vector<UniPoly>& seq, const FieldElement& x);

// Distinct real roots in the open interval (lo, hi).
int count_roots(const UniPoly& p, const IntervalQ& I);
int count_roots_with(const std::vector<UniPoly>& seq, const IntervalQ& I);

// Rational point strictly inside (lo, hi), close to the midpoint.
Rational rational_between(const FieldElement& lo, const FieldElement& hi);

IntervalQ isolate_root(const UniPoly& p, const IntervalQ& I, const Rational& width);

}  // namespace symcc
