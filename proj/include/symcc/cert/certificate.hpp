#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "symcc/poly/multipoly.hpp"
#include "symcc/poly/sturm.hpp"

namespace symcc {

using Json = nlohmann::json;

class CertificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kinds: "sturm-count", "box-covering", "endpoint-limit", "kernel-trivial".
struct Certificate {
  std::string kind;
  std::string target;
  int claimed_sign = 0;  // 0 when the claim is not a sign
  bool verified = false;
  Json data;
  std::vector<Certificate> parts;

  Json to_json() const;
  static Certificate from_json(const Json& j);
};

// Re-runs the checks recorded in c and its parts. Returns false on any mismatch.
bool replay(const Certificate& c, std::string* why = nullptr);

// Exact serialization helpers.
Json field_json(const FieldElement& x);
FieldElement field_from(const Json& j);
Json uni_json(const UniPoly& p);
UniPoly uni_from(const Json& j);
Json multi_json(const MultiPoly& p);
MultiPoly multi_from(const Json& j);
Json interval_json(const IntervalQ& I);
IntervalQ interval_from(const Json& j);
Json box_json(const Box& B);
Box box_from(const Json& j);

}  // namespace symcc
