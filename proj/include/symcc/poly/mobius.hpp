#pragma once

#include <vector>

#include "symcc/poly/multipoly.hpp"
#include "symcc/poly/sturm.hpp"

namespace symcc {

// Substitution x_j = (a_j u_j + b_j)/(u_j + 1) with [a_j, b_j] = B_j; u_j in
// [0, inf) covers (a_j, b_j]. The top coefficient in u_j carries the value at a_j,
// so a strict common sign over the whole coefficient grid certifies the closed box.
class MobiusRestriction {
 public:
  MobiusRestriction(const MultiPoly& p, const Box& B);

  const Exponent& degrees() const { return deg_; }
  // Binomial-sum formula for one coefficient.
  FieldElement coefficient(const Exponent& k) const;
  // Whole restricted polynomial by one contraction per axis.
  MultiPoly full() const;
  std::size_t grid_size() const;

 private:
  const MultiPoly& p_;
  Exponent deg_;
  // weight_[j][i][k]: coefficient of u^k in (a u + b)^i (u + 1)^(D_j - i)
  std::vector<std::vector<std::vector<FieldElement>>> weight_;
};

MultiPoly mobius_restrict(const MultiPoly& p, const Box& B);
FieldElement mobius_coefficient(const MultiPoly& p, const Box& B, const Exponent& k);

struct SignSummary {
  long positive = 0;
  long negative = 0;
  long zero = 0;
  long total = 0;      // grid size
  bool complete = true;  // false when streaming stopped early
  // +1 / -1 when every grid coefficient has that strict sign, else 0.
  int strict_sign() const;
};

enum class MobiusMode { streaming, full };

// Sign census of the coefficients of p|_B over the grid prod [0, D_j].
SignSummary mobius_sign_summary(const MultiPoly& p, const Box& B, MobiusMode mode = MobiusMode::full,
                                bool stop_early = true);

}  // namespace symcc
