#pragma once

// Polynomials and matrices as printed in the reference displays, for comparison.

#include <array>
#include <string>
#include <vector>

#include "symcc/group/matrix.hpp"
#include "symcc/poly/multipoly.hpp"
#include "symcc/poly/unipoly.hpp"

namespace printed {

using symcc::FieldElement;
using symcc::FieldMatrix;
using symcc::MultiPoly;
using symcc::Rational;
using symcc::UniPoly;

inline UniPoly from_strings(const std::vector<std::string>& hi_to_lo) {
  std::vector<FieldElement> c;
  for (auto it = hi_to_lo.rbegin(); it != hi_to_lo.rend(); ++it) c.push_back(FieldElement::parse(*it));
  return UniPoly(std::move(c));
}

inline bool proportional(const UniPoly& a, const UniPoly& b) {
  return a.degree() == b.degree() && !a.is_zero() && a * b.leading() == b * a.leading();
}

inline bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.size() != b.size() || a.is_zero()) return false;
  FieldElement lambda = a.terms().begin()->second / b.coeff(a.terms().begin()->first);
  return (a - b * lambda).is_zero();
}

inline FieldMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  FieldMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = FieldElement(rows[r][c]);
  return m;
}

// True when a = s * b for one positive rational s.
inline bool positive_multiple(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  FieldElement s;
  bool have = false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (b(r, c).is_zero()) {
        if (!a(r, c).is_zero()) return false;
        continue;
      }
      FieldElement q = a(r, c) / b(r, c);
      if (!have) {
        s = q;
        have = true;
      } else if (q != s) {
        return false;
      }
    }
  return have && s.is_rational() && s.rational() > 0;
}

// Tetrahedron transferences P^1_11 (which = 0) and P^4_11, P^4_12, P^4_13 (which = 1, 2, 3).
inline FieldMatrix tetra_transference(int which) {
  static const std::vector<std::vector<long>> blocks[4] = {
      {{6, 6, 6, 6}, {6, 6, 6, 6}, {6, 6, 6, 6}, {6, 6, 6, 6}},
      {{2, -2, -2, 2}, {-2, 2, 2, -2}, {-2, 2, 2, -2}, {2, -2, -2, 2}},
      {{2, -2, -2, 2}, {2, -2, -2, 2}, {-2, 2, 2, -2}, {-2, 2, 2, -2}},
      {{2, -2, -2, 2}, {-2, 2, 2, -2}, {2, -2, -2, 2}, {-2, 2, 2, -2}}};
  const auto& blk = blocks[which];
  FieldMatrix m(8, 8);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      m(r, c) = FieldElement(blk[r][c]);
      m(r + 4, c + 4) = FieldElement(blk[r][c]);
    }
  return m;
}

inline FieldMatrix tetra_P() {
  return int_matrix({{6, 0, 2, 0, 16, 0, 16, 0},
                     {6, 0, -2, 0, 16, 0, -16, 0},
                     {6, 0, -2, 0, -16, 0, 16, 0},
                     {6, 0, 2, 0, -16, 0, -16, 0},
                     {0, 6, 0, 2, 0, 16, 0, 16},
                     {0, 6, 0, -2, 0, 16, 0, -16},
                     {0, 6, 0, -2, 0, -16, 0, 16},
                     {0, 6, 0, 2, 0, -16, 0, -16}});
}

inline UniPoly alpha1_numerator() {
  return from_strings({"-6*sqrt(6)", "42*sqrt(3)", "-39*sqrt(6)+144", "-42*sqrt(3)+288*sqrt(2)", "129*sqrt(6)-3672",
                       "-210*sqrt(3)+1800*sqrt(2)", "540*sqrt(6)+8496", "-4320*sqrt(2)", "540*sqrt(6)-8568",
                       "210*sqrt(3)+2088*sqrt(2)", "129*sqrt(6)+3888", "42*sqrt(3)+432*sqrt(2)", "-39*sqrt(6)",
                       "-42*sqrt(3)", "-6*sqrt(6)"});
}

inline UniPoly alpha0_numerator() {
  return from_strings({"-81", "810*sqrt(2)", "-4833", "-972*sqrt(2)", "9477", "256770*sqrt(2)", "-1733643",
                       "1413936*sqrt(2)", "3448278", "-5534892*sqrt(2)", "-3077514", "8276472*sqrt(2)", "2820906",
                       "-5711148*sqrt(2)", "-3340278", "1548720*sqrt(2)", "1995435", "426114*sqrt(2)", "96795",
                       "14580*sqrt(2)", "6561", "810*sqrt(2)", "81", "0", "0"});
}

// Numerator for the base of the c-free minor of the tetrahedron block t4.
inline UniPoly t4_minor_numerator() {
  return from_strings({"-4", "12*sqrt(2)", "-48", "8*sqrt(2)", "36", "12*sqrt(2)", "0", "0", "0"});
}

// Quadratic in (x, y) with coefficients of x^2y^2, x^2y, xy^2, x^2, xy, y^2, x, y, 1.
inline MultiPoly example_factor(const std::array<long, 9>& c) {
  static const int ex[9][2] = {{2, 2}, {2, 1}, {1, 2}, {2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
  MultiPoly p({"u", "v"});
  for (int i = 0; i < 9; ++i) p.add_term({ex[i][0], ex[i][1]}, FieldElement(c[static_cast<std::size_t>(i)]));
  return p;
}

struct ExampleBlock {
  Rational t_lo, t_hi;
  std::array<long, 9> first, second;  // the restriction is first^3 * second^3
  MultiPoly product() const { return example_factor(first).pow(3) * example_factor(second).pow(3); }
};

inline std::vector<ExampleBlock> example_blocks() {
  return {{Rational(0), Rational(1, 4),
           {1605289, 5250448, 3210578, 4293184, 10500896, 1565289, 8586368, 5170448, 4253184},
           {78401, 157032, 44802, 91856, 90064, 6401, 71712, 13032, 19856}},
          {Rational(1, 4), Rational(1, 2),
           {649344, 2037608, 1278688, 1595289, 4035216, 619344, 3170578, 1977608, 1565289},
           {36496, 64672, 36992, 32401, 57344, 10496, 28802, 12672, 6401}},
          {Rational(1, 2), Rational(3, 4),
           {28125, 66050, 53750, 38709, 127100, 25000, 74918, 59800, 35584},
           {800, 1440, 600, 656, 880, 425, 312, 690, 281}},
          {Rational(3, 4), Rational(1),
           {409849, 1166128, 759698, 816304, 2212256, 339849, 1572608, 1026128, 746304},
           {6641, 7752, 17282, 2336, 23504, 20641, 8672, 35752, 16336}}};
}

}  // namespace printed
