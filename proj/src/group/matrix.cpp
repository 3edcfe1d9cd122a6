#include "symcc/group/matrix.hpp"

#include <sstream>

namespace symcc {

FieldMatrix operator*(const FieldMatrix& a, const FieldElement& s) {
  return a.map([&](const FieldElement& x) { return x * s; });
}

FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(FieldMatrix& m, FieldMatrix* companion) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
      if (companion)
        for (std::size_t c = 0; c < companion->cols(); ++c) std::swap((*companion)(p, c), (*companion)(row, c));
    }
    FieldElement inv = m(row, col).inverse();
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    if (companion)
      for (std::size_t c = 0; c < companion->cols(); ++c) (*companion)(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      FieldElement f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      if (companion)
        for (std::size_t c = 0; c < companion->cols(); ++c)
          if (!(*companion)(row, c).is_zero()) (*companion)(r, c) -= f * (*companion)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FieldMatrix inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  FieldMatrix a = m;
  FieldMatrix inv = FieldMatrix::identity(m.rows());
  auto piv = echelon(a, &inv);
  if (piv.size() != m.rows()) throw ArithmeticError("singular matrix");
  return inv;
}

std::vector<std::size_t> pivot_columns(const FieldMatrix& m) {
  FieldMatrix a = m;
  return echelon(a, nullptr);
}

std::size_t rank(const FieldMatrix& m) { return pivot_columns(m).size(); }

bool is_zero(const FieldMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

FieldElement trace(const FieldMatrix& m) {
  FieldElement t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

FieldMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  FieldMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = FieldElement::parse(rows[r][c]);
  }
  return m;
}

std::vector<std::vector<std::string>> format_matrix(const FieldMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).to_string());
  return out;
}

std::string to_string(const FieldMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace symcc
