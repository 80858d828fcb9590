#include "dendro/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace dendro {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return Rational(num) / Rational(den);  // division canonicalizes
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::string format_rational(const Rational& value) {
  return value.str();
}

RationalMatrix rref(const RationalMatrix& m, std::vector<int>* pivot_cols) {
  RationalMatrix a = m;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (pivot_cols) pivot_cols->clear();
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (a(r, col) != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (int r = 0; r < rows; ++r) {
      if (r != row && a(r, col) != 0) a.row(r) -= a(r, col) * a.row(row);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return a;
}

int rank(const RationalMatrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  RationalMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x = RationalVector::Zero(cols);
    x(free) = 1;
    for (size_t p = 0; p < pivots.size(); ++p) {
      x(pivots[p]) = -r(static_cast<int>(p), free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  RationalMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = b;
  std::vector<int> pivots;
  RationalMatrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent row
  RationalVector x = RationalVector::Zero(cols);
  for (size_t p = 0; p < pivots.size(); ++p) {
    x(pivots[p]) = r(static_cast<int>(p), cols);
  }
  return x;
}

RationalMatrix columns_to_matrix(const std::vector<RationalVector>& cols, int rows) {
  RationalMatrix m(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("columns_to_matrix: length mismatch");
    m.col(static_cast<int>(c)) = cols[c];
  }
  return m;
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
  if (basis.empty()) return v.isZero();
  RationalMatrix m = columns_to_matrix(basis, static_cast<int>(v.size()));
  return solve(m, v).has_value();
}

int quotient_dim(const std::vector<RationalVector>& z_basis,
                 const std::vector<RationalVector>& b_basis) {
  if (b_basis.empty() && z_basis.empty()) return 0;
  const int len = static_cast<int>(z_basis.empty() ? b_basis[0].size() : z_basis[0].size());
  for (const auto& b : b_basis) {
    if (!in_span(z_basis, b)) {
      throw std::runtime_error("quotient_dim: B is not contained in span(Z)");
    }
  }
  int rank_z = z_basis.empty() ? 0 : rank(columns_to_matrix(z_basis, len));
  int rank_b = b_basis.empty() ? 0 : rank(columns_to_matrix(b_basis, len));
  return rank_z - rank_b;
}

}  // namespace dendro
