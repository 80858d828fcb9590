#pragma once

#include "dendro/rational.hpp"

#include <optional>
#include <vector>

namespace dendro {

/// Reduced row echelon form, eliminating with the first nonzero pivot found
/// in each column. The deterministic pivot order makes every downstream
/// kernel basis and solution reproducible across runs.
/// If `pivot_cols` is non-null it receives the pivot column indices in order.
RationalMatrix rref(const RationalMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(const RationalMatrix& m);

/// Basis of { x : Mx = 0 }. Size is always cols - rank; vectors are ordered
/// by free-column index.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some exact solution of Mx = b, or nullopt when b is outside the column
/// space. Free variables are set to zero. Throws on a dimension mismatch.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

/// dim span(Z) - dim span(B), after verifying B is contained in span(Z).
/// A violation means a broken complex upstream and throws std::runtime_error.
int quotient_dim(const std::vector<RationalVector>& z_basis,
                 const std::vector<RationalVector>& b_basis);

/// Columns-as-vectors helpers used by the cohomology code.
RationalMatrix columns_to_matrix(const std::vector<RationalVector>& cols, int rows);
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v);

}  // namespace dendro
