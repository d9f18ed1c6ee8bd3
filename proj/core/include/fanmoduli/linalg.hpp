#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fanmoduli/matrix.hpp"

namespace fanmoduli {

// Exact determinant. Rows are scaled to integers and reduced with Bareiss'
// fraction-free elimination. Throws DimensionError for non-square input.
Rational det(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

struct RowEchelon {
  RationalMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;     // pivot column of each nonzero row
};
RowEchelon rref(const RationalMatrix& m);

// Basis of ker(m) for a full-row-rank d x n matrix, as the columns of an
// n x (n-d) matrix. Free variables are taken in increasing column order, so a
// matrix [I_d | V] yields the basis [-V ; I_{n-d}].
RationalMatrix kernel_basis(const RationalMatrix& m);

// Same as kernel_basis but without the full-rank precondition.
RationalMatrix nullspace(const RationalMatrix& m);

// Throws PreconditionError("singular") when not invertible.
RationalMatrix inverse(const RationalMatrix& m);

// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const RationalMatrix& m, const Vector& b);

// True iff the column spaces of a and b coincide.
bool same_column_span(const RationalMatrix& a, const RationalMatrix& b);

Rational dot(const Vector& a, const Vector& b);

}  // namespace fanmoduli
