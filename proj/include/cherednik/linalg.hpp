#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cherednik/field.hpp"

namespace cherednik {

// Sparse row: (column, coefficient) entries sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// Basis of { v : A v = 0 } for the matrix with the given rows over ncols
// unknowns, in reduced row echelon form (canonical: sorted by leading column,
// leading coefficient 1, leading columns cleared elsewhere).
std::vector<std::vector<Scalar>> nullspace(const std::vector<SparseRow>& rows,
                                           std::size_t ncols, const Field& f);

// Each row encodes sum_j a_j v_j = b with b stored at column index ncols.
// Returns the solution with all free unknowns zero, or nullopt if the system
// is inconsistent.
std::optional<std::vector<Scalar>> solve_affine(const std::vector<SparseRow>& rows,
                                                std::size_t ncols, const Field& f);

// In-place reduced row echelon form of a dense matrix; returns the rank.
// Zero rows are removed, remaining rows sorted by leading column.
std::size_t rref_dense(std::vector<std::vector<Scalar>>& m, const Field& f);

// Span equality of two lists of dense vectors of equal length.
bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b, const Field& f);

class NcPoly;

// Coefficients c with target == sum_i c_i span_i, or nullopt.  When the span
// list is linearly independent the solution is unique.
std::optional<std::vector<Scalar>> express_in_span(const NcPoly& target,
                                                   const std::vector<NcPoly>& span);

// Span equality over the common word index of both lists.
bool same_span_nc(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b,
                  const Field& f);

}  // namespace cherednik
