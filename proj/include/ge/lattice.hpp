#ifndef GE_LATTICE_HPP
#define GE_LATTICE_HPP

#include <vector>

#include "ge/errors.hpp"

namespace ge {

using IntRow = std::vector<Int>;

// Basis of the integer kernel lattice {x : A x = 0} of an integer matrix,
// computed by exact unimodular column reduction (no rationals). The kernel of
// an integer matrix is saturated, so this is the full solution lattice over Z.
std::vector<IntRow> integer_kernel_basis(const std::vector<IntRow> &matrix, int columns);

// Canonicalizes a generating set in place: row-style Hermite form with
// positive pivots, reduced entries above pivots, zero rows dropped.
std::vector<IntRow> hermite_reduced_rows(std::vector<IntRow> rows);

// Exact check A x == 0 for every basis row.
bool kernel_basis_is_exact(const std::vector<IntRow> &matrix, const std::vector<IntRow> &basis);

} // namespace ge

#endif
