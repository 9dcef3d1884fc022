#include "ge/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace ge {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int abs_val(Int a) { return a < 0 ? -a : a; }

} // namespace

std::vector<IntRow> integer_kernel_basis(const std::vector<IntRow> &matrix, int columns) {
  const std::size_t cols = static_cast<std::size_t>(columns);
  for (const IntRow &row : matrix)
    if (row.size() != cols) throw ValidationError("ragged constraint matrix");

  // H starts as A and U as the identity; column operations are applied to
  // both, so A * (column j of U) equals column j of H throughout. Columns of
  // U whose H column has been cleared generate the kernel lattice.
  std::vector<IntRow> h = matrix;
  std::vector<IntRow> u(cols, IntRow(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1; // u[j] is column j

  auto column_axpy = [&](std::size_t target, std::size_t source, Int q) {
    // col_target -= q * col_source
    for (IntRow &row : h)
      row[target] = checked_sub(row[target], checked_mul(q, row[source]));
    for (std::size_t i = 0; i < cols; ++i)
      u[target][i] = checked_sub(u[target][i], checked_mul(q, u[source][i]));
  };
  auto column_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (IntRow &row : h) std::swap(row[a], row[b]);
    std::swap(u[a], u[b]);
  };

  std::size_t lead = 0;
  for (std::size_t r = 0; r < h.size() && lead < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      int nonzero = 0;
      for (std::size_t j = lead; j < cols; ++j) {
        if (h[r][j] == 0) continue;
        ++nonzero;
        if (best == cols || abs_val(h[r][j]) < abs_val(h[r][best])) best = j;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        column_swap(lead, best);
        ++lead;
        break;
      }
      for (std::size_t j = lead; j < cols; ++j) {
        if (j == best || h[r][j] == 0) continue;
        column_axpy(j, best, h[r][j] / h[r][best]);
      }
    }
  }

  std::vector<IntRow> basis;
  for (std::size_t j = lead; j < cols; ++j) basis.push_back(u[j]);
  return hermite_reduced_rows(std::move(basis));
}

std::vector<IntRow> hermite_reduced_rows(std::vector<IntRow> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  for (const IntRow &row : rows)
    if (row.size() != cols) throw ValidationError("ragged basis rows");

  auto row_axpy = [&](std::size_t target, std::size_t source, Int q) {
    for (std::size_t j = 0; j < cols; ++j)
      rows[target][j] = checked_sub(rows[target][j], checked_mul(q, rows[source][j]));
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      int nonzero = 0;
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        ++nonzero;
        if (best == rows.size() || abs_val(rows[i][col]) < abs_val(rows[best][col])) best = i;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        std::swap(rows[pivot_row], rows[best]);
        if (rows[pivot_row][col] < 0)
          for (Int &v : rows[pivot_row]) v = checked_sub(0, v);
        for (std::size_t i = 0; i < pivot_row; ++i)
          row_axpy(i, pivot_row, floor_div(rows[i][col], rows[pivot_row][col]));
        ++pivot_row;
        break;
      }
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (i == best || rows[i][col] == 0) continue;
        row_axpy(i, best, rows[i][col] / rows[best][col]);
      }
    }
  }
  rows.resize(pivot_row);
  return rows;
}

bool kernel_basis_is_exact(const std::vector<IntRow> &matrix, const std::vector<IntRow> &basis) {
  for (const IntRow &x : basis) {
    for (const IntRow &row : matrix) {
      Int acc = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        acc = checked_add(acc, checked_mul(row[j], x[j]));
      if (acc != 0) return false;
    }
  }
  return true;
}

} // namespace ge
