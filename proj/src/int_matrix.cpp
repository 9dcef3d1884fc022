#include "ge/int_matrix.hpp"

namespace ge {

IntMatrix IntMatrix::operator+(const IntMatrix &rhs) const {
  if (n_ != rhs.n_) throw ValidationError("matrix sizes differ");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = checked_add(data_[i], rhs.data_[i]);
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix &rhs) const {
  if (n_ != rhs.n_) throw ValidationError("matrix sizes differ");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = checked_sub(data_[i], rhs.data_[i]);
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = checked_sub(0, data_[i]);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::permuted(const Permutation &pi) const {
  if (pi.n() != n_) throw ValidationError("permutation degree differs from matrix size");
  IntMatrix out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out.at(pi.apply(i), pi.apply(j)) = at(i, j);
  return out;
}

std::vector<Int> IntMatrix::row_sums() const {
  std::vector<Int> sums(static_cast<std::size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      sums[static_cast<std::size_t>(i) - 1] = checked_add(sums[static_cast<std::size_t>(i) - 1], at(i, j));
  return sums;
}

bool IntMatrix::is_zero() const {
  for (Int v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMatrix::has_zero_diagonal() const {
  for (int i = 1; i <= n_; ++i)
    if (at(i, i) != 0) return false;
  return true;
}

} // namespace ge
