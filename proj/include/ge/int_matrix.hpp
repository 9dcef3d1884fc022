#ifndef GE_INT_MATRIX_HPP
#define GE_INT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ge/errors.hpp"
#include "ge/permutation.hpp"

namespace ge {

// Dense n x n integer matrix with one-indexed accessors. S_n acts by moving
// entries, (pi . M)[pi(i), pi(j)] = M[i, j].
class IntMatrix {
public:
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw ValidationError("matrix size must be positive");
  }

  static IntMatrix unit(int n, int i, int j) {
    IntMatrix m(n);
    m.at(i, j) = 1;
    return m;
  }

  int n() const { return n_; }
  Int &at(int i, int j) { return data_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
  Int at(int i, int j) const { return data_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
  const std::vector<Int> &data() const { return data_; }

  IntMatrix operator+(const IntMatrix &rhs) const;
  IntMatrix operator-(const IntMatrix &rhs) const;
  IntMatrix operator-() const;
  IntMatrix transposed() const;
  IntMatrix permuted(const Permutation &pi) const;

  std::vector<Int> row_sums() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  bool operator==(const IntMatrix &rhs) const { return n_ == rhs.n_ && data_ == rhs.data_; }
  bool operator!=(const IntMatrix &rhs) const { return !(*this == rhs); }

private:
  int n_;
  std::vector<Int> data_;
};

} // namespace ge

#endif
