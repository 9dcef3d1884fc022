#ifndef GE_SGE_HPP
#define GE_SGE_HPP

#include "ge/braid.hpp"
#include "ge/int_matrix.hpp"
#include "ge/permutation.hpp"

namespace ge {

// Element (M, pi) of (zero-diagonal n x n integer matrices) x| S_n with
//   (M1, pi1) * (M2, pi2) = (M1 + pi1 . M2, pi1 pi2).
class SgeElement {
public:
  SgeElement(IntMatrix m, Permutation pi);

  static SgeElement identity(int n);
  // sigma_k maps to (O_{k,k+1}, (k,k+1)); sigma_k^{-1} to (-O_{k+1,k}, (k,k+1)).
  static SgeElement generator(int n, int letter);

  int n() const { return pi_.n(); }
  const IntMatrix &m() const { return m_; }
  const Permutation &pi() const { return pi_; }

  SgeElement operator*(const SgeElement &rhs) const;
  SgeElement inverse() const;
  bool is_identity() const;

  bool operator==(const SgeElement &rhs) const { return m_ == rhs.m_ && pi_ == rhs.pi_; }
  bool operator!=(const SgeElement &rhs) const { return !(*this == rhs); }

private:
  IntMatrix m_;
  Permutation pi_;
};

SgeElement sge_image(const BraidWord &w);

// Pure-braid generator A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}.
BraidWord pure_generator(int i, int j, int strands);

// F(w) = M - M^T where sge_image(w) = (M, pi); antisymmetric, vanishes on
// pure words, and depends only on the permutation of w.
IntMatrix cocycle_F(const BraidWord &w);

// The induced 1-cocycle on S_n, computed by decomposing pi into adjacent
// transpositions (bubble sort) and folding F((k,k+1)) = O_{k,k+1} - O_{k+1,k}
// through F(t p) = F(t) + t . F(p).
IntMatrix cocycle_Fbar(const Permutation &pi);

// Image characterization: (m, pi) lies in the image iff m - m^T == Fbar(pi).
// Trusted only with the exhaustive cross-validation in the test suite.
bool sge_membership(const IntMatrix &m, const Permutation &pi);

} // namespace ge

#endif
