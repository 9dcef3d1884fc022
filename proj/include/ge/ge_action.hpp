#ifndef GE_GE_ACTION_HPP
#define GE_GE_ACTION_HPP

#include <cstddef>
#include <vector>

#include "ge/braid.hpp"
#include "ge/errors.hpp"
#include "ge/permutation.hpp"

namespace ge {

// Point of the strand-indexed half-infinite grid [n] x Z.
struct GePoint {
  int strand; // in [1, n]
  Int level;  // unbounded

  bool operator==(const GePoint &rhs) const {
    return strand == rhs.strand && level == rhs.level;
  }
  bool operator!=(const GePoint &rhs) const { return !(*this == rhs); }
};

// Element (pi, ell) of Z^n x| S_n with the twisted product
//   (pi1, l1) * (pi2, l2) = (pi1 pi2, l2 + l1 o pi2),   (l1 o pi2)[a] = l1[pi2(a)].
// Acting on points: (pi, ell) sends (a, b) to (pi(a), b + ell[a]).
class GeElement {
public:
  GeElement(Permutation pi, std::vector<Int> ell);

  static GeElement identity(int n);
  // sigma_k maps to ((k,k+1), e_{k+1}); sigma_k^{-1} to ((k,k+1), -e_k).
  static GeElement generator(int n, int letter);
  // Symmetric variant: sigma_k^{+-1} maps to ((k,k+1), +-(e_k + e_{k+1})).
  static GeElement symmetric_generator(int n, int letter);

  int n() const { return pi_.n(); }
  const Permutation &pi() const { return pi_; }
  const std::vector<Int> &ell() const { return ell_; }

  GeElement operator*(const GeElement &rhs) const;
  GeElement inverse() const;
  bool is_identity() const;
  GePoint apply(const GePoint &p) const;

  bool operator==(const GeElement &rhs) const {
    return pi_ == rhs.pi_ && ell_ == rhs.ell_;
  }
  bool operator!=(const GeElement &rhs) const { return !(*this == rhs); }

private:
  Permutation pi_;
  std::vector<Int> ell_;
};

// Letter-by-letter action on a single point, straight from the generator
// case rules; deliberately independent of the ge_image factorization so the
// two routes can be checked against each other.
GePoint ge_apply(const BraidWord &w, GePoint p);

// Image of a word in Z^n x| S_n; the ell part is the linking vector, whose
// component sum equals the writhe.
GeElement ge_image(const BraidWord &w);
GeElement symge_image(const BraidWord &w);

bool in_kernel_ge(const BraidWord &w);
bool in_kernel_symge(const BraidWord &w);

// Writhe/permutation pairs realized by braids: parities must agree.
bool wp_realizable(Int writhe_value, const Permutation &pi);

// (ell, pi) pairs realized by braids on n >= 3 strands: sum(ell) and pi must
// have equal parity. Rank 2 is refused; the spanning construction needs a
// third strand and the parity criterion is false there.
bool ge_realizable(const std::vector<Int> &ell, const Permutation &pi);

// Produces some word w with ge_image(w) == (pi, ell). Output is not canonical;
// only the roundtrip is guaranteed.
BraidWord construct_braid(const Permutation &pi, const std::vector<Int> &ell);

} // namespace ge

#endif
