#include "ge/sge.hpp"

#include <string>

namespace ge {

SgeElement::SgeElement(IntMatrix m, Permutation pi) : m_(std::move(m)), pi_(std::move(pi)) {
  if (m_.n() != pi_.n()) throw ValidationError("matrix size differs from permutation degree");
  if (!m_.has_zero_diagonal()) throw ValidationError("SGE matrices have zero diagonal");
}

SgeElement SgeElement::identity(int n) {
  return SgeElement(IntMatrix(n), Permutation::identity(n));
}

SgeElement SgeElement::generator(int n, int letter) {
  const int k = letter > 0 ? letter : -letter;
  if (k < 1 || k > n - 1) throw RangeError("generator index out of range");
  const Permutation t = Permutation::transposition(n, k, k + 1);
  if (letter > 0) return SgeElement(IntMatrix::unit(n, k, k + 1), t);
  return SgeElement(-IntMatrix::unit(n, k + 1, k), t);
}

SgeElement SgeElement::operator*(const SgeElement &rhs) const {
  return SgeElement(m_ + rhs.m_.permuted(pi_), pi_ * rhs.pi_);
}

SgeElement SgeElement::inverse() const {
  Permutation inv = pi_.inverse();
  IntMatrix m = -m_.permuted(inv);
  return SgeElement(std::move(m), std::move(inv));
}

bool SgeElement::is_identity() const { return pi_.is_identity() && m_.is_zero(); }

SgeElement sge_image(const BraidWord &w) {
  SgeElement acc = SgeElement::identity(w.strands());
  for (int letter : w.letters()) acc = acc * SgeElement::generator(w.strands(), letter);
  return acc;
}

BraidWord pure_generator(int i, int j, int strands) {
  if (!(1 <= i && i < j && j <= strands))
    throw RangeError("pure generator needs 1 <= i < j <= n, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " n=" + std::to_string(strands));
  std::vector<int> letters;
  for (int k = j - 1; k >= i + 1; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(strands, std::move(letters));
}

IntMatrix cocycle_F(const BraidWord &w) {
  const SgeElement img = sge_image(w);
  return img.m() - img.m().transposed();
}

IntMatrix cocycle_Fbar(const Permutation &pi) {
  const int n = pi.n();
  // Bubble sort of the image sequence; each swap right-multiplies by an
  // adjacent transposition, so pi = t_{b_f} ... t_{b_1} with the swap list
  // read in reverse.
  std::vector<int> images = pi.images();
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (images[static_cast<std::size_t>(i)] > images[static_cast<std::size_t>(i) + 1]) {
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i) + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
    }
  }

  IntMatrix result(n);
  Permutation prefix = Permutation::identity(n);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    const int k = *it;
    const IntMatrix step = IntMatrix::unit(n, k, k + 1) - IntMatrix::unit(n, k + 1, k);
    result = result + step.permuted(prefix);
    prefix = prefix * Permutation::transposition(n, k, k + 1);
  }
  return result;
}

bool sge_membership(const IntMatrix &m, const Permutation &pi) {
  if (m.n() != pi.n()) throw ValidationError("matrix size differs from permutation degree");
  if (!m.has_zero_diagonal()) throw ValidationError("SGE matrices have zero diagonal");
  return (m - m.transposed()) == cocycle_Fbar(pi);
}

} // namespace ge
