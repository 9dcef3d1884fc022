#include "ge/ge_action.hpp"

#include <numeric>
#include <string>

namespace ge {

namespace {

Int parity_sum(const std::vector<Int> &ell) {
  Int sum = 0;
  for (Int v : ell) sum = checked_add(sum, v);
  return sum;
}

} // namespace

GeElement::GeElement(Permutation pi, std::vector<Int> ell)
    : pi_(std::move(pi)), ell_(std::move(ell)) {
  if (static_cast<int>(ell_.size()) != pi_.n())
    throw ValidationError("linking vector length differs from permutation degree");
}

GeElement GeElement::identity(int n) {
  return GeElement(Permutation::identity(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
}

GeElement GeElement::generator(int n, int letter) {
  const int k = letter > 0 ? letter : -letter;
  if (k < 1 || k > n - 1) throw RangeError("generator index out of range");
  std::vector<Int> ell(static_cast<std::size_t>(n), 0);
  if (letter > 0)
    ell[static_cast<std::size_t>(k)] = 1; // e_{k+1}
  else
    ell[static_cast<std::size_t>(k) - 1] = -1; // -e_k
  return GeElement(Permutation::transposition(n, k, k + 1), std::move(ell));
}

GeElement GeElement::symmetric_generator(int n, int letter) {
  const int k = letter > 0 ? letter : -letter;
  if (k < 1 || k > n - 1) throw RangeError("generator index out of range");
  const Int sign = letter > 0 ? 1 : -1;
  std::vector<Int> ell(static_cast<std::size_t>(n), 0);
  ell[static_cast<std::size_t>(k) - 1] = sign;
  ell[static_cast<std::size_t>(k)] = sign;
  return GeElement(Permutation::transposition(n, k, k + 1), std::move(ell));
}

GeElement GeElement::operator*(const GeElement &rhs) const {
  if (n() != rhs.n()) throw ValidationError("mixed degrees in GeElement product");
  std::vector<Int> ell(ell_.size());
  for (int a = 1; a <= n(); ++a)
    ell[static_cast<std::size_t>(a) - 1] =
        checked_add(rhs.ell_[static_cast<std::size_t>(a) - 1],
                    ell_[static_cast<std::size_t>(rhs.pi_.apply(a)) - 1]);
  return GeElement(pi_ * rhs.pi_, std::move(ell));
}

GeElement GeElement::inverse() const {
  Permutation inv = pi_.inverse();
  std::vector<Int> ell(ell_.size());
  for (int a = 1; a <= n(); ++a)
    ell[static_cast<std::size_t>(a) - 1] = -ell_[static_cast<std::size_t>(inv.apply(a)) - 1];
  return GeElement(std::move(inv), std::move(ell));
}

bool GeElement::is_identity() const {
  if (!pi_.is_identity()) return false;
  for (Int v : ell_)
    if (v != 0) return false;
  return true;
}

GePoint GeElement::apply(const GePoint &p) const {
  if (p.strand < 1 || p.strand > n()) throw RangeError("point strand out of range");
  return GePoint{pi_.apply(p.strand),
                 checked_add(p.level, ell_[static_cast<std::size_t>(p.strand) - 1])};
}

GePoint ge_apply(const BraidWord &w, GePoint p) {
  if (p.strand < 1 || p.strand > w.strands()) throw RangeError("point strand out of range");
  const auto &letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int letter = *it;
    const int k = letter > 0 ? letter : -letter;
    if (p.strand != k && p.strand != k + 1) continue;
    if (letter > 0) {
      if (p.strand == k)
        p = GePoint{k + 1, p.level};
      else
        p = GePoint{k, checked_add(p.level, 1)};
    } else {
      if (p.strand == k)
        p = GePoint{k + 1, checked_add(p.level, -1)};
      else
        p = GePoint{k, p.level};
    }
  }
  return p;
}

GeElement ge_image(const BraidWord &w) {
  GeElement acc = GeElement::identity(w.strands());
  for (int letter : w.letters()) acc = acc * GeElement::generator(w.strands(), letter);
  return acc;
}

GeElement symge_image(const BraidWord &w) {
  GeElement acc = GeElement::identity(w.strands());
  for (int letter : w.letters())
    acc = acc * GeElement::symmetric_generator(w.strands(), letter);
  return acc;
}

bool in_kernel_ge(const BraidWord &w) { return ge_image(w).is_identity(); }

bool in_kernel_symge(const BraidWord &w) { return symge_image(w).is_identity(); }

bool wp_realizable(Int writhe_value, const Permutation &pi) {
  const Int w_mod = ((writhe_value % 2) + 2) % 2;
  return w_mod == pi.parity();
}

bool ge_realizable(const std::vector<Int> &ell, const Permutation &pi) {
  if (static_cast<int>(ell.size()) != pi.n())
    throw ValidationError("linking vector length differs from permutation degree");
  if (pi.n() < 3)
    throw UnsupportedRankError("realizability needs at least 3 strands");
  const Int sum_mod = ((parity_sum(ell) % 2) + 2) % 2;
  return sum_mod == pi.parity();
}

BraidWord construct_braid(const Permutation &pi, const std::vector<Int> &ell) {
  const int n = pi.n();
  if (!ge_realizable(ell, pi))
    throw RealizabilityError("sum of linking vector and permutation have different parity");

  // A positive word realizing pi: bubble sort the image sequence; each
  // adjacent swap right-multiplies by a transposition, so the word is the
  // reversed swap list.
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
  std::vector<int> letters(swaps.rbegin(), swaps.rend());
  BraidWord word(n, std::move(letters));

  // Pure correction: express the residual in the even-sum lattice basis
  // sigma_k^2 -> e_k + e_{k+1} and (sigma_1 sigma_2)^3 -> 2(e_1+e_2+e_3).
  const GeElement base = ge_image(word);
  std::vector<Int> residual(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    residual[static_cast<std::size_t>(i)] = checked_sub(ell[static_cast<std::size_t>(i)],
                                                        base.ell()[static_cast<std::size_t>(i)]);

  std::vector<Int> pair_coeff(static_cast<std::size_t>(n), 0); // coefficient of sigma_k^2
  for (int i = n; i >= 4; --i) {
    const Int c = residual[static_cast<std::size_t>(i) - 1];
    pair_coeff[static_cast<std::size_t>(i) - 2] = c;
    residual[static_cast<std::size_t>(i) - 1] = 0;
    residual[static_cast<std::size_t>(i) - 2] =
        checked_sub(residual[static_cast<std::size_t>(i) - 2], c);
  }
  const Int r1 = residual[0], r2 = residual[1], r3 = residual[2];
  const Int gamma = (checked_sub(checked_add(r1, r3), r2)) / 2;
  pair_coeff[0] = checked_add(pair_coeff[0], checked_sub(r1, checked_mul(2, gamma)));
  pair_coeff[1] = checked_add(pair_coeff[1], checked_sub(r3, checked_mul(2, gamma)));

  std::vector<int> tail = word.letters();
  for (int k = 1; k <= n - 1; ++k) {
    const Int c = pair_coeff[static_cast<std::size_t>(k) - 1];
    const int letter = c > 0 ? k : -k;
    for (Int rep = 0; rep < (c > 0 ? c : -c); ++rep) {
      tail.push_back(letter);
      tail.push_back(letter);
    }
  }
  for (Int rep = 0; rep < (gamma > 0 ? gamma : -gamma); ++rep) {
    if (gamma > 0) {
      tail.insert(tail.end(), {1, 2, 1, 2, 1, 2});
    } else {
      tail.insert(tail.end(), {-2, -1, -2, -1, -2, -1});
    }
  }

  BraidWord result(n, std::move(tail));
  if (ge_image(result) != GeElement(pi, ell))
    throw Error("internal_error", "constructed word failed its roundtrip check");
  return result;
}

} // namespace ge
