#ifndef GE_PERMUTATION_HPP
#define GE_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace ge {

// Permutation of {1,...,n}, stored as a one-indexed image sequence:
// images()[i-1] is the image of i. Composition is right-to-left,
// (p * q)(a) = p(q(a)).
class Permutation {
public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int i, int j);

  int n() const { return static_cast<int>(images_.size()); }
  int apply(int a) const { return images_[static_cast<std::size_t>(a) - 1]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  int parity() const { return is_even() ? 0 : 1; }

  Permutation inverse() const;
  Permutation operator*(const Permutation &rhs) const;
  bool operator==(const Permutation &rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation &rhs) const { return !(*this == rhs); }

  // Disjoint-cycle rendering for human-facing output, e.g. "(1 3 2)".
  std::string cycle_string() const;

private:
  std::vector<int> images_;
};

// Lexicographic rank of the image sequence among all n! permutations.
std::uint64_t permutation_rank(const Permutation &p);
Permutation permutation_from_rank(int n, std::uint64_t rank);

std::vector<Permutation> all_permutations(int n);

} // namespace ge

#endif
