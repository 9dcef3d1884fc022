#ifndef GE_BRAID_HPP
#define GE_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ge/errors.hpp"
#include "ge/permutation.hpp"

namespace ge {

// Braid word on a fixed number of strands. A letter k in [1, n-1] is the
// Artin generator sigma_k; -k is its inverse. A word reads left to right
// and denotes the product of its letters in that order; products compose
// right-to-left, so the rightmost letter acts first on points.
class BraidWord {
public:
  BraidWord(int strands, std::vector<int> letters);
  explicit BraidWord(int strands) : BraidWord(strands, {}) {}

  int strands() const { return strands_; }
  const std::vector<int> &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord &rhs) const; // concatenation
  BraidWord inverse() const;                       // reversed, signs flipped
  BraidWord power(int e) const;

  bool operator==(const BraidWord &rhs) const {
    return strands_ == rhs.strands_ && letters_ == rhs.letters_;
  }
  bool operator!=(const BraidWord &rhs) const { return !(*this == rhs); }

private:
  int strands_;
  std::vector<int> letters_;
};

// Text format: whitespace-separated tokens "k", "-k" or "k^e" / "-k^e",
// where ^e repeats the signed letter e times. "1 2^2 -1" -> [1,2,2,-1].
BraidWord parse_word(const std::string &text, int strands);
std::string format_word(const BraidWord &w);

Int writhe(const BraidWord &w);
Permutation permutation(const BraidWord &w);

// Deletes adjacent (k,-k) pairs until none remain.
BraidWord free_reduce(const BraidWord &w);

// Letters drawn independently and uniformly from the 2(n-1) generators.
// Fixed seed gives a fixed word on every platform.
BraidWord random_word(int strands, std::size_t length, std::uint64_t seed);

} // namespace ge

#endif
