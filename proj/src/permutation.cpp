#include "ge/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ge/errors.hpp"

namespace ge {

Permutation::Permutation(int n) {
  if (n < 1) throw ValidationError("permutation degree must be at least 1");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw ValidationError("permutation image sequence is empty");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
      throw ValidationError("image sequence is not a bijection of {1,...,n}");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  if (i < 1 || i > n || j < 1 || j > n)
    throw RangeError("transposition entries out of range");
  std::swap(p.images_[static_cast<std::size_t>(i) - 1],
            p.images_[static_cast<std::size_t>(j) - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (apply(i) != i) return false;
  return true;
}

bool Permutation::is_even() const {
  int inversions = 0;
  const int m = n();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)])
        ++inversions;
  return inversions % 2 == 0;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>(apply(i)) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  if (n() != rhs.n()) throw ValidationError("permutation degrees differ in composition");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= n(); ++i) out[static_cast<std::size_t>(i) - 1] = apply(rhs.apply(i));
  return Permutation(std::move(out));
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (int start = 1; start <= n(); ++start) {
    if (seen[static_cast<std::size_t>(start) - 1] || apply(start) == start) continue;
    out += '(';
    int a = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(a) - 1]) {
      seen[static_cast<std::size_t>(a) - 1] = true;
      if (!first) out += ' ';
      out += std::to_string(a);
      first = false;
      a = apply(a);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::uint64_t permutation_rank(const Permutation &p) {
  const int n = p.n();
  std::uint64_t rank = 0;
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  for (int i = 0; i < n; ++i) {
    const int v = p.images()[static_cast<std::size_t>(i)];
    const auto it = std::find(remaining.begin(), remaining.end(), v);
    const auto pos = static_cast<std::uint64_t>(it - remaining.begin());
    std::uint64_t fact = 1;
    for (int k = 2; k <= n - 1 - i; ++k) fact *= static_cast<std::uint64_t>(k);
    rank += pos * fact;
    remaining.erase(it);
  }
  return rank;
}

Permutation permutation_from_rank(int n, std::uint64_t rank) {
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint64_t fact = 1;
    for (int k = 2; k <= n - 1 - i; ++k) fact *= static_cast<std::uint64_t>(k);
    const auto pos = static_cast<std::size_t>(rank / fact);
    rank %= fact;
    images.push_back(remaining[pos]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace ge
