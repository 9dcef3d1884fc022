#ifndef GE_WALK_HPP
#define GE_WALK_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ge/ge_action.hpp"

namespace ge {

// Exact distribution of ge_image over all words of a given length, stored
// sparsely as packed-state -> word count. One step convolves with the
// uniform measure on the 2(n-1) generators. Linking components of words of
// length N stay in [-N, N], so states pack into 64 bits at desk scale.
class WalkDistribution {
public:
  WalkDistribution(int strands, int max_length);

  int strands() const { return strands_; }
  int length() const { return length_; }
  std::size_t state_count() const { return mass_.size(); }

  void step(bool parallel = false);

  std::uint64_t identity_count() const;
  std::uint64_t count_of(const GeElement &element) const;
  std::uint64_t total_count() const; // checked sum; equals (2(n-1))^length

  std::vector<std::pair<GeElement, std::uint64_t>> entries() const;

private:
  std::uint64_t encode(const GeElement &element) const;
  GeElement decode(std::uint64_t key) const;

  int strands_;
  int max_length_;
  int length_ = 0;
  int ell_bits_;
  std::unordered_map<std::uint64_t, std::uint64_t> mass_;
};

// counts[N] = number of words of length N whose image is the identity,
// N = 0..max_length. Aborts with ResourceError when the reachable state set
// exceeds the budget (overridable via the GE_WALK_STATE_BUDGET variable in
// the CLI).
std::vector<std::uint64_t> exact_kernel_counts(int strands, int max_length,
                                               std::uint64_t state_budget = 4'000'000,
                                               bool parallel = false);

struct KernelEstimate {
  int strands = 0;
  int length = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double ci_low = 0.0; // 99% Wilson interval
  double ci_high = 0.0;
};

// Monte Carlo kernel-return frequency over uniform words of one length.
// Sample i uses seed derive_seed(seed, i), so the result is independent of
// batching and thread count.
std::uint64_t count_kernel_hits_serial(int strands, int length, std::uint64_t samples,
                                       std::uint64_t seed);
std::uint64_t count_kernel_hits_parallel(int strands, int length, std::uint64_t samples,
                                         std::uint64_t seed);
KernelEstimate kernel_hit_probability(int strands, int length, std::uint64_t samples,
                                      std::uint64_t seed, bool parallel = true);

// Least-squares slope of log p against log N, negated. Uses even N >= 4 with
// p > 0 only; needs at least 3 usable points.
double estimate_decay_exponent(const std::vector<std::pair<int, double>> &probabilities);

} // namespace ge

#endif
