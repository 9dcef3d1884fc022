#include "ge/walk.hpp"

#include <cmath>
#include <string>

#include "ge/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ge {

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

int bits_for(std::uint64_t values) {
  int bits = 0;
  while ((1ull << bits) < values) ++bits;
  return bits;
}

constexpr double kZ99 = 2.5758293035489004; // 99% two-sided normal quantile

} // namespace

WalkDistribution::WalkDistribution(int strands, int max_length)
    : strands_(strands), max_length_(max_length) {
  if (strands < 2) throw ValidationError("walks need at least 2 strands");
  if (max_length < 0) throw ValidationError("negative walk length");
  if (strands > 8)
    throw ResourceError("walk states on more than 8 strands do not fit the packed key");
  ell_bits_ = bits_for(2 * static_cast<std::uint64_t>(max_length) + 1);
  const int perm_bits = bits_for(factorial_u64(strands));
  if (perm_bits + strands * ell_bits_ > 64)
    throw ResourceError("walk state space does not fit a 64-bit key at length " +
                        std::to_string(max_length));
  mass_[encode(GeElement::identity(strands))] = 1;
}

std::uint64_t WalkDistribution::encode(const GeElement &element) const {
  std::uint64_t key = permutation_rank(element.pi());
  for (Int component : element.ell()) {
    const std::uint64_t shifted =
        static_cast<std::uint64_t>(component + max_length_);
    key = (key << ell_bits_) | shifted;
  }
  return key;
}

GeElement WalkDistribution::decode(std::uint64_t key) const {
  std::vector<Int> ell(static_cast<std::size_t>(strands_));
  const std::uint64_t mask = (1ull << ell_bits_) - 1;
  for (int i = strands_ - 1; i >= 0; --i) {
    ell[static_cast<std::size_t>(i)] = static_cast<Int>(key & mask) - max_length_;
    key >>= ell_bits_;
  }
  return GeElement(permutation_from_rank(strands_, key), std::move(ell));
}

void WalkDistribution::step(bool parallel) {
  if (length_ >= max_length_)
    throw ValidationError("walk stepped past its declared maximum length");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> snapshot(mass_.begin(), mass_.end());
  const int gen_count = 2 * (strands_ - 1);
  std::vector<GeElement> generators;
  for (int k = 1; k <= strands_ - 1; ++k) {
    generators.push_back(GeElement::generator(strands_, k));
    generators.push_back(GeElement::generator(strands_, -k));
  }

  std::unordered_map<std::uint64_t, std::uint64_t> next;
  next.reserve(mass_.size() * 2);

  if (!parallel) {
    for (const auto &[key, count] : snapshot) {
      const GeElement state = decode(key);
      for (int g = 0; g < gen_count; ++g) {
        const std::uint64_t out = encode(state * generators[static_cast<std::size_t>(g)]);
        auto &slot = next[out];
        slot = checked_add_u64(slot, count);
      }
    }
  } else {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> local(
        static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(static)
    for (std::size_t idx = 0; idx < snapshot.size(); ++idx) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      const GeElement state = decode(snapshot[idx].first);
      for (int g = 0; g < gen_count; ++g) {
        const std::uint64_t out = encode(state * generators[static_cast<std::size_t>(g)]);
        local[static_cast<std::size_t>(tid)].emplace_back(out, snapshot[idx].second);
      }
    }
    for (const auto &chunk : local) {
      for (const auto &[key, count] : chunk) {
        auto &slot = next[key];
        slot = checked_add_u64(slot, count);
      }
    }
  }

  mass_ = std::move(next);
  ++length_;
}

std::uint64_t WalkDistribution::identity_count() const {
  return count_of(GeElement::identity(strands_));
}

std::uint64_t WalkDistribution::count_of(const GeElement &element) const {
  const auto it = mass_.find(encode(element));
  return it == mass_.end() ? 0 : it->second;
}

std::uint64_t WalkDistribution::total_count() const {
  std::uint64_t total = 0;
  for (const auto &[key, count] : mass_) total = checked_add_u64(total, count);
  return total;
}

std::vector<std::pair<GeElement, std::uint64_t>> WalkDistribution::entries() const {
  std::vector<std::pair<GeElement, std::uint64_t>> out;
  out.reserve(mass_.size());
  for (const auto &[key, count] : mass_) out.emplace_back(decode(key), count);
  return out;
}

std::vector<std::uint64_t> exact_kernel_counts(int strands, int max_length,
                                               std::uint64_t state_budget, bool parallel) {
  WalkDistribution dist(strands, max_length);
  std::vector<std::uint64_t> counts{1};
  for (int step = 1; step <= max_length; ++step) {
    dist.step(parallel);
    if (dist.state_count() > state_budget)
      throw ResourceError("reachable state estimate " + std::to_string(dist.state_count()) +
                          " exceeds the budget of " + std::to_string(state_budget) +
                          " at length " + std::to_string(step));
    counts.push_back(dist.identity_count());
  }
  return counts;
}

namespace {

std::uint64_t hits_in_range(int strands, int length, std::uint64_t begin, std::uint64_t end,
                            std::uint64_t seed) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    const BraidWord w =
        random_word(strands, static_cast<std::size_t>(length), derive_seed(seed, i));
    if (in_kernel_ge(w)) ++hits;
  }
  return hits;
}

} // namespace

std::uint64_t count_kernel_hits_serial(int strands, int length, std::uint64_t samples,
                                       std::uint64_t seed) {
  return hits_in_range(strands, length, 0, samples, seed);
}

std::uint64_t count_kernel_hits_parallel(int strands, int length, std::uint64_t samples,
                                         std::uint64_t seed) {
  std::uint64_t hits = 0;
  const std::int64_t count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(static) reduction(+ : hits)
  for (std::int64_t i = 0; i < count; ++i)
    hits += hits_in_range(strands, length, static_cast<std::uint64_t>(i),
                          static_cast<std::uint64_t>(i) + 1, seed);
  return hits;
}

KernelEstimate kernel_hit_probability(int strands, int length, std::uint64_t samples,
                                      std::uint64_t seed, bool parallel) {
  if (samples < 1) throw ValidationError("at least one sample is required");
  KernelEstimate est;
  est.strands = strands;
  est.length = length;
  est.samples = samples;
  est.hits = parallel ? count_kernel_hits_parallel(strands, length, samples, seed)
                      : count_kernel_hits_serial(strands, length, samples, seed);

  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(est.hits) / n;
  est.estimate = p;
  const double z2 = kZ99 * kZ99;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = kZ99 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  est.ci_low = center - half > 0.0 ? center - half : 0.0;
  est.ci_high = center + half < 1.0 ? center + half : 1.0;
  return est;
}

double estimate_decay_exponent(const std::vector<std::pair<int, double>> &probabilities) {
  std::vector<std::pair<double, double>> points; // (log N, log p)
  for (const auto &[length, p] : probabilities) {
    if (length < 4 || length % 2 != 0 || p <= 0.0) continue;
    points.emplace_back(std::log(static_cast<double>(length)), std::log(p));
  }
  if (points.size() < 3)
    throw EstimationError("need at least 3 even lengths >= 4 with positive probability");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto &[x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return -slope;
}

} // namespace ge
