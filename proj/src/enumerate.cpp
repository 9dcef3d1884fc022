#include "ge/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ge {

namespace {

// Flat integer encoding used for hashing and canonical ordering.
std::vector<Int> flatten(const GeElement &e) {
  std::vector<Int> out;
  out.reserve(e.ell().size() * 2);
  for (int v : e.pi().images()) out.push_back(v);
  for (Int v : e.ell()) out.push_back(v);
  return out;
}

std::vector<Int> flatten(const SgeElement &e) {
  std::vector<Int> out;
  out.reserve(e.m().data().size() + e.pi().images().size());
  for (int v : e.pi().images()) out.push_back(v);
  for (Int v : e.m().data()) out.push_back(v);
  return out;
}

struct VecHash {
  std::size_t operator()(const std::vector<Int> &v) const {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Generic layered expansion: start at the identity, multiply each frontier
// element by every generator, dedup against everything seen.
template <typename Elem>
std::vector<Elem> image_ball(const Elem &identity, const std::vector<Elem> &generators,
                             int radius, bool parallel) {
  std::unordered_set<std::vector<Int>, VecHash> seen{flatten(identity)};
  std::vector<Elem> elements{identity};
  std::size_t frontier_begin = 0;

  for (int layer = 0; layer < radius; ++layer) {
    const std::size_t frontier_end = elements.size();
    if (frontier_begin == frontier_end) break;

    std::vector<std::vector<Elem>> produced;
    if (!parallel) {
      produced.resize(1);
      for (std::size_t i = frontier_begin; i < frontier_end; ++i)
        for (const Elem &g : generators) produced[0].push_back(elements[i] * g);
    } else {
      int threads = 1;
#ifdef _OPENMP
      threads = omp_get_max_threads();
#endif
      produced.resize(static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(static)
      for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        for (const Elem &g : generators)
          produced[static_cast<std::size_t>(tid)].push_back(elements[i] * g);
      }
    }

    frontier_begin = frontier_end;
    for (const auto &chunk : produced)
      for (const Elem &candidate : chunk)
        if (seen.insert(flatten(candidate)).second) elements.push_back(candidate);
  }

  std::sort(elements.begin(), elements.end(),
            [](const Elem &a, const Elem &b) { return flatten(a) < flatten(b); });
  return elements;
}

} // namespace

std::vector<GeElement> ge_image_ball(int strands, int radius, bool parallel) {
  std::vector<GeElement> generators;
  for (int k = 1; k <= strands - 1; ++k) {
    generators.push_back(GeElement::generator(strands, k));
    generators.push_back(GeElement::generator(strands, -k));
  }
  return image_ball(GeElement::identity(strands), generators, radius, parallel);
}

std::vector<SgeElement> sge_image_ball(int strands, int radius, bool parallel) {
  std::vector<SgeElement> generators;
  for (int k = 1; k <= strands - 1; ++k) {
    generators.push_back(SgeElement::generator(strands, k));
    generators.push_back(SgeElement::generator(strands, -k));
  }
  return image_ball(SgeElement::identity(strands), generators, radius, parallel);
}

std::uint64_t fbar_range_violations(int n, bool parallel) {
  const std::uint64_t total = [n] {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  }();

  std::uint64_t violations = 0;
  const std::int64_t count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static) reduction(+ : violations) if (parallel)
  for (std::int64_t rank = 0; rank < count; ++rank) {
    const Permutation pi = permutation_from_rank(n, static_cast<std::uint64_t>(rank));
    const IntMatrix fbar = cocycle_Fbar(pi);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (fbar.at(i, j) != 0 && fbar.at(i, j) != 1) ++violations;
  }
  return violations;
}

} // namespace ge
