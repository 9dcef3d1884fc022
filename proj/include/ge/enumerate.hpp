#ifndef GE_ENUMERATE_HPP
#define GE_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "ge/ge_action.hpp"
#include "ge/sge.hpp"

namespace ge {

// Ball of a given radius in the Cayley graph of the image group: every
// element reachable as the image of some word of length <= radius. Output is
// sorted canonically, so the serial and parallel kernels agree bytewise.
std::vector<GeElement> ge_image_ball(int strands, int radius, bool parallel = false);
std::vector<SgeElement> sge_image_ball(int strands, int radius, bool parallel = false);

// Exhaustive {0,1} sweep of the strict upper triangle of Fbar over all of
// S_n; returns the number of (permutation, entry) violations, 0 when the
// range property holds.
std::uint64_t fbar_range_violations(int n, bool parallel = false);

} // namespace ge

#endif
