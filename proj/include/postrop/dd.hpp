#pragma once

#include <vector>

#include "postrop/bitset.hpp"
#include "postrop/linalg.hpp"

namespace postrop {

struct ConeRays {
  std::vector<IntVec> rays;        // primitive integer extreme rays, sorted
  std::vector<Bitset> zero_sets;   // zero_sets[r].test(i) iff A_i · rays[r] == 0
};

// Extreme rays of the pointed cone {x in R^d : A x >= 0} by the double
// description method with exact integer arithmetic (64-bit with automatic
// fallback to GMP on overflow). Requires rank(A) == d.
ConeRays extreme_rays(const std::vector<IntVec>& A, int d);

}  // namespace postrop
