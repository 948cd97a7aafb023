#pragma once

#include <vector>

#include "postrop/matroid.hpp"

namespace postrop {

// One step of the canonical reduction of a positroid to a single basis,
// driven by its bounded affine permutation alone.
enum class StepKind { Loop, Coloop, Bridge };

struct ShapeStep {
  StepKind kind;
  int level_n;              // ground-set size before the step
  int level_k;              // rank before the step
  int i;                    // position (current labels 1..level_n)
  std::vector<int> labels;  // original label of each current position
  int orig_u() const { return labels[i - 1]; }
  int orig_v() const { return labels[i % level_n]; }  // cyclic successor (bridges)
};

struct ShapeReduction {
  std::vector<ShapeStep> steps;
  Mask base = 0;  // the single remaining basis, in original labels
  int bridges() const;
};

// Scan i = 1..n and apply the first applicable case (loop, coloop, or a
// bridge position i+1 <= f(i) < f(i+1) <= i+n); repeat until one basis is left.
ShapeReduction canonical_reduction(const BoundedAffinePermutation& f);

// Number of affine inversions: pairs (i, j), 1 <= i <= n, i < j, f(i) > f(j).
int affine_length(const BoundedAffinePermutation& f);

}  // namespace postrop
