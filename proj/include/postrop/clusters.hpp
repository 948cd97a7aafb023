#pragma once

#include <optional>
#include <vector>

#include "postrop/matroid.hpp"

namespace postrop {

bool weakly_separated(const SubsetK& I, const SubsetK& J);
bool weakly_separated_masks(Mask I, Mask J);

// Cell dimension: number of bridge steps in the canonical reduction.
int dim_positroid(const Positroid& p);

bool is_cluster(const Positroid& p, const std::vector<SubsetK>& C);

struct Cluster {
  Positroid positroid;
  std::vector<Mask> members;  // lexicographically sorted
  std::vector<SubsetK> subsets() const;
  bool contains(Mask m) const;
};

// A three-term exchange frame (S; a<b<c<d) for a cluster member.
struct ExchangeFrame {
  Mask S = 0;
  int a = 0, b = 0, c = 0, d = 0;
  Mask target = 0;   // the member being replaced (Sac or Sbd)
  Mask partner = 0;  // its replacement
  Mask Sab() const { return S | bit(a) | bit(b); }
  Mask Scd() const { return S | bit(c) | bit(d); }
  Mask Sad() const { return S | bit(a) | bit(d); }
  Mask Sbc() const { return S | bit(b) | bit(c); }
};

// First exchange frame (in a fixed deterministic search order) that exhibits J
// as mutable in the member set `members` of a cluster of p. Necklace members
// are frozen and never mutable. Each of the four
// neighbors Sab, Scd, Sad, Sbc must be a member or a non-basis of p, and the
// partner must be a basis weakly separated from the remaining members.
std::optional<ExchangeFrame> exchange_frame(const Positroid& p, const std::vector<Mask>& members, Mask J);

Cluster mutate(const Cluster& C, const SubsetK& J);

// Greedy lexicographic completion of W ∪ necklace to a maximal weakly separated collection.
Cluster extend_to_cluster(const Positroid& p, const std::vector<SubsetK>& W);

struct GaugeFix {
  Cluster cluster;
  std::vector<Mask> members;  // n elements of the cluster, sorted
};

GaugeFix find_gauge_fix(const Positroid& p);

// Integral span of the indicator vectors equals {x in Z^n : k | sum x}.
bool lattice_span_ok(int n, int k, const std::vector<SubsetK>& G);
bool lattice_span_ok_masks(int n, int k, const std::vector<Mask>& G);

}  // namespace postrop
