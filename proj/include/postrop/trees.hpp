#pragma once

#include <string>
#include <vector>

#include "postrop/subdivision.hpp"
#include "postrop/subset.hpp"
#include "postrop/tropical.hpp"

namespace postrop {

// A planar tree with leaves 1..n in cyclic order and internal vertices of
// degree >= 3, stored canonically by its internal edges. Each internal edge
// is the split of the leaves it induces, recorded as the side not containing
// leaf n: a cyclic interval {a, ..., b} with 1 <= a < b <= n-1 and
// 2 <= b - a + 1 <= n - 2. The splits are pairwise nested or disjoint.
class PlanarTree {
 public:
  // Validating: every split is an interval of the stated form, and the set is noncrossing.
  static PlanarTree from_splits(int n, std::vector<Mask> splits);
  static PlanarTree star(int n);
  // Nested parenthesized leaf lists in cyclic order, rooted at the neighbor of
  // leaf n, e.g. "(1,2,(3,4),5)". Throws InputError.
  static PlanarTree parse(const std::string& text);

  int n() const { return n_; }
  const std::vector<Mask>& splits() const { return splits_; }  // sorted increasingly
  // Each internal vertex as the leaf sets of the components of T - v, in
  // cyclic order. There are splits().size() + 1 internal vertices.
  std::vector<std::vector<Mask>> vertices() const;
  std::string str() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.n_ == b.n_ && a.splits_ == b.splits_; }
  friend bool operator!=(const PlanarTree& a, const PlanarTree& b) { return !(a == b); }
  friend bool operator<(const PlanarTree& a, const PlanarTree& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.splits_ < b.splits_;
  }

 private:
  PlanarTree(int n, std::vector<Mask> s) : n_(n), splits_(std::move(s)) {}
  int n_ = 0;
  std::vector<Mask> splits_;
};

// Maximal cells {ij : i, j in different components of T - v}, one per internal vertex v.
Subdivision subdivision_from_tree(const PlanarTree& T);
// Inverse of subdivision_from_tree; PreconditionError if some wall is not of the form x_A = 1.
PlanarTree tree_from_subdivision(const Subdivision& s);
// The tree whose quartets resolve as the three-term relations of p dictate
// (k = 2, finite, positive tropical; PreconditionError otherwise).
PlanarTree tree_from_trop(const TropVector& p);
// Sum over splits A of the indicator of {ij : i, j in A}.
TropVector trop_from_tree(const PlanarTree& T);
// Every planar tree on n leaves (all noncrossing split sets), sorted.
std::vector<PlanarTree> all_planar_trees(int n);

}  // namespace postrop
