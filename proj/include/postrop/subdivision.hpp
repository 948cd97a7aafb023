#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "postrop/linalg.hpp"
#include "postrop/matroid.hpp"
#include "postrop/tropical.hpp"

namespace postrop {

// A regular subdivision of the matroid polytope of `support`, given by its
// maximal cells. Each cell is the lexicographically sorted list of bases I
// whose vertex e_I lies in it; the cells are sorted lexicographically.
struct Subdivision {
  int n = 0, k = 0;
  std::vector<Mask> support;
  std::vector<std::vector<Mask>> maximal_faces;
  std::optional<TropVector> weights;  // the inducing vector, when known

  // Cells as validated positroids; throws PreconditionError if one is not.
  std::vector<Positroid> positroids() const;
  bool trivial() const { return maximal_faces.size() == 1; }
};

// A wall hyperplane normal·x = rhs between two adjacent maximal cells, in the
// representative with nonnegative coefficients and smallest support.
struct Cut {
  IntVec normal;
  long long rhs = 0;
  friend bool operator==(const Cut& a, const Cut& b) { return a.normal == b.normal && a.rhs == b.rhs; }
  friend bool operator<(const Cut& a, const Cut& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.rhs < b.rhs;
  }
};

Subdivision regular_subdivision(const TropVector& p);
// Relabel x -> x + t (mod n) in every cell; weights are dropped.
Subdivision rotated(const Subdivision& s, int t);
// Cells {I : the indicator e_I satisfies pred_j}, one per predicate, in the
// canonical Subdivision form (empty cells dropped).
Subdivision subdivision_from_pieces(int n, int k, const std::vector<std::function<bool(const std::vector<int>&)>>& pieces);

// Sorted, duplicate-free list of all wall hyperplanes.
std::vector<Cut> cuts(const Subdivision& s);

// Every face of every cell (all dimensions), each a sorted list of bases; no duplicates.
std::vector<std::vector<Mask>> all_faces(const Subdivision& s);

bool is_positroid_subdivision(const Subdivision& s);

// {p : the subdivision induced by p coarsens or equals s}, on the coordinates
// of s.support (entries outside the support are ∞).
struct SecondaryCone {
  int n = 0, k = 0;
  std::vector<Mask> coords;
  std::vector<QVec> equalities;    // f · p == 0
  std::vector<QVec> inequalities;  // f · p >= 0, one per (cell, adjacent cell) pair
  bool feasible = false;           // some p satisfies every inequality strictly
  int dimension = -1;              // -1 when infeasible
  std::optional<QVec> interior_point;

  bool contains(const TropVector& p) const;
};

SecondaryCone secondary_cone(const Subdivision& s);

// dim(M) + 1 - dim(secondary cone), where M is the support positroid.
int dim_subdivision(const Subdivision& s);
// Sum over maximal cells of (dim(cell positroid) - (n - 1)).
int ndim(const Subdivision& s);

// Normalized lattice volume of a matroid polytope (relative to its affine lattice).
Integer normalized_volume(const Matroid& m);
Integer normalized_volume(const Positroid& p);

// The unique a with p_I + a·e_I = 0 on a full-dimensional cell F, if it exists.
std::optional<ActVector> face_gauge(const TropVector& p, const std::vector<Mask>& face);

}  // namespace postrop
