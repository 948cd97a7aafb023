#pragma once

#include <vector>

#include "postrop/bitset.hpp"
#include "postrop/linalg.hpp"

namespace postrop {

// H-description of cone(generators) in homogenized form. Rows of G are
// generators; the result lists the facets of the cone they span, restricted
// to the linear span of G (coordinates projected to pivot columns).
struct GeneratorFacets {
  std::vector<int> pivot_cols;    // columns of G used as coordinates
  std::vector<IntVec> normals;    // facet normals in projected coordinates
  std::vector<Bitset> tight;      // tight[f].test(i) iff generator i lies on facet f
};
GeneratorFacets generator_facets(const std::vector<IntVec>& G);

struct Polytope {
  int ambient = 0;
  int dim = -1;
  std::vector<IntVec> vertices;  // sorted lexicographically
  // Affine hull: eq_normals[i] · x == eq_rhs[i].
  std::vector<IntVec> eq_normals;
  std::vector<long long> eq_rhs;
  // Facets: facet_normals[f] · x >= facet_offsets[f]. For full-dimensional
  // polytopes these are the primitive inner normals, sorted.
  std::vector<IntVec> facet_normals;
  std::vector<long long> facet_offsets;
  std::vector<std::vector<int>> facet_vertices;  // sorted vertex indices per facet

  bool full_dimensional() const { return dim == ambient; }
  bool contains(const IntVec& x) const;
};

// Exact convex hull of a finite nonempty point set (duplicates and
// non-extreme points allowed).
Polytope convex_hull(const std::vector<IntVec>& points);

// Vertex–vertex adjacency (edges) derived from facet incidences.
std::vector<std::pair<int, int>> polytope_edges(const Polytope& P);

// All nonempty faces grouped by dimension: faces[j] lists the j-dimensional
// faces, each a sorted list of vertex indices. faces[dim] = {all vertices}.
std::vector<std::vector<std::vector<int>>> face_lattice(const Polytope& P);

// (f_{-1}, f_0, ..., f_dim), including the empty face and the polytope itself.
std::vector<long long> f_vector(const Polytope& P);

}  // namespace postrop
