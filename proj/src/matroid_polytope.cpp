#include <algorithm>

#include "postrop/errors.hpp"
#include "postrop/matroid.hpp"
#include "postrop/polytope.hpp"

namespace postrop {

bool is_matroid_polytope_vertexset(int n, int k, const std::vector<SubsetK>& S) {
  if (S.empty()) throw InputError("vertex set is empty");
  std::vector<IntVec> pts;
  for (const auto& s : S) {
    if (s.n() != n || s.size() != k) throw InputError("subset of wrong size or ground set");
    IntVec v(n, 0);
    for (int x : s.elements()) v[x - 1] = 1;
    pts.push_back(std::move(v));
  }
  Polytope P = convex_hull(pts);
  std::vector<IntVec> unique_pts = pts;
  std::sort(unique_pts.begin(), unique_pts.end());
  unique_pts.erase(std::unique(unique_pts.begin(), unique_pts.end()), unique_pts.end());
  if (P.vertices != unique_pts) return false;
  for (auto [u, v] : polytope_edges(P)) {
    int plus = 0, minus = 0;
    for (int i = 0; i < n; ++i) {
      long long d = P.vertices[u][i] - P.vertices[v][i];
      if (d == 1)
        ++plus;
      else if (d == -1)
        ++minus;
      else if (d != 0)
        return false;
    }
    if (plus != 1 || minus != 1) return false;
  }
  return true;
}

}  // namespace postrop
