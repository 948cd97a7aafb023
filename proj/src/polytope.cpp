#include "postrop/polytope.hpp"

#include <algorithm>
#include <unordered_set>

#include "postrop/dd.hpp"
#include "postrop/errors.hpp"

namespace postrop {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

GeneratorFacets generator_facets(const std::vector<IntVec>& G) {
  if (G.empty()) throw InternalError("generator_facets: no generators");
  const int N = static_cast<int>(G.front().size());
  Echelon e = row_echelon(to_qmat(G), N);
  GeneratorFacets out;
  out.pivot_cols = e.pivot_cols;
  std::sort(out.pivot_cols.begin(), out.pivot_cols.end());
  const int D = static_cast<int>(out.pivot_cols.size());
  std::vector<IntVec> P;
  P.reserve(G.size());
  for (const auto& g : G) {
    IntVec r(D);
    for (int t = 0; t < D; ++t) r[t] = g[out.pivot_cols[t]];
    P.push_back(std::move(r));
  }
  ConeRays cr = extreme_rays(P, D);
  out.normals = std::move(cr.rays);
  out.tight = std::move(cr.zero_sets);
  return out;
}

bool Polytope::contains(const IntVec& x) const {
  auto dot = [](const IntVec& a, const IntVec& b) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    return s;
  };
  for (std::size_t i = 0; i < eq_normals.size(); ++i)
    if (dot(eq_normals[i], x) != eq_rhs[i]) return false;
  for (std::size_t f = 0; f < facet_normals.size(); ++f)
    if (dot(facet_normals[f], x) < facet_offsets[f]) return false;
  return true;
}

Polytope convex_hull(const std::vector<IntVec>& input) {
  if (input.empty()) throw InternalError("convex_hull: empty point set");
  std::vector<IntVec> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int N = static_cast<int>(pts.front().size());
  Polytope P;
  P.ambient = N;

  // Affine hull equations.
  QMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec r(N);
    for (int j = 0; j < N; ++j) r[j] = Rational(static_cast<long>(pts[i][j] - pts[0][j]));
    diffs.push_back(std::move(r));
  }
  if (diffs.empty()) diffs.push_back(QVec(N, Rational(0)));
  for (auto& y : nullspace(diffs, N)) {
    IntVec yi = to_intvec_checked(y);
    long long rhs = 0;
    for (int j = 0; j < N; ++j) rhs += yi[j] * pts[0][j];
    P.eq_normals.push_back(std::move(yi));
    P.eq_rhs.push_back(rhs);
  }
  P.dim = N - static_cast<int>(P.eq_normals.size());

  if (P.dim == 0) {
    P.vertices = pts;
    return P;
  }

  // Homogenize with the constant coordinate first so it is always a pivot.
  std::vector<IntVec> G;
  for (const auto& p : pts) {
    IntVec g(N + 1);
    g[0] = 1;
    std::copy(p.begin(), p.end(), g.begin() + 1);
    G.push_back(std::move(g));
  }
  GeneratorFacets gf = generator_facets(G);
  if (gf.pivot_cols.empty() || gf.pivot_cols[0] != 0) throw InternalError("convex_hull: bad homogenization");

  // A point is a vertex iff the points tight on all its facets are just itself.
  const std::size_t m = pts.size(), F = gf.normals.size();
  std::vector<int> new_index(m, -1);
  std::vector<int> vertex_ids;
  for (std::size_t i = 0; i < m; ++i) {
    Bitset acc(m);
    bool any = false;
    for (std::size_t f = 0; f < F; ++f) {
      if (!gf.tight[f].test(i)) continue;
      if (!any) {
        acc = gf.tight[f];
        any = true;
      } else {
        acc &= gf.tight[f];
      }
    }
    if (any && acc.count() == 1) {
      new_index[i] = static_cast<int>(vertex_ids.size());
      vertex_ids.push_back(static_cast<int>(i));
    }
  }
  for (int i : vertex_ids) P.vertices.push_back(pts[i]);

  struct FacetRec {
    IntVec normal;
    long long offset;
    std::vector<int> verts;
  };
  std::vector<FacetRec> recs;
  for (std::size_t f = 0; f < F; ++f) {
    FacetRec r;
    r.normal.assign(N, 0);
    for (std::size_t t = 1; t < gf.pivot_cols.size(); ++t) r.normal[gf.pivot_cols[t] - 1] = gf.normals[f][t];
    r.offset = -gf.normals[f][0];
    for (int i : gf.tight[f].indices())
      if (new_index[i] >= 0) r.verts.push_back(new_index[i]);
    recs.push_back(std::move(r));
  }
  std::sort(recs.begin(), recs.end(), [](const FacetRec& a, const FacetRec& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });
  for (auto& r : recs) {
    P.facet_normals.push_back(std::move(r.normal));
    P.facet_offsets.push_back(r.offset);
    P.facet_vertices.push_back(std::move(r.verts));
  }
  return P;
}

std::vector<std::pair<int, int>> polytope_edges(const Polytope& P) {
  const int V = static_cast<int>(P.vertices.size());
  std::vector<std::pair<int, int>> edges;
  if (V < 2) return edges;
  const std::size_t F = P.facet_vertices.size();
  std::vector<Bitset> vf(V, Bitset(F));
  std::vector<Bitset> fv(F, Bitset(V));
  for (std::size_t f = 0; f < F; ++f)
    for (int v : P.facet_vertices[f]) {
      vf[v].set(f);
      fv[f].set(v);
    }
  for (int u = 0; u < V; ++u)
    for (int v = u + 1; v < V; ++v) {
      Bitset common = vf[u] & vf[v];
      Bitset on(V);
      bool first = true;
      for (int f : common.indices()) {
        if (first) {
          on = fv[f];
          first = false;
        } else {
          on &= fv[f];
        }
      }
      std::size_t cnt = first ? static_cast<std::size_t>(V) : on.count();
      if (cnt == 2) edges.emplace_back(u, v);
    }
  return edges;
}

std::vector<std::vector<std::vector<int>>> face_lattice(const Polytope& P) {
  const int D = P.dim;
  std::vector<std::vector<std::vector<int>>> faces(std::max(D, 0) + 1);
  std::vector<int> all(P.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  faces[D] = {all};
  if (D == 0) return faces;
  faces[D - 1] = P.facet_vertices;
  std::sort(faces[D - 1].begin(), faces[D - 1].end());
  const std::size_t F = P.facet_vertices.size();
  const std::size_t V = P.vertices.size();
  std::vector<std::vector<int>> facets_of(V);
  for (std::size_t f = 0; f < F; ++f)
    for (int v : P.facet_vertices[f]) facets_of[v].push_back(static_cast<int>(f));

  std::vector<std::vector<int>> buckets(F);
  for (int j = D - 2; j >= 0; --j) {
    std::unordered_set<std::vector<int>, VecHash> seen;
    for (const auto& G : faces[j + 1]) {
      for (auto& b : buckets) b.clear();
      for (int v : G)
        for (int f : facets_of[v]) buckets[f].push_back(v);
      std::vector<std::vector<int>> cands;
      for (std::size_t f = 0; f < F; ++f)
        if (!buckets[f].empty() && buckets[f].size() < G.size()) cands.push_back(buckets[f]);
      std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
      });
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      std::vector<const std::vector<int>*> maximal;
      for (const auto& c : cands) {
        bool dominated = false;
        for (auto* mx : maximal)
          if (mx->size() > c.size() && std::includes(mx->begin(), mx->end(), c.begin(), c.end())) {
            dominated = true;
            break;
          }
        if (!dominated) maximal.push_back(&c);
      }
      for (auto* mx : maximal) seen.insert(*mx);
    }
    faces[j].assign(seen.begin(), seen.end());
    std::sort(faces[j].begin(), faces[j].end());
  }
  return faces;
}

std::vector<long long> f_vector(const Polytope& P) {
  auto faces = face_lattice(P);
  std::vector<long long> f{1};
  for (const auto& level : faces) f.push_back(static_cast<long long>(level.size()));
  return f;
}

}  // namespace postrop
