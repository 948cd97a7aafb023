#include "postrop/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "postrop/clusters.hpp"
#include "postrop/errors.hpp"
#include "postrop/lp.hpp"
#include "postrop/polytope.hpp"

namespace postrop {

namespace {

IntVec indicator(Mask m, int n) {
  IntVec v(n, 0);
  for (int x : mask_elements(m)) v[x - 1] = 1;
  return v;
}

QVec affine_row(Mask m, int n) {
  QVec v(n + 1, Rational(0));
  v[0] = 1;
  for (int x : mask_elements(m)) v[x] = 1;
  return v;
}

int affine_rank(const std::vector<Mask>& masks, int n) {
  QMat rows;
  for (Mask m : masks) rows.push_back(affine_row(m, n));
  return rank(rows, n + 1);
}

std::vector<Mask> sorted_masks(std::vector<Mask> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

std::vector<Mask> intersect(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  std::vector<Mask> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), lex_less);
  return out;
}

Positroid as_positroid(int n, int k, const std::vector<Mask>& masks) {
  try {
    return Positroid::from_matroid(Matroid::from_masks(n, k, masks));
  } catch (const InputError& e) {
    throw PreconditionError(std::string("cell is not a positroid: ") + e.what());
  }
}

// Coefficients mu with sum mu_b (1, e_b) = (1, e_target) over an affine basis.
QVec affine_coefficients(const std::vector<Mask>& basis, Mask target, int n) {
  QMat A(n + 1, QVec(basis.size(), Rational(0)));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    QVec r = affine_row(basis[b], n);
    for (int i = 0; i <= n; ++i) A[i][b] = r[i];
  }
  QVec mu;
  if (!solve(A, affine_row(target, n), static_cast<int>(basis.size()), mu))
    throw InputError("secondary_cone: a point lies outside the affine span of its cell");
  return mu;
}

std::vector<Mask> affine_basis(const std::vector<Mask>& cell, int n) {
  QMat rows;
  for (Mask m : cell) rows.push_back(affine_row(m, n));
  Echelon e = row_echelon(rows, n + 1);
  std::vector<Mask> out;
  for (int r : e.pivot_rows) out.push_back(cell[r]);
  return out;
}

}  // namespace

std::vector<Positroid> Subdivision::positroids() const {
  std::vector<Positroid> out;
  for (const auto& f : maximal_faces) out.push_back(as_positroid(n, k, f));
  return out;
}

namespace {

void canonicalize_cells(Subdivision& s) {
  for (auto& c : s.maximal_faces) c = sorted_masks(std::move(c));
  std::sort(s.maximal_faces.begin(), s.maximal_faces.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
  });
  s.support = sorted_masks(std::move(s.support));
}

}  // namespace

Subdivision regular_subdivision(const TropVector& p) {
  const int n = p.n(), k = p.k();
  std::vector<Mask> masks = p.finite_support();
  if (masks.empty()) throw InputError("regular_subdivision: every entry is infinite");
  std::vector<Rational> h;
  for (Mask m : masks) h.push_back(p.at(m).v);
  Rational lo = *std::min_element(h.begin(), h.end());
  Integer L = lcm_of_denominators(h);
  std::vector<IntVec> G;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    Rational scaled = (h[i] - lo) * L;
    IntVec row{1};
    IntVec e = indicator(masks[i], n);
    row.insert(row.end(), e.begin(), e.end());
    row.push_back(to_ll_checked(scaled.get_num()));
    G.push_back(std::move(row));
  }
  IntVec up(n + 2, 0);
  up[n + 1] = 1;
  G.push_back(up);
  const int ray = static_cast<int>(masks.size());
  GeneratorFacets gf = generator_facets(G);
  Subdivision s;
  s.n = n;
  s.k = k;
  s.support = masks;
  s.weights = p;
  for (const auto& t : gf.tight) {
    if (t.test(ray)) continue;
    std::vector<Mask> cell;
    for (int i = 0; i < ray; ++i)
      if (t.test(i)) cell.push_back(masks[i]);
    s.maximal_faces.push_back(sorted_masks(std::move(cell)));
  }
  canonicalize_cells(s);
  return s;
}

Subdivision rotated(const Subdivision& s, int t) {
  const int n = s.n;
  t = ((t % n) + n) % n;
  auto shift = [&](Mask m) {
    Mask out = 0;
    for (int x : mask_elements(m)) out |= bit((x - 1 + t) % n + 1);
    return out;
  };
  Subdivision r;
  r.n = n;
  r.k = s.k;
  for (Mask m : s.support) r.support.push_back(shift(m));
  for (const auto& c : s.maximal_faces) {
    r.maximal_faces.emplace_back();
    for (Mask m : c) r.maximal_faces.back().push_back(shift(m));
  }
  canonicalize_cells(r);
  return r;
}

Subdivision subdivision_from_pieces(int n, int k,
                                    const std::vector<std::function<bool(const std::vector<int>&)>>& pieces) {
  Subdivision s;
  s.n = n;
  s.k = k;
  s.support = subset_index(n, k).masks();
  for (const auto& pred : pieces) {
    std::vector<Mask> cell;
    for (Mask m : s.support) {
      std::vector<int> x(n, 0);
      for (int e : mask_elements(m)) x[e - 1] = 1;
      if (pred(x)) cell.push_back(m);
    }
    if (!cell.empty()) s.maximal_faces.push_back(std::move(cell));
  }
  canonicalize_cells(s);
  return s;
}

std::vector<Cut> cuts(const Subdivision& s) {
  const int n = s.n;
  const int d1 = affine_rank(s.support, n);  // dim + 1
  std::set<Cut> out;
  for (std::size_t i = 0; i < s.maximal_faces.size(); ++i)
    for (std::size_t j = i + 1; j < s.maximal_faces.size(); ++j) {
      auto wall = intersect(s.maximal_faces[i], s.maximal_faces[j]);
      if (wall.empty() || affine_rank(wall, n) != d1 - 1) continue;
      // Hyperplanes c·x = r through the wall: nullspace of rows (e_I, -1).
      QMat rows;
      for (Mask m : wall) {
        QVec r(n + 1, Rational(0));
        for (int x : mask_elements(m)) r[x - 1] = 1;
        r[n] = -1;
        rows.push_back(std::move(r));
      }
      for (auto& v : nullspace(rows, n + 1)) {
        bool separates = false;
        for (Mask m : s.maximal_faces[i]) {
          Integer val = -v[n];
          for (int x : mask_elements(m)) val += v[x - 1];
          if (sgn(val) != 0) separates = true;
        }
        if (!separates) continue;
        // Normalize modulo sum(x) = k: shift to nonnegative coefficients with a zero.
        auto normalize = [&](std::vector<Integer> c, Integer r) {
          Integer mn = *std::min_element(c.begin(), c.begin() + n);
          for (int t = 0; t < n; ++t) c[t] -= mn;
          r -= mn * s.k;
          c[n] = r;
          make_primitive(c);
          return c;
        };
        std::vector<Integer> pos(v.begin(), v.end()), neg(v.begin(), v.end());
        for (auto& x : neg) x = -x;
        auto a = normalize(pos, v[n]);
        auto b = normalize(neg, -v[n]);
        auto support_size = [&](const std::vector<Integer>& c) {
          int z = 0;
          for (int t = 0; t < n; ++t) z += sgn(c[t]) != 0;
          return z;
        };
        const auto& best = (support_size(a) < support_size(b) ||
                            (support_size(a) == support_size(b) && std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())))
                               ? a
                               : b;
        Cut c;
        for (int t = 0; t < n; ++t) c.normal.push_back(to_ll_checked(best[t]));
        c.rhs = to_ll_checked(best[n]);
        out.insert(c);
        break;
      }
    }
  return {out.begin(), out.end()};
}

std::vector<std::vector<Mask>> all_faces(const Subdivision& s) {
  std::set<std::vector<Mask>> seen;
  for (const auto& cell : s.maximal_faces) {
    std::vector<IntVec> pts;
    std::map<IntVec, Mask> back;
    for (Mask m : cell) {
      pts.push_back(indicator(m, s.n));
      back[pts.back()] = m;
    }
    Polytope P = convex_hull(pts);
    for (const auto& level : face_lattice(P))
      for (const auto& face : level) {
        std::vector<Mask> f;
        for (int v : face) f.push_back(back.at(P.vertices[v]));
        seen.insert(sorted_masks(std::move(f)));
      }
  }
  return {seen.begin(), seen.end()};
}

bool is_positroid_subdivision(const Subdivision& s) {
  for (const auto& face : all_faces(s)) {
    std::vector<SubsetK> b;
    for (Mask m : face) b.emplace_back(s.n, m);
    if (!is_matroid(s.n, s.k, b)) return false;
    if (!is_positroid(Matroid::unchecked(s.n, s.k, face))) return false;
  }
  return true;
}

bool SecondaryCone::contains(const TropVector& p) const {
  if (p.n() != n || p.k() != k) return false;
  auto fin = p.finite_support();
  std::sort(fin.begin(), fin.end(), lex_less);
  if (fin != coords) return false;
  QVec x;
  for (Mask m : coords) x.push_back(p.at(m).v);
  auto dot = [&](const QVec& f) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (sgn(f[i]) != 0) s += f[i] * x[i];
    return s;
  };
  for (const auto& f : equalities)
    if (sgn(dot(f)) != 0) return false;
  for (const auto& f : inequalities)
    if (sgn(dot(f)) < 0) return false;
  return true;
}

SecondaryCone secondary_cone(const Subdivision& s) {
  const int n = s.n;
  SecondaryCone C;
  C.n = n;
  C.k = s.k;
  C.coords = s.support;
  std::map<Mask, int> pos;
  for (std::size_t i = 0; i < C.coords.size(); ++i) pos[C.coords[i]] = static_cast<int>(i);
  const int m = static_cast<int>(C.coords.size());
  const int d1 = affine_rank(s.support, n);
  std::vector<std::vector<Mask>> bases;
  for (const auto& cell : s.maximal_faces) {
    auto B = affine_basis(cell, n);
    if (static_cast<int>(B.size()) != d1) throw InputError("secondary_cone: a maximal cell is not full-dimensional");
    for (Mask I : cell) {
      if (std::find(B.begin(), B.end(), I) != B.end()) continue;
      QVec mu = affine_coefficients(B, I, n);
      QVec f(m, Rational(0));
      f[pos.at(I)] += 1;
      for (std::size_t b = 0; b < B.size(); ++b) f[pos.at(B[b])] -= mu[b];
      C.equalities.push_back(std::move(f));
    }
    bases.push_back(std::move(B));
  }
  for (std::size_t i = 0; i < s.maximal_faces.size(); ++i)
    for (std::size_t j = 0; j < s.maximal_faces.size(); ++j) {
      if (i == j) continue;
      const auto& F = s.maximal_faces[i];
      const auto& G = s.maximal_faces[j];
      auto wall = intersect(F, G);
      if (wall.empty() || affine_rank(wall, n) != d1 - 1) continue;
      if (j < i) continue;  // one inequality per wall suffices modulo the equalities
      Mask J = 0;
      for (Mask x : G)
        if (!std::binary_search(F.begin(), F.end(), x, lex_less)) {
          J = x;
          break;
        }
      QVec mu = affine_coefficients(bases[i], J, n);
      QVec f(m, Rational(0));
      f[pos.at(J)] += 1;
      for (std::size_t b = 0; b < bases[i].size(); ++b) f[pos.at(bases[i][b])] -= mu[b];
      C.inequalities.push_back(std::move(f));
    }
  QVec zeros(C.equalities.size(), Rational(0)), ones(C.inequalities.size(), Rational(1));
  C.interior_point = lp_feasible(C.equalities, zeros, C.inequalities, ones, m);
  C.feasible = C.interior_point.has_value();
  if (C.feasible) C.dimension = m - (C.equalities.empty() ? 0 : rank(C.equalities, m));
  return C;
}

int dim_subdivision(const Subdivision& s) {
  Positroid M = as_positroid(s.n, s.k, s.support);
  SecondaryCone C = secondary_cone(s);
  if (!C.feasible) throw PreconditionError("dim_subdivision: subdivision is not regular");
  return dim_positroid(M) + 1 - C.dimension;
}

int ndim(const Subdivision& s) {
  int total = 0;
  for (const auto& f : s.maximal_faces) total += dim_positroid(as_positroid(s.n, s.k, f)) - (s.n - 1);
  return total;
}

namespace {

Integer simplex_volume(const std::vector<IntVec>& verts) {
  const int d = static_cast<int>(verts.size()) - 1;
  if (d == 0) return 1;
  const int n = static_cast<int>(verts[0].size());
  std::vector<std::vector<Integer>> D(d, std::vector<Integer>(n));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) D[i][j] = static_cast<long>(verts[i + 1][j] - verts[0][j]);
  Integer g = 0;
  std::vector<int> cols(d);
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    ZMat sq(d, std::vector<Integer>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) sq[i][j] = D[i][cols[j]];
    Integer det = abs(determinant(sq));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    int t = d - 1;
    while (t >= 0 && cols[t] == n - d + t) --t;
    if (t < 0) break;
    ++cols[t];
    for (int u = t + 1; u < d; ++u) cols[u] = cols[u - 1] + 1;
  }
  return g;
}

}  // namespace

Integer normalized_volume(const Matroid& m) {
  std::vector<IntVec> pts;
  for (Mask b : m.masks()) pts.push_back(indicator(b, m.n()));
  Polytope P = convex_hull(pts);
  // Facets of a face G are the maximal proper intersections of G with facets of P.
  auto facets_of = [&](const std::vector<int>& G) {
    std::vector<std::vector<int>> cand;
    for (const auto& fv : P.facet_vertices) {
      std::vector<int> c;
      std::set_intersection(G.begin(), G.end(), fv.begin(), fv.end(), std::back_inserter(c));
      if (!c.empty() && c.size() < G.size()) cand.push_back(std::move(c));
    }
    std::sort(cand.begin(), cand.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<std::vector<int>> out;
    for (auto& c : cand) {
      bool dominated = false;
      for (const auto& f : out)
        if (std::includes(f.begin(), f.end(), c.begin(), c.end())) {
          dominated = true;
          break;
        }
      if (!dominated) out.push_back(std::move(c));
    }
    return out;
  };
  // Pulling triangulation: cone from the first vertex over the facets avoiding it.
  Integer total = 0;
  std::vector<int> apexes;
  std::function<void(const std::vector<int>&, int)> tri = [&](const std::vector<int>& G, int dim) {
    if (static_cast<int>(G.size()) == dim + 1) {
      std::vector<IntVec> vs;
      for (int v : apexes) vs.push_back(P.vertices[v]);
      for (int v : G) vs.push_back(P.vertices[v]);
      total += simplex_volume(vs);
      return;
    }
    const int apex = G.front();
    apexes.push_back(apex);
    for (const auto& f : facets_of(G))
      if (!std::binary_search(f.begin(), f.end(), apex)) tri(f, dim - 1);
    apexes.pop_back();
  };
  std::vector<int> all(P.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  tri(all, P.dim);
  return total;
}

Integer normalized_volume(const Positroid& p) { return normalized_volume(p.matroid()); }

std::optional<ActVector> face_gauge(const TropVector& p, const std::vector<Mask>& face) {
  const int n = p.n();
  QMat rows;
  QVec rhs;
  for (Mask m : face) {
    const auto& v = p.at(m);
    if (v.inf) return std::nullopt;
    QVec r(n, Rational(0));
    for (int x : mask_elements(m)) r[x - 1] = 1;
    rows.push_back(std::move(r));
    rhs.push_back(-v.v);
  }
  if (rows.empty() || rank(rows, n) != n) return std::nullopt;
  QVec a;
  if (!solve(rows, rhs, n, a)) return std::nullopt;
  return a;
}

}  // namespace postrop
