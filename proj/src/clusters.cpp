#include "postrop/clusters.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "postrop/errors.hpp"
#include "postrop/linalg.hpp"
#include "postrop/reduction.hpp"

namespace postrop {

bool weakly_separated_masks(Mask I, Mask J) {
  Mask A = I & ~J, B = J & ~I;
  // Count maximal blocks of the cyclic A/B word; separated iff at most two.
  Mask all = A | B;
  if (!all) return true;
  int changes = 0, first = -1, prev = -1;
  for (Mask t = all; t; t &= t - 1) {
    int x = std::countr_zero(t);
    int side = (A >> x) & 1;
    if (first < 0) first = side;
    else if (side != prev) ++changes;
    prev = side;
  }
  if (prev != first) ++changes;
  return changes <= 2;
}

bool weakly_separated(const SubsetK& I, const SubsetK& J) {
  if (I.n() != J.n() || I.size() != J.size())
    throw InputError("weakly_separated: subsets must have the same n and k");
  return weakly_separated_masks(I.mask(), J.mask());
}

int dim_positroid(const Positroid& p) { return canonical_reduction(p.perm()).bridges(); }

bool is_cluster(const Positroid& p, const std::vector<SubsetK>& C) {
  std::set<Mask> s;
  for (const auto& J : C) {
    if (J.n() != p.n() || J.size() != p.k() || !p.contains(J.mask())) return false;
    s.insert(J.mask());
  }
  if (static_cast<int>(s.size()) != dim_positroid(p) + 1) return false;
  for (Mask I : p.necklace())
    if (!s.count(I)) return false;
  for (Mask I : s)
    for (Mask J : s)
      if (!weakly_separated_masks(I, J)) return false;
  return true;
}

std::vector<SubsetK> Cluster::subsets() const {
  std::vector<SubsetK> out;
  for (Mask m : members) out.emplace_back(positroid.n(), m);
  return out;
}

bool Cluster::contains(Mask m) const {
  return std::binary_search(members.begin(), members.end(), m, lex_less);
}

std::optional<ExchangeFrame> exchange_frame(const Positroid& p, const std::vector<Mask>& members, Mask J) {
  const int n = p.n();
  auto member = [&](Mask m) { return std::binary_search(members.begin(), members.end(), m, lex_less); };
  if (!member(J)) return std::nullopt;
  // Necklace members are frozen.
  for (Mask I : p.necklace())
    if (I == J) return std::nullopt;
  // A neighbor that is not a basis has Plücker coordinate zero and drops out
  // of the exchange relation, so it does not need to be present.
  auto in = [&](Mask m) { return member(m) || !p.contains(m); };
  auto compatible = [&](Mask partner) {
    for (Mask I : members)
      if (I != J && !weakly_separated_masks(I, partner)) return false;
    return true;
  };
  std::vector<int> el = mask_elements(J);
  for (std::size_t ix = 0; ix < el.size(); ++ix)
    for (std::size_t iy = ix + 1; iy < el.size(); ++iy) {
      int x = el[ix], y = el[iy];
      Mask S = J & ~bit(x) & ~bit(y);
      // J = Sac with (a, c) = (x, y)
      for (int b = x + 1; b < y; ++b) {
        if (J & bit(b)) continue;
        for (int d = y + 1; d <= n; ++d) {
          if (J & bit(d)) continue;
          ExchangeFrame f{S, x, b, y, d, J, S | bit(b) | bit(d)};
          if (in(f.Sab()) && in(f.Scd()) && in(f.Sad()) && in(f.Sbc()) && p.contains(f.partner) &&
              compatible(f.partner))
            return f;
        }
      }
      // J = Sbd with (b, d) = (x, y)
      for (int a = 1; a < x; ++a) {
        if (J & bit(a)) continue;
        for (int c = x + 1; c < y; ++c) {
          if (J & bit(c)) continue;
          ExchangeFrame f{S, a, x, c, y, J, S | bit(a) | bit(c)};
          if (in(f.Sab()) && in(f.Scd()) && in(f.Sad()) && in(f.Sbc()) && p.contains(f.partner) &&
              compatible(f.partner))
            return f;
        }
      }
    }
  return std::nullopt;
}

Cluster mutate(const Cluster& C, const SubsetK& J) {
  auto f = exchange_frame(C.positroid, C.members, J.mask());
  if (!f) throw PreconditionError("mutate: " + J.str() + " is not mutable in this cluster");
  Cluster out = C;
  out.members.erase(std::find(out.members.begin(), out.members.end(), J.mask()));
  out.members.insert(std::lower_bound(out.members.begin(), out.members.end(), f->partner, lex_less), f->partner);
  return out;
}

Cluster extend_to_cluster(const Positroid& p, const std::vector<SubsetK>& W) {
  std::vector<Mask> cur;
  for (const auto& J : W) {
    if (J.n() != p.n() || J.size() != p.k()) throw InputError("extend_to_cluster: subset of wrong size");
    if (!p.contains(J.mask())) throw InputError("extend_to_cluster: " + J.str() + " is not a basis");
    cur.push_back(J.mask());
  }
  for (Mask I : p.necklace()) cur.push_back(I);
  std::sort(cur.begin(), cur.end(), lex_less);
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (Mask I : cur)
    for (Mask J : cur)
      if (!weakly_separated_masks(I, J))
        throw InputError("extend_to_cluster: input collection is not weakly separated");
  for (Mask J : p.matroid().masks()) {
    if (std::find(cur.begin(), cur.end(), J) != cur.end()) continue;
    bool ok = true;
    for (Mask I : cur)
      if (!weakly_separated_masks(I, J)) {
        ok = false;
        break;
      }
    if (ok) cur.push_back(J);
  }
  std::sort(cur.begin(), cur.end(), lex_less);
  if (static_cast<int>(cur.size()) != dim_positroid(p) + 1)
    throw InternalError("extend_to_cluster: maximal collection has unexpected size");
  return Cluster{p, cur};
}

bool lattice_span_ok_masks(int n, int k, const std::vector<Mask>& G) {
  if (static_cast<int>(G.size()) != n) throw InputError("lattice_span_ok: need exactly n subsets");
  if (k <= 0) return false;
  ZMat m(n, std::vector<Integer>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = (G[r] >> c) & 1;
  Integer det = abs(determinant(std::move(m)));
  return det == k;
}

bool lattice_span_ok(int n, int k, const std::vector<SubsetK>& G) {
  std::vector<Mask> masks;
  for (const auto& s : G) {
    if (s.n() != n || s.size() != k) throw InputError("lattice_span_ok: subset of wrong size");
    masks.push_back(s.mask());
  }
  return lattice_span_ok_masks(n, k, masks);
}

namespace {

// Lexicographically first n-element sub-collection passing the lattice test.
std::optional<std::vector<Mask>> first_gauge(const std::vector<Mask>& members, int n, int k) {
  const int m = static_cast<int>(members.size());
  if (m < n) return std::nullopt;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (;;) {
    std::vector<Mask> G;
    for (int i : idx) G.push_back(members[i]);
    if (lattice_span_ok_masks(n, k, G)) return G;
    int t = n - 1;
    while (t >= 0 && idx[t] == m - n + t) --t;
    if (t < 0) return std::nullopt;
    ++idx[t];
    for (int s = t + 1; s < n; ++s) idx[s] = idx[s - 1] + 1;
  }
}

}  // namespace

GaugeFix find_gauge_fix(const Positroid& p) {
  if (matroid_components(p.matroid()).blocks.size() != 1)
    throw PreconditionError("find_gauge_fix: positroid is not connected");
  Cluster start = extend_to_cluster(p, {});
  // Breadth-first over mutations from the greedy cluster; the first cluster
  // (in BFS order) admitting a gauge-fix is used.
  std::deque<std::vector<Mask>> queue{start.members};
  std::set<std::vector<Mask>> seen{start.members};
  while (!queue.empty()) {
    auto members = std::move(queue.front());
    queue.pop_front();
    if (auto G = first_gauge(members, p.n(), p.k())) return GaugeFix{Cluster{p, members}, *G};
    for (Mask J : members) {
      auto f = exchange_frame(p, members, J);
      if (!f) continue;
      auto next = members;
      next.erase(std::find(next.begin(), next.end(), J));
      next.insert(std::lower_bound(next.begin(), next.end(), f->partner, lex_less), f->partner);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  throw InternalError("find_gauge_fix: no cluster admits a gauge-fix");
}

}  // namespace postrop
