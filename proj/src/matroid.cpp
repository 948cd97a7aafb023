#include "postrop/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "postrop/errors.hpp"
#include "postrop/linalg.hpp"

namespace postrop {

namespace {

constexpr int kBitsetMaxN = 20;

void validate_subsets(int n, int k, const std::vector<Mask>& bases) {
  if (n < 0 || n > kMaxN) throw InputError("ground set size out of range");
  if (k < 0 || k > n) throw InputError("rank out of range");
  for (Mask m : bases) {
    if (m & ~full_mask(n)) throw InputError("basis element outside [1,n]");
    if (popcount(m) != k) throw InputError("basis of wrong size");
  }
}

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool exchange_holds(int n, const std::vector<Mask>& bases) {
  auto in = [&](Mask m) {
    return std::binary_search(bases.begin(), bases.end(), m, lex_less);
  };
  std::vector<bool> member;
  bool use_bitset = n <= kBitsetMaxN;
  if (use_bitset) {
    member.assign(std::size_t{1} << n, false);
    for (Mask m : bases) member[m] = true;
  }
  for (Mask I : bases)
    for (Mask J : bases) {
      Mask onlyI = I & ~J, onlyJ = J & ~I;
      for (Mask a = onlyI; a; a &= a - 1) {
        Mask i = a & (~a + 1);
        bool ok = false;
        for (Mask b = onlyJ; b && !ok; b &= b - 1) {
          Mask j = b & (~b + 1);
          Mask X = (I & ~i) | j;
          ok = use_bitset ? member[X] : in(X);
        }
        if (!ok) return false;
      }
    }
  return true;
}

}  // namespace

bool is_matroid(int n, int k, const std::vector<SubsetK>& bases) {
  if (bases.empty()) throw InputError("basis collection is empty");
  std::vector<Mask> masks;
  for (const auto& b : bases) {
    if (b.n() != n) throw InputError("subset ground set mismatch");
    masks.push_back(b.mask());
  }
  validate_subsets(n, k, masks);
  return exchange_holds(n, sorted_unique(std::move(masks)));
}

Matroid::Matroid(int n, int k, std::vector<Mask> bases) : n_(n), k_(k), bases_(std::move(bases)) {
  if (n_ <= kBitsetMaxN) {
    auto v = std::make_shared<std::vector<bool>>(std::size_t{1} << n_, false);
    for (Mask m : bases_) (*v)[m] = true;
    member_ = std::move(v);
  } else {
    auto v = std::make_shared<std::vector<Mask>>(bases_);
    std::sort(v->begin(), v->end());
    sorted_ = std::move(v);
  }
}

bool Matroid::contains(Mask m) const {
  if (m & ~full_mask(n_)) return false;
  if (member_) return (*member_)[m];
  return std::binary_search(sorted_->begin(), sorted_->end(), m);
}

Matroid Matroid::from_bases(int n, int k, std::vector<SubsetK> bases) {
  std::vector<Mask> masks;
  for (const auto& b : bases) {
    if (b.n() != n) throw InputError("subset ground set mismatch");
    masks.push_back(b.mask());
  }
  return from_masks(n, k, std::move(masks));
}

Matroid Matroid::from_masks(int n, int k, std::vector<Mask> bases) {
  if (bases.empty()) throw InputError("basis collection is empty");
  validate_subsets(n, k, bases);
  bases = sorted_unique(std::move(bases));
  if (!exchange_holds(n, bases)) throw InputError("basis collection violates the exchange axiom");
  return Matroid(n, k, std::move(bases));
}

Matroid Matroid::unchecked(int n, int k, std::vector<Mask> bases) {
  return Matroid(n, k, sorted_unique(std::move(bases)));
}

Matroid Matroid::uniform(int n, int k) { return Matroid(n, k, subset_index(n, k).masks()); }

std::vector<SubsetK> Matroid::bases() const {
  std::vector<SubsetK> out;
  out.reserve(bases_.size());
  for (Mask m : bases_) out.emplace_back(n_, m);
  return out;
}

BoundedAffinePermutation::BoundedAffinePermutation(int n, std::vector<int> window)
    : n_(n), window_(std::move(window)) {
  if (n < 1 || n > kMaxN) throw InputError("affine permutation: n out of range");
  if (static_cast<int>(window_.size()) != n) throw InputError("affine permutation: window length != n");
  std::vector<bool> seen(n, false);
  long total = 0;
  for (int i = 1; i <= n; ++i) {
    int f = window_[i - 1];
    if (f < i || f > i + n)
      throw InputError("affine permutation: f(" + std::to_string(i) + ")=" + std::to_string(f) +
                       " violates i <= f(i) <= i+n");
    int r = ((f - 1) % n + n) % n;
    if (seen[r]) throw InputError("affine permutation: window is not a permutation mod n");
    seen[r] = true;
    total += f - i;
  }
  if (total % n != 0) throw InputError("affine permutation: total shift not divisible by n");
  k_ = static_cast<int>(total / n);
}

int BoundedAffinePermutation::operator()(int i) const {
  int r = ((i - 1) % n_ + n_) % n_;  // 0-based residue
  int q = (i - 1 - r) / n_;
  return window_[r] + q * n_;
}

namespace {
inline int next_label(int a, int n) { return a % n + 1; }
}  // namespace

bool is_grassmann_necklace(int n, int k, const Necklace& I) {
  if (static_cast<int>(I.size()) != n) return false;
  for (Mask m : I)
    if ((m & ~full_mask(n)) || popcount(m) != k) return false;
  for (int a = 1; a <= n; ++a) {
    Mask cur = I[a - 1], nxt = I[next_label(a, n) - 1];
    if (cur & bit(a)) {
      if ((nxt & (cur & ~bit(a))) != (cur & ~bit(a))) return false;
    } else if (nxt != cur) {
      return false;
    }
  }
  return true;
}

Necklace grassmann_necklace(const Matroid& m) {
  const int n = m.n();
  Necklace out(n);
  for (int a = 1; a <= n; ++a) {
    Mask best = 0;
    bool any = false;
    for (Mask b : m.masks()) {
      Mask r = rotate_to(b, n, a);
      if (!any || lex_less(r, best)) {
        best = r;
        any = true;
      }
    }
    out[a - 1] = rotate_from(best, n, a);
  }
  return out;
}

Matroid matroid_from_necklace(int n, int k, const Necklace& I) {
  if (!is_grassmann_necklace(n, k, I)) throw InputError("not a Grassmann necklace");
  std::vector<Mask> rot(n);
  for (int a = 1; a <= n; ++a) rot[a - 1] = rotate_to(I[a - 1], n, a);
  std::vector<Mask> bases;
  for (Mask J : subset_index(n, k).masks()) {
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a) ok = gale_leq(rot[a - 1], rotate_to(J, n, a), n);
    if (ok) bases.push_back(J);
  }
  if (bases.empty()) throw InternalError("necklace produced an empty matroid");
  return Matroid::unchecked(n, k, std::move(bases));
}

BoundedAffinePermutation necklace_to_affine_perm(int n, int k, const Necklace& I) {
  if (!is_grassmann_necklace(n, k, I)) throw InputError("not a Grassmann necklace");
  std::vector<int> w(n);
  for (int a = 1; a <= n; ++a) {
    Mask cur = I[a - 1], nxt = I[next_label(a, n) - 1];
    if (!(cur & bit(a))) {
      w[a - 1] = a;
      continue;
    }
    Mask diff = nxt & ~(cur & ~bit(a));
    int ap = std::countr_zero(diff) + 1;
    if (ap == a)
      w[a - 1] = a + n;
    else if (ap > a)
      w[a - 1] = ap;
    else
      w[a - 1] = ap + n;
  }
  return BoundedAffinePermutation(n, std::move(w));
}

Necklace affine_perm_to_necklace(const BoundedAffinePermutation& f) {
  const int n = f.n();
  Necklace out(n, 0);
  for (int a = 1; a <= n; ++a) {
    Mask m = 0;
    for (int b = a - n; b < a; ++b) {
      int fb = f(b);
      if (fb >= a) m |= bit(((fb - 1) % n + n) % n + 1);
    }
    out[a - 1] = m;
  }
  return out;
}

Positroid Positroid::unchecked(Matroid m, Necklace I, BoundedAffinePermutation f) {
#ifndef NDEBUG
  if (grassmann_necklace(m) != I || !(necklace_to_affine_perm(m.n(), m.k(), I) == f))
    throw InternalError("inconsistent unchecked positroid");
#endif
  return Positroid(std::move(m), std::move(I), std::move(f));
}

Positroid Positroid::from_necklace(int n, int k, const Necklace& I) {
  Matroid m = matroid_from_necklace(n, k, I);
  auto f = necklace_to_affine_perm(n, k, I);
  return Positroid(std::move(m), I, std::move(f));
}

Positroid Positroid::from_perm(const BoundedAffinePermutation& f) {
  Necklace I = affine_perm_to_necklace(f);
  return from_necklace(f.n(), f.k(), I);
}

Positroid Positroid::from_matroid(const Matroid& m) {
  Positroid env = positroid_envelope(m);
  if (!(env.matroid() == m)) throw InputError("matroid is not a positroid");
  return env;
}

Positroid Positroid::uniform(int n, int k) {
  Necklace I(n);
  for (int a = 1; a <= n; ++a) {
    Mask s = 0;
    for (int t = 0; t < k; ++t) s |= bit((a - 1 + t) % n + 1);
    I[a - 1] = s;
  }
  return Positroid(Matroid::uniform(n, k), I, necklace_to_affine_perm(n, k, I));
}

Positroid positroid_envelope(const Matroid& m) {
  return Positroid::from_necklace(m.n(), m.k(), grassmann_necklace(m));
}

bool is_positroid(const Matroid& m) { return positroid_envelope(m).matroid() == m; }

bool alcoved_criterion(const Matroid& m) {
  const int n = m.n();
  std::vector<Mask> intervals;
  for (int a = 1; a <= n; ++a)
    for (int len = 1; len < n; ++len) {
      Mask s = 0;
      for (int t = 0; t < len; ++t) s |= bit((a - 1 + t) % n + 1);
      intervals.push_back(s);
    }
  std::vector<int> lower(intervals.size(), n + 1);
  for (Mask b : m.masks())
    for (std::size_t t = 0; t < intervals.size(); ++t)
      lower[t] = std::min(lower[t], popcount(b & intervals[t]));
  std::size_t count = 0;
  for (Mask J : subset_index(n, m.k()).masks()) {
    bool inside = true;
    for (std::size_t t = 0; t < intervals.size() && inside; ++t)
      inside = popcount(J & intervals[t]) >= lower[t];
    if (inside) {
      if (!m.contains(J)) return false;
      ++count;
    }
  }
  return count == m.size();
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

Matroid restrict_to_block(const Matroid& m, const std::vector<int>& block) {
  std::vector<Mask> bases;
  for (Mask B : m.masks()) {
    Mask r = 0;
    for (std::size_t t = 0; t < block.size(); ++t)
      if (B & bit(block[t])) r |= bit(static_cast<int>(t) + 1);
    bases.push_back(r);
  }
  int rk = popcount(bases.front());
  return Matroid::unchecked(static_cast<int>(block.size()), rk, std::move(bases));
}

}  // namespace

ComponentDecomposition matroid_components(const Matroid& m) {
  const int n = m.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (Mask B : m.masks())
    for (Mask a = B; a; a &= a - 1) {
      int i = std::countr_zero(a) + 1;
      for (int j = 1; j <= n; ++j) {
        if (B & bit(j)) continue;
        if (find_root(parent, i) == find_root(parent, j)) continue;
        if (m.contains((B & ~bit(i)) | bit(j))) parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n + 1, -1);
  for (int x = 1; x <= n; ++x) {
    int r = find_root(parent, x);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(x);
  }
  ComponentDecomposition out;
  out.blocks = blocks;
  return out;
}

ComponentDecomposition connected_components(const Positroid& p) {
  ComponentDecomposition d = matroid_components(p.matroid());
  for (const auto& block : d.blocks)
    d.components.push_back(Positroid::from_matroid(restrict_to_block(p.matroid(), block)));
  return d;
}

bool is_noncrossing_partition(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> id(n + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) id[x] = static_cast<int>(b);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (id[a] == id[c] && id[b] == id[d] && id[a] != id[b]) return false;
  return true;
}

Matroid direct_sum(int n, const std::vector<std::vector<int>>& blocks, const std::vector<Matroid>& parts) {
  std::vector<Mask> acc{0};
  int k = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Mask> next;
    for (Mask base : acc)
      for (Mask pm : parts[b].masks()) {
        Mask lifted = 0;
        for (Mask t = pm; t; t &= t - 1) lifted |= bit(blocks[b][std::countr_zero(t)]);
        next.push_back(base | lifted);
      }
    acc = std::move(next);
    k += parts[b].k();
  }
  return Matroid::from_masks(n, k, std::move(acc));
}

int polytope_dimension(const Matroid& m) {
  const int n = m.n();
  const Mask b0 = m.masks().front();
  std::vector<IntVec> rows;
  for (Mask b : m.masks()) {
    IntVec r(n, 0);
    for (int i = 1; i <= n; ++i) r[i - 1] = ((b >> (i - 1)) & 1) - ((b0 >> (i - 1)) & 1);
    rows.push_back(std::move(r));
  }
  return rank(rows, n);
}

}  // namespace postrop
