#include "postrop/tropical.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "postrop/errors.hpp"
#include "postrop/reduction.hpp"

namespace postrop {

// ---------------------------------------------------------------- TropVector

TropVector::TropVector(int n, int k) : n_(n), k_(k), idx_(&subset_index(n, k)) {
  vals_.assign(idx_->size(), TropValue::infinity());
}

TropVector TropVector::zeros(int n, int k) {
  TropVector v(n, k);
  for (auto& x : v.vals_) x = TropValue::of(0);
  return v;
}

const TropValue& TropVector::at(Mask m) const {
  int i = idx_->index(m);
  if (i < 0) throw InputError("TropVector: subset is not a " + std::to_string(k_) + "-subset of [" +
                              std::to_string(n_) + "]");
  return vals_[i];
}

void TropVector::set(Mask m, TropValue v) {
  int i = idx_->index(m);
  if (i < 0) throw InputError("TropVector: subset is not a " + std::to_string(k_) + "-subset of [" +
                              std::to_string(n_) + "]");
  vals_[i] = std::move(v);
}

std::vector<Mask> TropVector::finite_support() const {
  std::vector<Mask> out;
  for (int i = 0; i < idx_->size(); ++i)
    if (vals_[i].finite()) out.push_back(idx_->mask(i));
  return out;
}

bool TropVector::all_infinite() const {
  return std::none_of(vals_.begin(), vals_.end(), [](const TropValue& v) { return v.finite(); });
}

bool TropVector::all_integral() const {
  return std::all_of(vals_.begin(), vals_.end(),
                     [](const TropValue& v) { return v.inf || v.v.get_den() == 1; });
}

// -------------------------------------------------------------------- frames

std::string PluckerFrame::str(int n) const {
  std::string s = "S=" + SubsetK(n, S).str();
  if (S == 0) s = "S={}";
  return s + " a,b,c,d=" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d);
}

const std::vector<PluckerFrame>& all_frames(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<PluckerFrame>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) {
    slot = std::make_unique<std::vector<PluckerFrame>>();
    if (k >= 2 && n - k >= 2) {
      for (Mask S : subset_index(n, k - 2).masks()) {
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
          if (!(S & bit(x))) rest.push_back(x);
        const int r = static_cast<int>(rest.size());
        for (int i1 = 0; i1 < r; ++i1)
          for (int i2 = i1 + 1; i2 < r; ++i2)
            for (int i3 = i2 + 1; i3 < r; ++i3)
              for (int i4 = i3 + 1; i4 < r; ++i4)
                slot->push_back(PluckerFrame{S, rest[i1], rest[i2], rest[i3], rest[i4]});
      }
    }
  }
  return *slot;
}

namespace {

bool frame_holds_positive(const TropVector& p, const PluckerFrame& f) {
  TropValue lhs = p.at(f.with(f.a, f.c)) + p.at(f.with(f.b, f.d));
  TropValue rhs = tmin(p.at(f.with(f.a, f.b)) + p.at(f.with(f.c, f.d)), p.at(f.with(f.a, f.d)) + p.at(f.with(f.b, f.c)));
  return lhs == rhs;
}

}  // namespace

std::optional<PluckerFrame> first_violation(const TropVector& p) {
  for (const auto& f : all_frames(p.n(), p.k()))
    if (!frame_holds_positive(p, f)) return f;
  return std::nullopt;
}

bool check_positive_tropical(const TropVector& p) { return !first_violation(p).has_value(); }

bool check_tropical_three_term(const TropVector& p) {
  for (const auto& f : all_frames(p.n(), p.k())) {
    TropValue t[3] = {p.at(f.with(f.a, f.c)) + p.at(f.with(f.b, f.d)),
                      p.at(f.with(f.a, f.b)) + p.at(f.with(f.c, f.d)),
                      p.at(f.with(f.a, f.d)) + p.at(f.with(f.b, f.c))};
    TropValue m = tmin(t[0], tmin(t[1], t[2]));
    if (m.inf) continue;
    int hits = (t[0] == m) + (t[1] == m) + (t[2] == m);
    if (hits < 2) return false;
  }
  return true;
}

Positroid support(const TropVector& p) {
  auto masks = p.finite_support();
  if (masks.empty()) throw PreconditionError("support: all entries are infinite");
  try {
    return Positroid::from_matroid(Matroid::from_masks(p.n(), p.k(), std::move(masks)));
  } catch (const InputError& e) {
    throw PreconditionError(std::string("support: finite entries do not form a positroid (") + e.what() + ")");
  }
}

TropVector act(const ActVector& a, const TropVector& p) {
  if (static_cast<int>(a.size()) != p.n())
    throw InputError("act: vector has " + std::to_string(a.size()) + " entries, expected " + std::to_string(p.n()));
  TropVector out = p;
  const auto& idx = p.index();
  for (int i = 0; i < idx.size(); ++i) {
    auto& v = out.values()[i];
    if (v.inf) continue;
    for (int x : mask_elements(idx.mask(i))) v.v += a[x - 1];
  }
  return out;
}

std::vector<Rational> restrict_to(const TropVector& p, const std::vector<Mask>& members) {
  std::vector<Rational> out;
  out.reserve(members.size());
  for (Mask m : members) {
    const auto& v = p.at(m);
    if (v.inf) throw InputError("restrict: entry " + SubsetK(p.n(), m).str() + " is infinite");
    out.push_back(v.v);
  }
  return out;
}

// --------------------------------------------------------------- propagation

TropValue TropSemifield::div(const TropValue& a, const TropValue& b) const {
  if (b.inf) throw InternalError("propagation: division by the zero element");
  if (a.inf) return a;
  return TropValue::of(a.v - b.v);
}

namespace {

// Position of x in the order <_a (a is first).
inline int cyc_pos(int x, int a, int n) { return ((x - a) % n + n) % n; }

struct WD {
  int w = 0, d = 0, a = 0;  // a: the necklace index achieving d (1-based)
};

WD weights(const Necklace& I, Mask J) {
  WD r;
  r.d = 1 << 30;
  for (std::size_t a = 0; a < I.size(); ++a) {
    if (weakly_separated_masks(I[a], J)) continue;
    ++r.w;
    int d = popcount(I[a] & ~J);
    if (d < r.d) {
      r.d = d;
      r.a = static_cast<int>(a) + 1;
    }
  }
  if (r.w == 0) r.d = 0;
  return r;
}

// The K-frame for J relative to I_a: returns (i, j, i', j').
std::array<int, 4> k_frame(Mask Ia, Mask J, int a, int n) {
  std::vector<std::pair<int, int>> pts;  // (position, +1 for I_a\J, -1 for J\I_a)
  for (int x : mask_elements(Ia & ~J)) pts.push_back({cyc_pos(x, a, n), x});
  for (int x : mask_elements(J & ~Ia)) pts.push_back({cyc_pos(x, a, n), -x});
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t t = 0; t + 1 < pts.size() && arcs.size() < 2; ++t)
    if (pts[t].second > 0 && pts[t + 1].second < 0) {
      arcs.push_back({pts[t].second, -pts[t + 1].second});
      ++t;
    }
  if (arcs.size() < 2) throw InternalError("propagation: no pair of innermost arcs found");
  return {arcs[0].first, arcs[0].second, arcs[1].first, arcs[1].second};
}

}  // namespace

PropagationPlan make_plan(const Positroid& p, const std::vector<Mask>& cluster) {
  const int n = p.n(), k = p.k();
  const auto& idx = subset_index(n, k);
  PropagationPlan plan;
  plan.n = n;
  plan.k = k;
  plan.inputs = cluster;
  std::sort(plan.inputs.begin(), plan.inputs.end(), lex_less);
  std::vector<char> known(idx.size(), 0);
  for (Mask m : plan.inputs) {
    if (!p.contains(m)) throw InputError("propagate: cluster member " + SubsetK(n, m).str() + " is not a basis");
    int i = idx.index(m);
    plan.input_index.push_back(i);
    known[i] = 1;
  }
  auto ix = [&](Mask m) { return p.contains(m) ? idx.index(m) : -1; };

  const auto& I = p.necklace();
  std::size_t remaining_ws = 0;
  std::vector<std::tuple<int, int, Mask, int>> later;  // (w, d, J, a)
  for (Mask J : p.matroid().masks()) {
    plan.basis_index.push_back(idx.index(J));
    WD r = weights(I, J);
    if (r.w == 0) {
      if (!known[idx.index(J)]) ++remaining_ws;
    } else {
      later.emplace_back(r.w, r.d, J, r.a);
    }
  }

  // Phase 1: weakly separated sets via mutation. Search outward from the most
  // recent cluster that produced a new set, so exploration stays local.
  std::vector<Mask> start = plan.inputs;
  while (remaining_ws > 0) {
    std::set<std::vector<Mask>> seen{start};
    std::deque<std::vector<Mask>> queue{start};
    bool found = false;
    while (!queue.empty() && !found) {
      auto cur = std::move(queue.front());
      queue.pop_front();
      for (Mask J : cur) {
        auto f = exchange_frame(p, cur, J);
        if (!f) continue;
        auto next = cur;
        next.erase(std::find(next.begin(), next.end(), J));
        next.insert(std::lower_bound(next.begin(), next.end(), f->partner, lex_less), f->partner);
        int t = idx.index(f->partner);
        if (!known[t]) {
          plan.steps.push_back(PlanStep{t, ix(f->Sab()), ix(f->Scd()), ix(f->Sad()), ix(f->Sbc()), idx.index(J)});
          known[t] = 1;
          --remaining_ws;
          start = next;
          found = true;
          break;
        }
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    if (!found) throw InternalError("propagate: mutation search did not reach every weakly separated basis");
  }

  // Phase 2: induction on (w, d).
  std::sort(later.begin(), later.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
    return lex_less(std::get<2>(x), std::get<2>(y));
  });
  for (const auto& [w, d, J, a] : later) {
    auto [i, j, i2, j2] = k_frame(I[a - 1], J, a, n);
    Mask S = J & ~bit(j) & ~bit(j2);
    int k0 = ix(S | bit(i) | bit(i2));
    int ks[4] = {ix(S | bit(i) | bit(j)), ix(S | bit(i2) | bit(j2)), ix(S | bit(i) | bit(j2)),
                 ix(S | bit(j) | bit(i2))};
    if (k0 < 0 || !known[k0]) throw InternalError("propagate: K0 of the frame is not available");
    for (int t : ks)
      if (t >= 0 && !known[t])
        throw InternalError("propagate: frame entry " + SubsetK(n, idx.mask(t)).str() + " for " + SubsetK(n, J).str() + " not yet determined");
    int tgt = idx.index(J);
    plan.steps.push_back(PlanStep{tgt, ks[0], ks[1], ks[2], ks[3], k0});
    known[tgt] = 1;
  }
  return plan;
}

const PropagationPlan& cached_plan(const Positroid& p, const std::vector<Mask>& cluster) {
  static std::mutex mu;
  static std::map<std::vector<Mask>, std::unique_ptr<PropagationPlan>> cache;
  std::vector<Mask> key{static_cast<Mask>(p.n()), static_cast<Mask>(p.k())};
  key.insert(key.end(), p.matroid().masks().begin(), p.matroid().masks().end());
  key.push_back(~Mask{0});
  auto c = cluster;
  std::sort(c.begin(), c.end(), lex_less);
  key.insert(key.end(), c.begin(), c.end());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto plan = std::make_unique<PropagationPlan>(make_plan(p, cluster));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::move(plan);
  return *slot;
}

TropVector propagate(const Positroid& p, const Cluster& C, const std::vector<Rational>& values) {
  if (values.size() != C.members.size())
    throw InputError("propagate: " + std::to_string(values.size()) + " values for a cluster of size " +
                     std::to_string(C.members.size()));
  const auto& plan = cached_plan(p, C.members);
  std::vector<TropValue> in;
  for (Mask m : plan.inputs) {
    auto it = std::find(C.members.begin(), C.members.end(), m);
    in.push_back(TropValue::of(values[it - C.members.begin()]));
  }
  auto vals = evaluate_plan(plan, in, TropSemifield{});
  TropVector out(p.n(), p.k());
  for (int i : plan.basis_index) {
    if (vals[i].inf) throw InternalError("propagate: a basis was left undetermined");
    out.values()[i] = vals[i];
  }
  return out;
}

// ------------------------------------------------------------------- bridges

TropVector tropical_bridge(const TropVector& p, int i, int j, const Rational& a) {
  const int n = p.n();
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw InputError("tropical_bridge: need distinct i, j in [1," + std::to_string(n) + "]");
  TropVector out = p;
  const auto& idx = p.index();
  for (int t = 0; t < idx.size(); ++t) {
    Mask m = idx.mask(t);
    if (!(m & bit(j)) || (m & bit(i))) continue;
    TropValue shifted = p.at((m & ~bit(j)) | bit(i));
    if (shifted.finite()) shifted.v += a;
    out.values()[t] = tmin(p.values()[t], shifted);
  }
  return out;
}

namespace {

TropVector rotate_vector(const TropVector& p, int a) {
  TropVector out(p.n(), p.k());
  const auto& idx = p.index();
  for (int t = 0; t < idx.size(); ++t) out.set(rotate_to(idx.mask(t), p.n(), a), p.values()[t]);
  return out;
}

TropVector unrotate_vector(const TropVector& p, int a) {
  TropVector out(p.n(), p.k());
  const auto& idx = p.index();
  for (int t = 0; t < idx.size(); ++t) out.set(rotate_from(idx.mask(t), p.n(), a), p.values()[t]);
  return out;
}

// The shared index shift: positions >= i move up by one, freeing position i.
Mask insert_position(Mask m, int i) {
  Mask low = m & (bit(i) - 1);
  Mask high = m >> (i - 1);
  return low | (high << i);
}

// Deletion of a loop (k stays) or contraction of a coloop (k drops) at position i.
TropVector remove_label(const TropVector& p, int i, bool coloop) {
  const int n = p.n(), k = p.k();
  TropVector out(n - 1, coloop ? k - 1 : k);
  const auto& idx = out.index();
  for (int t = 0; t < idx.size(); ++t) {
    Mask m = insert_position(idx.mask(t), i);
    if (coloop) m |= bit(i);
    out.values()[t] = p.at(m);
  }
  return out;
}

// p is rotated so that the bridge sits at (1, 2); M is its support.
std::pair<TropVector, Rational> split_bridge(const TropVector& p, const Positroid& M) {
  const int n = p.n();
  const Mask b1 = bit(1), b2 = bit(2);
  const Mask I2 = M.necklace()[1];
  const TropValue& top = p.at(I2);
  const TropValue& low = p.at((I2 & ~b2) | b1);
  if (!(I2 & b2) || (I2 & b1) || top.inf || low.inf)
    throw InternalError("bridge_reduce: bridge position does not have the expected necklace");
  Rational a = top.v - low.v;
  TropVector q = p;
  const auto& idx = p.index();
  if (M.perm()(1) == 2) {
    for (int t = 0; t < idx.size(); ++t)
      if (idx.mask(t) & b2) q.values()[t] = TropValue::infinity();
  } else {
    for (int t = 0; t < idx.size(); ++t) {
      Mask m = idx.mask(t);
      if (!(m & b2) || (m & b1)) continue;
      if (!M.contains(m)) continue;
      if (m == I2) {
        q.values()[t] = TropValue::infinity();
        continue;
      }
      Mask K = m & ~b2;
      if (!M.contains(K | b1)) continue;
      bool done = false;
      for (int x : mask_elements(K)) {
        if (x < 4) continue;
        Mask L = K & ~bit(x);
        for (int y = 3; y < x && !done; ++y) {
          if (m & bit(y)) continue;
          if (!M.contains(L | b1 | bit(y))) continue;
          TropValue v = tmin(q.at(L | b1 | b2) + q.at(L | bit(x) | bit(y)), q.at(L | b1 | bit(x)) + q.at(L | b2 | bit(y)));
          v = TropSemifield{}.div(v, q.at(L | b1 | bit(y)));
          q.values()[t] = v;
          done = true;
        }
        if (done) break;
      }
      if (!done) throw InternalError("bridge_reduce: no exchange pair for " + SubsetK(n, m).str());
    }
  }
  if (tropical_bridge(q, 1, 2, a) != p) throw InternalError("bridge_reduce: bridge does not reproduce the vector");
  return {std::move(q), std::move(a)};
}

}  // namespace

std::vector<BridgeMove> bridge_reduce(const TropVector& p) {
  Positroid M = support(p);
  ShapeReduction red = canonical_reduction(M.perm());
  std::vector<BridgeMove> moves;
  TropVector cur = p;
  for (const auto& st : red.steps) {
    switch (st.kind) {
      case StepKind::Loop:
        moves.push_back(BridgeMove{BridgeMove::Kind::AddZeroColumn, st.orig_u(), 0, 0, 0});
        cur = remove_label(cur, st.i, false);
        break;
      case StepKind::Coloop:
        moves.push_back(BridgeMove{BridgeMove::Kind::AddPivotColumn, st.orig_u(), 0, 0, 0});
        cur = remove_label(cur, st.i, true);
        break;
      case StepKind::Bridge: {
        TropVector rot = rotate_vector(cur, st.i);
        auto [q, a] = split_bridge(rot, support(rot));
        cur = unrotate_vector(q, st.i);
        moves.push_back(BridgeMove{BridgeMove::Kind::Bridge, st.orig_u(), st.orig_v(), a, 0});
        break;
      }
    }
  }
  auto fin = cur.finite_support();
  if (fin.size() != 1) throw InternalError("bridge_reduce: reduction did not end at a single basis");
  moves.push_back(BridgeMove{BridgeMove::Kind::Base, 0, 0, cur.at(fin[0]).v, red.base});
  return moves;
}

TropVector replay_moves(int n, int k, const std::vector<BridgeMove>& moves) {
  if (moves.empty() || moves.back().kind != BridgeMove::Kind::Base)
    throw InputError("replay: move list must end with a base move");
  const auto& base = moves.back();
  if (popcount(base.base) != k || base.base > full_mask(n)) throw InputError("replay: base is not a k-subset");
  TropVector cur(n, k);
  cur.set(base.base, base.a);
  for (auto it = moves.rbegin() + 1; it != moves.rend(); ++it) {
    const auto& mv = *it;
    switch (mv.kind) {
      case BridgeMove::Kind::Bridge:
        cur = tropical_bridge(cur, mv.i, mv.j, mv.a);
        break;
      case BridgeMove::Kind::AddZeroColumn:
      case BridgeMove::Kind::AddPivotColumn: {
        // In full coordinates an embedding is the identity; check that the
        // vector lies in its image.
        bool zero = mv.kind == BridgeMove::Kind::AddZeroColumn;
        for (Mask m : cur.finite_support())
          if (((m & bit(mv.i)) != 0) == zero) throw InputError("replay: vector is not in the image of the embedding");
        break;
      }
      case BridgeMove::Kind::Base:
        throw InputError("replay: base move must be last");
    }
  }
  return cur;
}

TropVector bridge_parametrize(const Positroid& m, const std::vector<Rational>& z) {
  ShapeReduction red = canonical_reduction(m.perm());
  if (static_cast<int>(z.size()) != red.bridges() + 1)
    throw InputError("bridge_parametrize: expected " + std::to_string(red.bridges() + 1) + " values, got " +
                     std::to_string(z.size()));
  std::vector<BridgeMove> moves;
  std::size_t r = 1;
  for (const auto& st : red.steps) {
    switch (st.kind) {
      case StepKind::Loop:
        moves.push_back(BridgeMove{BridgeMove::Kind::AddZeroColumn, st.orig_u(), 0, 0, 0});
        break;
      case StepKind::Coloop:
        moves.push_back(BridgeMove{BridgeMove::Kind::AddPivotColumn, st.orig_u(), 0, 0, 0});
        break;
      case StepKind::Bridge:
        moves.push_back(BridgeMove{BridgeMove::Kind::Bridge, st.orig_u(), st.orig_v(), z[r++], 0});
        break;
    }
  }
  moves.push_back(BridgeMove{BridgeMove::Kind::Base, 0, 0, z[0], red.base});
  return replay_moves(m.n(), m.k(), moves);
}

std::vector<Rational> bridge_coordinates(const std::vector<BridgeMove>& moves) {
  std::vector<Rational> z{0};
  for (const auto& mv : moves) {
    if (mv.kind == BridgeMove::Kind::Bridge) z.push_back(mv.a);
    if (mv.kind == BridgeMove::Kind::Base) z[0] = mv.a;
  }
  return z;
}

}  // namespace postrop
