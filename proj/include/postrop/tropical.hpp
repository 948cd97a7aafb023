#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postrop/clusters.hpp"
#include "postrop/matroid.hpp"
#include "postrop/rational.hpp"
#include "postrop/subset.hpp"

namespace postrop {

// An element of Q ∪ {+∞}; ∞ is a distinct symbolic value.
struct TropValue {
  bool inf = true;
  Rational v = 0;

  static TropValue infinity() { return {}; }
  static TropValue of(Rational x) { return TropValue{false, std::move(x)}; }
  bool finite() const { return !inf; }

  friend bool operator==(const TropValue& a, const TropValue& b) {
    return a.inf == b.inf && (a.inf || a.v == b.v);
  }
  friend bool operator!=(const TropValue& a, const TropValue& b) { return !(a == b); }
  friend bool operator<(const TropValue& a, const TropValue& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.v < b.v;
  }
  friend TropValue operator+(const TropValue& a, const TropValue& b) {
    if (a.inf || b.inf) return infinity();
    return of(a.v + b.v);
  }
  friend TropValue tmin(const TropValue& a, const TropValue& b) { return b < a ? b : a; }
  std::string str() const { return inf ? "inf" : to_string(v); }
};

// Map binom([n],k) -> Q ∪ {∞}, stored densely in lexicographic order.
class TropVector {
 public:
  TropVector(int n, int k);  // all entries ∞
  static TropVector zeros(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const SubsetIndex& index() const { return *idx_; }
  const TropValue& at(Mask m) const;
  const TropValue& at(const SubsetK& s) const { return at(s.mask()); }
  void set(Mask m, TropValue v);
  void set(Mask m, const Rational& v) { set(m, TropValue::of(v)); }
  const std::vector<TropValue>& values() const { return vals_; }
  std::vector<TropValue>& values() { return vals_; }
  std::vector<Mask> finite_support() const;
  bool all_infinite() const;
  bool all_integral() const;

  friend bool operator==(const TropVector& a, const TropVector& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.vals_ == b.vals_;
  }
  friend bool operator!=(const TropVector& a, const TropVector& b) { return !(a == b); }

 private:
  int n_, k_;
  const SubsetIndex* idx_;
  std::vector<TropValue> vals_;
};

using ActVector = std::vector<Rational>;

// A three-term frame: S of size k-2 and a<b<c<d outside S.
struct PluckerFrame {
  Mask S = 0;
  int a = 0, b = 0, c = 0, d = 0;
  Mask with(int x, int y) const { return S | bit(x) | bit(y); }
  std::string str(int n) const;
};

// All frames for (k, n) in a fixed order (S lexicographic, then a<b<c<d).
const std::vector<PluckerFrame>& all_frames(int n, int k);

// p_Sac + p_Sbd = min(p_Sab + p_Scd, p_Sad + p_Sbc) on every frame.
bool check_positive_tropical(const TropVector& p);
std::optional<PluckerFrame> first_violation(const TropVector& p);
// Ordinary tropical three-term relations: the minimum of the three sums is attained twice.
bool check_tropical_three_term(const TropVector& p);

// Finite-entry set as a validated positroid. Throws PreconditionError if it is not one.
Positroid support(const TropVector& p);

TropVector act(const ActVector& a, const TropVector& p);

std::vector<Rational> restrict_to(const TropVector& p, const std::vector<Mask>& members);

// Compiled propagation: starting from values on a cluster, each step sets
// target = (K1*K2 + K3*K4) / K0 in a semifield. Indices refer to the subset
// index of (n,k); -1 denotes a non-basis (the semifield zero).
struct PlanStep {
  int target, k1, k2, k3, k4, k0;
};

struct PropagationPlan {
  int n = 0, k = 0;
  std::vector<Mask> inputs;     // cluster members (lexicographic)
  std::vector<int> input_index;
  std::vector<PlanStep> steps;
  std::vector<int> basis_index;  // indices of all bases of the positroid
};

PropagationPlan make_plan(const Positroid& p, const std::vector<Mask>& cluster);
// Cached plan for (positroid, cluster); thread-safe.
const PropagationPlan& cached_plan(const Positroid& p, const std::vector<Mask>& cluster);

// Evaluate a plan in a semifield Semi providing T, zero(), add, mul, div.
template <class Semi>
std::vector<typename Semi::T> evaluate_plan(const PropagationPlan& plan, const std::vector<typename Semi::T>& inputs,
                                            const Semi& s) {
  std::vector<typename Semi::T> vals(subset_index(plan.n, plan.k).size(), s.zero());
  for (std::size_t i = 0; i < plan.inputs.size(); ++i) vals[plan.input_index[i]] = inputs[i];
  const typename Semi::T z = s.zero();
  auto get = [&](int idx) -> const typename Semi::T& { return idx < 0 ? z : vals[idx]; };
  for (const auto& st : plan.steps)
    vals[st.target] = s.div(s.add(s.mul(get(st.k1), get(st.k2)), s.mul(get(st.k3), get(st.k4))), get(st.k0));
  return vals;
}

struct TropSemifield {
  using T = TropValue;
  T zero() const { return TropValue::infinity(); }
  T add(const T& a, const T& b) const { return tmin(a, b); }
  T mul(const T& a, const T& b) const { return a + b; }
  T div(const T& a, const T& b) const;
};

TropVector propagate(const Positroid& p, const Cluster& C, const std::vector<Rational>& values);

TropVector tropical_bridge(const TropVector& p, int i, int j, const Rational& a);

struct BridgeMove {
  enum class Kind { Bridge, AddZeroColumn, AddPivotColumn, Base };
  Kind kind;
  int i = 0, j = 0;  // bridge(i, j, a); embeddings use i
  Rational a = 0;    // bridge value or z0
  Mask base = 0;     // Base
  friend bool operator==(const BridgeMove& x, const BridgeMove& y) {
    return x.kind == y.kind && x.i == y.i && x.j == y.j && x.a == y.a && x.base == y.base;
  }
};

// Reduce p to a base vector; the list is in reduction order and ends with Base.
std::vector<BridgeMove> bridge_reduce(const TropVector& p);
// Rebuild the vector from a move list (in the full n, k coordinates).
TropVector replay_moves(int n, int k, const std::vector<BridgeMove>& moves);
// z = (z0, z1, ..., zd): z0 is the base value and z_r the r-th bridge value.
TropVector bridge_parametrize(const Positroid& m, const std::vector<Rational>& z);
// Inverse of bridge_parametrize.
std::vector<Rational> bridge_coordinates(const std::vector<BridgeMove>& moves);

}  // namespace postrop
