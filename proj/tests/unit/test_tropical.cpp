#include <algorithm>

#include "doctest.h"
#include "postrop/clusters.hpp"
#include "postrop/errors.hpp"
#include "postrop/reduction.hpp"
#include "postrop/tropical.hpp"
#include "support.hpp"

using namespace postrop;
using testsupport::M;
using testsupport::rand_int;

namespace {

TropVector vec(int n, int k, std::initializer_list<std::pair<const char*, int>> nonzero) {
  TropVector p = TropVector::zeros(n, k);
  for (auto& [s, v] : nonzero) p.set(M(s), Rational(v));
  return p;
}

Rational rand_q() {
  Rational q(rand_int(-9, 9), rand_int(1, 3));
  q.canonicalize();
  return q;
}
Rational rand_z() { return Rational(rand_int(-6, 6)); }

std::vector<Rational> random_z(int len, bool integral) {
  std::vector<Rational> z;
  for (int i = 0; i < len; ++i) z.push_back(integral ? rand_z() : rand_q());
  return z;
}

// Independent oracle: fill unknown entries from any frame in which Sac or Sbd
// is the only unknown and its opposite entry is finite, until nothing changes.
TropVector fixed_point(const Positroid& p, const std::vector<Mask>& cluster, const std::vector<Rational>& vals,
                       bool& complete) {
  const int n = p.n(), k = p.k();
  TropVector out(n, k);
  std::vector<char> known(subset_index(n, k).size(), 0);
  const auto& idx = subset_index(n, k);
  for (int t = 0; t < idx.size(); ++t)
    if (!p.contains(idx.mask(t))) known[t] = 1;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    out.set(cluster[i], vals[i]);
    known[idx.index(cluster[i])] = 1;
  }
  auto kn = [&](Mask m) { return known[idx.index(m)] != 0; };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : all_frames(n, k)) {
      Mask ac = f.with(f.a, f.c), bd = f.with(f.b, f.d);
      Mask rest[4] = {f.with(f.a, f.b), f.with(f.c, f.d), f.with(f.a, f.d), f.with(f.b, f.c)};
      if (!std::all_of(rest, rest + 4, kn)) continue;
      TropValue rhs = tmin(out.at(rest[0]) + out.at(rest[1]), out.at(rest[2]) + out.at(rest[3]));
      for (auto [u, v] : {std::pair{ac, bd}, std::pair{bd, ac}}) {
        if (kn(u) || !kn(v) || out.at(v).inf) continue;
        out.set(u, rhs.inf ? rhs : TropValue::of(rhs.v - out.at(v).v));
        known[idx.index(u)] = 1;
        changed = true;
      }
    }
  }
  complete = std::all_of(known.begin(), known.end(), [](char c) { return c != 0; });
  return out;
}

std::vector<Positroid> positroids(int n, int k) {
  std::vector<Positroid> out;
  for (auto& w : testsupport::all_bounded_affine_perms(n, k))
    out.push_back(Positroid::from_perm(BoundedAffinePermutation(n, w)));
  return out;
}

}  // namespace

TEST_SUITE("tropical") {
  TEST_CASE("check_positive_tropical examples") {
    CHECK(check_positive_tropical(TropVector::zeros(4, 2)));
    CHECK(check_positive_tropical(TropVector::zeros(7, 3)));
    CHECK(check_positive_tropical(vec(4, 2, {{"14", 1}, {"23", 1}})));
    CHECK_FALSE(check_positive_tropical(vec(4, 2, {{"13", 1}})));
    // Tropical but not positive: the minimum is attained by the two right-hand terms.
    CHECK(check_tropical_three_term(vec(4, 2, {{"13", 1}})));
    auto v = first_violation(vec(4, 2, {{"13", 1}}));
    REQUIRE(v.has_value());
    CHECK(v->a == 1);
    CHECK(v->d == 4);
  }

  TEST_CASE("support examples") {
    CHECK(support(TropVector::zeros(4, 2)) == Positroid::uniform(4, 2));
    CHECK(support(vec(5, 2, {{"34", 1}, {"35", 1}, {"45", 1}})) == Positroid::uniform(5, 2));
    TropVector base(4, 2);
    base.set(M("13"), Rational(5));
    CHECK(support(base).matroid().masks() == std::vector<Mask>{M("13")});
    TropVector bad(4, 2);
    bad.set(M("12"), Rational(0));
    bad.set(M("34"), Rational(0));
    CHECK_THROWS_AS(support(bad), PreconditionError);
  }

  TEST_CASE("act examples and equivariance") {
    auto p = vec(5, 2, {{"34", 1}});
    CHECK(act(ActVector(5, 0), p) == p);
    ActVector a{Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)};
    CHECK(act(a, p) == vec(5, 2, {{"12", 1}, {"15", 1}, {"25", 1}}));
    ActVector na;
    for (auto& x : a) na.push_back(-x);
    CHECK(act(a, act(na, p)) == p);
    CHECK_THROWS_AS(act(ActVector(4, 0), p), InputError);
    for (int trial = 0; trial < 40; ++trial) {
      TropVector q = TropVector::zeros(6, 3);
      for (auto& x : q.values()) x = TropValue::of(Rational(rand_int(0, 2)));
      ActVector b;
      for (int i = 0; i < 6; ++i) b.push_back(rand_q());
      CHECK(check_positive_tropical(q) == check_positive_tropical(act(b, q)));
    }
  }

  TEST_CASE("propagate examples on uniform (2,4)") {
    auto U = Positroid::uniform(4, 2);
    Cluster C{U, {M("12"), M("13"), M("14"), M("23"), M("34")}};
    auto z = propagate(U, C, {0, 0, 0, 0, 0});
    CHECK(z.at(M("24")) == TropValue::of(0));
    // members in lex order: 12, 13, 14, 23, 34
    auto p = propagate(U, C, {2, 0, 0, 0, 3});
    CHECK(p.at(M("24")) == TropValue::of(0));
    auto q = propagate(U, C, {0, -1, 0, 0, 0});
    CHECK(q.at(M("24")) == TropValue::of(1));
    CHECK(check_positive_tropical(q));
    CHECK_THROWS_AS(propagate(U, C, {0, 0}), InputError);
  }

  TEST_CASE("tropical_bridge examples") {
    auto z = TropVector::zeros(4, 2);
    CHECK(tropical_bridge(z, 1, 2, 0) == z);
    CHECK(tropical_bridge(z, 2, 4, 3) == z);
    TropVector b(4, 2);
    b.set(M("13"), Rational(0));
    auto r = tropical_bridge(b, 1, 2, Rational(7));
    CHECK(r.at(M("23")) == TropValue::of(7));
    CHECK(r.at(M("13")) == TropValue::of(0));
    CHECK(r.finite_support().size() == 2);
    CHECK_THROWS_AS(tropical_bridge(z, 2, 2, 0), InputError);
  }

  TEST_CASE("bridge_reduce examples") {
    TropVector b(4, 2);
    b.set(M("13"), Rational(5));
    auto mv = bridge_reduce(b);
    REQUIRE(mv.size() >= 1);
    CHECK(mv.back().kind == BridgeMove::Kind::Base);
    CHECK(mv.back().base == M("13"));
    CHECK(mv.back().a == 5);
    for (auto& m : mv) CHECK(m.kind != BridgeMove::Kind::Bridge);

    auto z = TropVector::zeros(4, 2);
    auto zm = bridge_reduce(z);
    int bridges = 0;
    for (auto& m : zm)
      if (m.kind == BridgeMove::Kind::Bridge) {
        ++bridges;
        CHECK(m.a == 0);
      }
    CHECK(bridges == 4);
    CHECK(replay_moves(4, 2, zm) == z);

    auto intro = vec(5, 2, {{"34", 1}, {"35", 1}, {"45", 1}});
    auto im = bridge_reduce(intro);
    bridges = 0;
    for (auto& m : im) bridges += m.kind == BridgeMove::Kind::Bridge;
    CHECK(bridges == 6);
    CHECK(replay_moves(5, 2, im) == intro);
  }

  TEST_CASE("bridge_parametrize examples") {
    auto U = Positroid::uniform(4, 2);
    CHECK(bridge_parametrize(U, std::vector<Rational>(5, 0)) == TropVector::zeros(4, 2));
    CHECK_THROWS_AS(bridge_parametrize(U, std::vector<Rational>(4, 0)), InputError);
    auto single = Positroid::from_matroid(Matroid::from_masks(4, 2, {M("24")}));
    auto p = bridge_parametrize(single, {Rational(3)});
    CHECK(p.finite_support() == std::vector<Mask>{M("24")});
    CHECK(p.at(M("24")) == TropValue::of(3));
  }

  TEST_CASE("bridge parametrization round trips: all positroids with n <= 6, k <= 3") {
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k <= std::min(3, n - 1); ++k)
        for (const auto& P : positroids(n, k)) {
          int d = dim_positroid(P);
          for (int trial = 0; trial < 3; ++trial) {
            bool integral = trial == 0;
            auto z = random_z(d + 1, integral);
            auto p = bridge_parametrize(P, z);
            REQUIRE(check_positive_tropical(p));
            REQUIRE(support(p) == P);
            if (integral) CHECK(p.all_integral());
            auto mv = bridge_reduce(p);
            REQUIRE(bridge_coordinates(mv) == z);
            REQUIRE(replay_moves(n, k, mv) == p);
            ++checked;
          }
        }
    CHECK(checked > 500);
  }

  TEST_CASE("bridge round trips on (2,5) and (3,6), 100 random rational z each") {
    for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 3}}) {
      auto U = Positroid::uniform(n, k);
      for (int t = 0; t < 100; ++t) {
        auto z = random_z(k * (n - k) + 1, false);
        auto p = bridge_parametrize(U, z);
        REQUIRE(check_positive_tropical(p));
        REQUIRE(bridge_coordinates(bridge_reduce(p)) == z);
      }
    }
  }

  TEST_CASE("adjacent bridges preserve positivity on bridge-generated vectors") {
    for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 3}, std::pair{7, 3}}) {
      auto U = Positroid::uniform(n, k);
      for (int t = 0; t < 20; ++t) {
        auto p = bridge_parametrize(U, random_z(k * (n - k) + 1, false));
        int i = static_cast<int>(rand_int(1, n));
        auto q = tropical_bridge(p, i, i % n + 1, rand_q());
        CHECK(check_positive_tropical(q));
      }
    }
  }

  TEST_CASE("propagate versus restriction and the fixed-point oracle: all positroids with n <= 6, k <= 3") {
    int checked = 0;
    for (int n = 4; n <= 6; ++n)
      for (int k = 2; k <= std::min(3, n - 2); ++k)
        for (const auto& P : positroids(n, k)) {
          Cluster C = extend_to_cluster(P, {});
          std::vector<Cluster> clusters{C};
          for (Mask J : C.members)
            if (exchange_frame(P, C.members, J)) {
              clusters.push_back(mutate(C, SubsetK(n, J)));
              break;
            }
          for (const auto& D : clusters) {
            auto p = bridge_parametrize(P, random_z(dim_positroid(P) + 1, true));
            auto vals = restrict_to(p, D.members);
            auto q = propagate(P, D, vals);
            REQUIRE(q == p);
            bool complete = false;
            auto fp = fixed_point(P, D.members, vals, complete);
            if (complete) CHECK(fp == q);
            // Arbitrary integer cluster values.
            std::vector<Rational> arb;
            for (std::size_t i = 0; i < D.members.size(); ++i) arb.push_back(rand_z());
            auto r = propagate(P, D, arb);
            REQUIRE(check_positive_tropical(r));
            REQUIRE(support(r) == P);
            CHECK(r.all_integral());
            CHECK(restrict_to(r, D.members) == arb);
            auto fr = fixed_point(P, D.members, arb, complete);
            if (complete) CHECK(fr == r);
            ++checked;
          }
        }
    CHECK(checked > 100);
  }

  TEST_CASE("fixed-point oracle determines every entry for uniform positroids") {
    for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2}, std::pair{5, 3}, std::pair{6, 3}}) {
      auto U = Positroid::uniform(n, k);
      Cluster C = extend_to_cluster(U, {});
      for (int t = 0; t < 5; ++t) {
        std::vector<Rational> vals;
        for (std::size_t i = 0; i < C.members.size(); ++i) vals.push_back(rand_q());
        bool complete = false;
        auto fp = fixed_point(U, C.members, vals, complete);
        REQUIRE(complete);
        CHECK(fp == propagate(U, C, vals));
      }
    }
  }

  TEST_CASE("restrict rejects infinite entries") {
    TropVector b(4, 2);
    b.set(M("13"), Rational(0));
    CHECK_THROWS_AS(restrict_to(b, {M("12")}), InputError);
  }
}
