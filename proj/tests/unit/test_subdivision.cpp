#include <algorithm>

#include "doctest.h"
#include "postrop/clusters.hpp"
#include "postrop/errors.hpp"
#include "postrop/subdivision.hpp"
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

std::vector<Mask> all_except(int n, int k, std::initializer_list<const char*> drop) {
  std::vector<Mask> out;
  for (Mask m : subset_index(n, k).masks()) {
    bool keep = true;
    for (auto* d : drop) keep = keep && m != M(d);
    if (keep) out.push_back(m);
  }
  return out;
}

std::vector<Mask> masks(std::initializer_list<const char*> items) {
  std::vector<Mask> out;
  for (auto* s : items) out.push_back(M(s));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Weight max(0, |I ∩ A| - r): the split of the hypersimplex along x_A = r.
TropVector slice(int n, int k, Mask A, int r) {
  TropVector p(n, k);
  for (Mask m : subset_index(n, k).masks()) p.set(m, Rational(std::max(0, popcount(m & A) - r)));
  return p;
}

long long binom(int n, int r) {
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Eulerian-number formula for the normalized volume of the hypersimplex.
long long hypersimplex_volume(int n, int k) {
  long long v = 0;
  for (int j = 0; j < k; ++j) {
    long long t = binom(n, j);
    for (int e = 0; e < n - 1; ++e) t *= (k - j);
    v += (j % 2 ? -t : t);
  }
  return v;
}

void check_volume_additivity(const Subdivision& s) {
  Integer total = 0;
  for (const auto& f : s.maximal_faces) total += normalized_volume(Matroid::unchecked(s.n, s.k, f));
  CHECK(total == normalized_volume(Matroid::unchecked(s.n, s.k, s.support)));
}

}  // namespace

TEST_SUITE("subdivision") {
  TEST_CASE("regular_subdivision examples") {
    auto t = regular_subdivision(TropVector::zeros(4, 2));
    CHECK(t.trivial());
    CHECK(t.maximal_faces[0] == subset_index(4, 2).masks());
    CHECK(cuts(t).empty());

    auto intro = regular_subdivision(vec(5, 2, {{"34", 1}, {"35", 1}, {"45", 1}}));
    REQUIRE(intro.maximal_faces.size() == 2);
    std::vector<std::vector<Mask>> expect{all_except(5, 2, {"34", "35", "45"}), all_except(5, 2, {"12"})};
    std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
    });
    CHECK(intro.maximal_faces == expect);
    auto c = cuts(intro);
    REQUIRE(c.size() == 1);
    CHECK(c[0].normal == IntVec{1, 1, 0, 0, 0});
    CHECK(c[0].rhs == 1);

    auto s34 = regular_subdivision(vec(5, 2, {{"34", 1}}));
    REQUIRE(s34.maximal_faces.size() == 2);
    auto A = all_except(5, 2, {"34"});
    auto B = masks({"13", "14", "23", "24", "34", "35", "45"});
    CHECK(std::find(s34.maximal_faces.begin(), s34.maximal_faces.end(), A) != s34.maximal_faces.end());
    CHECK(std::find(s34.maximal_faces.begin(), s34.maximal_faces.end(), B) != s34.maximal_faces.end());
    auto c34 = cuts(s34);
    REQUIRE(c34.size() == 1);
    CHECK(c34[0].normal == IntVec{0, 0, 1, 1, 0});
    CHECK(c34[0].rhs == 1);
    CHECK_THROWS_AS(regular_subdivision(TropVector(4, 2)), InputError);
  }

  TEST_CASE("subdivision is invariant under the torus action") {
    for (int t = 0; t < 20; ++t) {
      TropVector p = TropVector::zeros(6, 3);
      for (auto& x : p.values()) x = TropValue::of(Rational(rand_int(0, 3)));
      ActVector a;
      for (int i = 0; i < 6; ++i) a.push_back(Rational(rand_int(-5, 5), 2));
      for (auto& x : a) x.canonicalize();
      CHECK(regular_subdivision(act(a, p)).maximal_faces == regular_subdivision(p).maximal_faces);
    }
  }

  TEST_CASE("positroid subdivisions: examples and contrast") {
    CHECK(is_positroid_subdivision(regular_subdivision(TropVector::zeros(6, 3))));
    CHECK(is_positroid_subdivision(regular_subdivision(vec(5, 2, {{"34", 1}, {"35", 1}, {"45", 1}}))));
    // The octahedron split along the non-positroid diagonal.
    auto bad = vec(4, 2, {{"13", 1}});
    CHECK(check_tropical_three_term(bad));
    CHECK_FALSE(is_positroid_subdivision(regular_subdivision(bad)));
    // A (3,6) vector that is tropical but not positive, found by search.
    bool found = false;
    for (int t = 0; t < 5000 && !found; ++t) {
      TropVector p = TropVector::zeros(6, 3);
      for (auto& x : p.values()) x = TropValue::of(Rational(rand_int(0, 1)));
      if (check_tropical_three_term(p) && !check_positive_tropical(p)) {
        CHECK_FALSE(is_positroid_subdivision(regular_subdivision(p)));
        found = true;
      }
    }
    CHECK(found);
  }

  TEST_CASE("positive tropical iff every face is a positroid: exhaustive small cases") {
    auto run = [](int n, int k, int maxv, long limit) {
      const int N = subset_index(n, k).size();
      long total = 1;
      for (int i = 0; i < N; ++i) total *= (maxv + 1);
      long count = 0, positive = 0;
      for (long code = 0; code < total && count < limit; ++code, ++count) {
        TropVector p(n, k);
        long c = code;
        for (int i = 0; i < N; ++i) {
          p.values()[i] = TropValue::of(Rational(c % (maxv + 1)));
          c /= (maxv + 1);
        }
        bool pos = check_positive_tropical(p);
        positive += pos;
        REQUIRE(pos == is_positroid_subdivision(regular_subdivision(p)));
      }
      return positive;
    };
    CHECK(run(4, 2, 2, 1 << 20) > 1);
    CHECK(run(5, 2, 1, 1 << 20) > 1);
    CHECK(run(4, 3, 3, 1 << 20) > 1);
  }

  TEST_CASE("positive tropical iff every face is a positroid: random (2,6) and (3,6)") {
    for (auto [n, k] : {std::pair{6, 2}, std::pair{6, 3}}) {
      auto U = Positroid::uniform(n, k);
      for (int t = 0; t < 25; ++t) {
        std::vector<Rational> z;
        for (int i = 0; i <= k * (n - k); ++i) z.push_back(Rational(rand_int(-4, 4)));
        auto p = bridge_parametrize(U, z);
        auto s = regular_subdivision(p);
        CHECK(is_positroid_subdivision(s));
        check_volume_additivity(s);
        TropVector q = TropVector::zeros(n, k);
        for (auto& x : q.values()) x = TropValue::of(Rational(rand_int(0, 2)));
        CHECK(check_positive_tropical(q) == is_positroid_subdivision(regular_subdivision(q)));
      }
    }
  }

  TEST_CASE("secondary cone examples") {
    for (auto [n, k] : {std::pair{4, 2}, std::pair{6, 3}}) {
      auto s = regular_subdivision(TropVector::zeros(n, k));
      auto C = secondary_cone(s);
      CHECK(C.feasible);
      CHECK(C.dimension == n);
      CHECK(C.contains(TropVector::zeros(n, k)));
    }
    auto p = vec(5, 2, {{"34", 1}, {"35", 1}, {"45", 1}});
    auto C = secondary_cone(regular_subdivision(p));
    CHECK(C.feasible);
    CHECK(C.dimension == 6);
    CHECK(C.contains(p));
    CHECK_FALSE(C.contains(vec(5, 2, {{"12", 1}, {"13", 1}, {"23", 1}})));
    for (int t = 0; t < 20; ++t) {
      TropVector q = TropVector::zeros(6, 3);
      for (auto& x : q.values()) x = TropValue::of(Rational(rand_int(0, 4)));
      auto s = regular_subdivision(q);
      auto D = secondary_cone(s);
      CHECK(D.feasible);
      CHECK(D.contains(q));
    }
  }

  TEST_CASE("an inconsistent cell collection has an infeasible cone") {
    // Both halves of the octahedron split along x1+x2=1, plus one half of the
    // split along x1+x3=1: no weight vector is affine on all three cells and
    // strictly convex across the wall.
    Subdivision bogus = regular_subdivision(TropVector::zeros(4, 2));
    bogus.weights.reset();
    bogus.maximal_faces = {masks({"12", "13", "14", "23", "24"}), masks({"13", "14", "23", "24", "34"}),
                           masks({"12", "13", "14", "23", "34"})};
    auto C = secondary_cone(bogus);
    CHECK_FALSE(C.feasible);
    CHECK(C.dimension == -1);
    CHECK_THROWS_AS(dim_subdivision(bogus), PreconditionError);
  }

  TEST_CASE("dim and ndim") {
    auto two = regular_subdivision(slice(6, 3, M("12"), 1));
    REQUIRE(two.maximal_faces.size() == 2);
    auto P = two.positroids();
    CHECK(dim_positroid(P[0]) == 7);
    CHECK(dim_positroid(P[1]) == 7);
    CHECK(ndim(two) == 4);
    CHECK(dim_subdivision(two) == 3);

    auto three = regular_subdivision(slice(6, 3, M("123"), 1));
    REQUIRE(three.maximal_faces.size() == 2);
    std::vector<int> dims;
    for (auto& q : three.positroids()) dims.push_back(dim_positroid(q));
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{5, 8});
    CHECK(ndim(three) == 3);
    CHECK(dim_subdivision(three) == 3);

    auto triv = regular_subdivision(TropVector::zeros(6, 3));
    CHECK(dim_subdivision(triv) == 4);
    CHECK(ndim(triv) == 4);
    CHECK(dim_subdivision(regular_subdivision(vec(5, 2, {{"34", 1}, {"35", 1}, {"45", 1}}))) == 1);
  }

  TEST_CASE("normalized volumes") {
    CHECK(normalized_volume(Positroid::uniform(4, 2)) == 4);
    for (int n = 2; n <= 6; ++n) CHECK(normalized_volume(Positroid::uniform(n, 1)) == 1);
    for (int n = 3; n <= 7; ++n)
      for (int k = 1; k < n; ++k) CHECK(normalized_volume(Positroid::uniform(n, k)) == Integer(static_cast<long>(hypersimplex_volume(n, k))));
    CHECK(hypersimplex_volume(6, 3) == 66);
    check_volume_additivity(regular_subdivision(vec(5, 2, {{"34", 1}, {"35", 1}, {"45", 1}})));
    check_volume_additivity(regular_subdivision(slice(6, 3, M("123"), 1)));
    // A single basis is a point.
    CHECK(normalized_volume(Matroid::from_masks(4, 2, {M("13")})) == 1);
  }

  TEST_CASE("each full-dimensional cell has a unique gauge vanishing on it") {
    auto U = Positroid::uniform(6, 3);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> z;
      for (int i = 0; i <= 9; ++i) z.push_back(Rational(rand_int(-4, 4)));
      auto p = bridge_parametrize(U, z);
      auto s = regular_subdivision(p);
      for (const auto& F : s.maximal_faces) {
        auto a = face_gauge(p, F);
        REQUIRE(a.has_value());
        auto q = act(*a, p);
        for (Mask m : subset_index(6, 3).masks()) {
          bool in = std::binary_search(F.begin(), F.end(), m, lex_less);
          if (in) CHECK(q.at(m) == TropValue::of(0));
          else CHECK(TropValue::of(0) < q.at(m));
        }
      }
    }
  }
}
