#include <algorithm>
#include <set>

#include "doctest.h"
#include "postrop/errors.hpp"
#include "postrop/matroid.hpp"
#include "support.hpp"

using namespace postrop;
using testsupport::M;
using testsupport::Ss;

namespace {

// Independent oracle: positions of I in the cyclic order a < a+1 < ... < a-1,
// compared componentwise after sorting.
bool gale_oracle(Mask I, Mask J, int n, int a) {
  auto positions = [&](Mask X) {
    std::vector<int> p;
    for (int x = 1; x <= n; ++x)
      if (X & bit(x)) p.push_back(((x - a) % n + n) % n);
    std::sort(p.begin(), p.end());
    return p;
  };
  auto pi = positions(I), pj = positions(J);
  for (std::size_t t = 0; t < pi.size(); ++t)
    if (pi[t] > pj[t]) return false;
  return true;
}

Necklace necklace_oracle(int n, const std::vector<Mask>& B) {
  Necklace out;
  for (int a = 1; a <= n; ++a) {
    std::vector<Mask> mins;
    for (Mask I : B) {
      bool all = true;
      for (Mask J : B) all = all && gale_oracle(I, J, n, a);
      if (all) mins.push_back(I);
    }
    REQUIRE(mins.size() == 1);
    out.push_back(mins[0]);
  }
  return out;
}

std::vector<Mask> masks_of(const std::vector<SubsetK>& v) {
  std::vector<Mask> out;
  for (auto& s : v) out.push_back(s.mask());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

TEST_SUITE("combinat") {
  TEST_CASE("subset basics and lexicographic order") {
    auto s = SubsetK::from_elements(6, {4, 1, 3});
    CHECK(s.elements() == std::vector<int>{1, 3, 4});
    CHECK(s.key() == "1,3,4");
    CHECK(SubsetK::parse_key(6, "1,3,4") == s);
    CHECK_THROWS_AS(SubsetK::from_elements(4, {1, 5}), InputError);
    CHECK_THROWS_AS(SubsetK::from_elements(4, {1, 1}), InputError);
    auto all = all_subsets(5, 2);
    REQUIRE(all.size() == 10);
    CHECK(all.front().str() == "12");
    CHECK(all[4].str() == "23");
    CHECK(all.back().str() == "45");
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].elements() < all[i + 1].elements());
  }

  TEST_CASE("rotated Gale order agrees with the direct cyclic-order oracle") {
    const int n = 6;
    for (Mask I : subset_index(n, 3).masks())
      for (Mask J : subset_index(n, 3).masks())
        for (int a = 1; a <= n; ++a) REQUIRE(gale_leq_a(I, J, n, a) == gale_oracle(I, J, n, a));
  }

  TEST_CASE("is_matroid examples") {
    CHECK(is_matroid(4, 2, all_subsets(4, 2)));
    CHECK_FALSE(is_matroid(4, 2, Ss(4, {"12", "34"})));
    CHECK(is_matroid(4, 2, Ss(4, {"12", "23", "34", "14"})));
    CHECK_THROWS_AS(is_matroid(4, 2, Ss(4, {"12", "234"})), InputError);
    CHECK_THROWS_AS(Matroid::from_bases(4, 2, Ss(4, {"12", "34"})), InputError);
  }

  TEST_CASE("grassmann necklaces of the documented examples") {
    auto uni = Matroid::uniform(4, 2);
    CHECK(grassmann_necklace(uni) == Necklace{M("12"), M("23"), M("34"), M("14")});
    auto sq = Matroid::from_bases(4, 2, Ss(4, {"12", "23", "34", "14"}));
    CHECK(grassmann_necklace(sq) == Necklace{M("12"), M("23"), M("34"), M("14")});
    auto ds = Matroid::from_bases(4, 2, Ss(4, {"13", "14", "23", "24"}));
    CHECK(grassmann_necklace(ds) == necklace_oracle(4, ds.masks()));
    CHECK(grassmann_necklace(ds) == Necklace{M("13"), M("23"), M("13"), M("14")});
  }

  TEST_CASE("positroid_from_necklace and envelope examples") {
    auto p = Positroid::from_necklace(4, 2, {M("12"), M("23"), M("34"), M("14")});
    CHECK(p.matroid() == Matroid::uniform(4, 2));
    auto ds = Matroid::from_bases(4, 2, Ss(4, {"13", "14", "23", "24"}));
    auto q = Positroid::from_necklace(4, 2, grassmann_necklace(ds));
    CHECK(q.matroid() == ds);
    CHECK_THROWS_AS(Positroid::from_necklace(4, 2, {M("12"), M("13"), M("34"), M("14")}), InputError);
    auto sq = Matroid::from_bases(4, 2, Ss(4, {"12", "23", "34", "14"}));
    CHECK(positroid_envelope(sq).matroid() == Matroid::uniform(4, 2));
    CHECK(positroid_envelope(Matroid::uniform(4, 2)).matroid() == Matroid::uniform(4, 2));
    CHECK(positroid_envelope(ds).matroid() == ds);
    CHECK_FALSE(is_positroid(sq));
    CHECK(is_positroid(ds));
    CHECK(is_positroid(Matroid::from_bases(5, 2, Ss(5, {"13"}))));
  }

  TEST_CASE("affine permutation examples") {
    auto f = necklace_to_affine_perm(4, 2, {M("12"), M("23"), M("34"), M("14")});
    CHECK(f.window() == std::vector<int>{3, 4, 5, 6});
    CHECK(f.k() == 2);
    CHECK(f(0) == 2);
    CHECK(f(-3) == -1);
    auto ds = Matroid::from_bases(4, 2, Ss(4, {"13", "14", "23", "24"}));
    auto nk = grassmann_necklace(ds);
    auto g = necklace_to_affine_perm(4, 2, nk);
    CHECK(affine_perm_to_necklace(g) == nk);
    // Label 5 lies in no basis: f(5) = 5, and 5 is in no necklace entry.
    auto lp = Positroid::from_matroid(Matroid::from_bases(5, 2, Ss(5, {"12", "13", "23"})));
    CHECK(lp.perm()(5) == 5);
    for (Mask m : lp.necklace()) CHECK_FALSE((m & bit(5)));
    CHECK_THROWS_AS(BoundedAffinePermutation(4, {3, 4, 5, 5}), InputError);
    CHECK_THROWS_AS(BoundedAffinePermutation(4, {0, 4, 5, 6}), InputError);
    CHECK_THROWS_AS(BoundedAffinePermutation(4, {3, 4, 5}), InputError);
  }

  TEST_CASE("necklace/permutation/positroid round trips are exhaustive for k<=3, n<=6") {
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= std::min(3, n); ++k) {
        auto perms = testsupport::all_bounded_affine_perms(n, k);
        std::set<std::vector<Mask>> seen;
        for (const auto& w : perms) {
          BoundedAffinePermutation f(n, w);
          Necklace I = affine_perm_to_necklace(f);
          REQUIRE(is_grassmann_necklace(n, k, I));
          REQUIRE(necklace_to_affine_perm(n, k, I) == f);
          auto p = Positroid::from_necklace(n, k, I);
          REQUIRE(grassmann_necklace(p.matroid()) == I);
          REQUIRE(grassmann_necklace(p.matroid()) == necklace_oracle(n, p.matroid().masks()));
          REQUIRE(is_matroid(n, k, p.matroid().bases()));
          seen.insert(p.matroid().masks());
        }
        CHECK(seen.size() == perms.size());
      }
  }

  TEST_CASE("positroids by brute force over basis sets equal the permutation count") {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
      std::size_t positroids = 0;
      testsupport::for_each_matroid(n, k, [&](const std::vector<Mask>& B) {
        auto m = Matroid::unchecked(n, k, B);
        auto env = positroid_envelope(m);
        bool pos = env.matroid() == m;
        REQUIRE(pos == alcoved_criterion(m));
        REQUIRE(positroid_envelope(env.matroid()).matroid() == env.matroid());
        for (Mask b : B) REQUIRE(env.contains(b));
        positroids += pos;
      });
      CHECK(positroids == testsupport::all_bounded_affine_perms(n, k).size());
    }
  }

  TEST_CASE("connected components") {
    auto ds = Positroid::from_matroid(Matroid::from_bases(4, 2, Ss(4, {"13", "14", "23", "24"})));
    auto d = connected_components(ds);
    CHECK(d.blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    std::vector<Matroid> parts;
    for (auto& c : d.components) parts.push_back(c.matroid());
    CHECK(direct_sum(4, d.blocks, parts) == ds.matroid());
    CHECK(connected_components(Positroid::uniform(4, 2)).blocks.size() == 1);
    // k=2 positroid from the cyclic interval partition [1,2],[3,4],[5,5]
    std::vector<SubsetK> bases;
    std::vector<int> block{0, 1, 1, 2, 2, 3};
    for (auto& s : all_subsets(5, 2)) {
      auto e = s.elements();
      if (block[e[0]] != block[e[1]]) bases.push_back(s);
    }
    auto p = Positroid::from_matroid(Matroid::from_bases(5, 2, bases));
    CHECK(connected_components(p).blocks.size() == 1);
    CHECK(polytope_dimension(p.matroid()) == 4);
    CHECK(polytope_dimension(Matroid::uniform(6, 3)) == 5);
  }

  TEST_CASE("components of positroids are positroids and form noncrossing partitions") {
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n && k <= 3; ++k)
        for (const auto& w : testsupport::all_bounded_affine_perms(n, k)) {
          auto p = Positroid::from_perm(BoundedAffinePermutation(n, w));
          auto d = connected_components(p);
          REQUIRE(is_noncrossing_partition(n, d.blocks));
          std::vector<Matroid> parts;
          for (auto& c : d.components) parts.push_back(c.matroid());
          REQUIRE(direct_sum(n, d.blocks, parts) == p.matroid());
          REQUIRE(polytope_dimension(p.matroid()) == n - static_cast<int>(d.blocks.size()));
        }
  }

  TEST_CASE("noncrossing direct sums of positroids are positroids; crossing ones need not be") {
    auto u = Positroid::uniform(2, 1).matroid();
    CHECK(is_positroid(direct_sum(4, {{1, 2}, {3, 4}}, {u, u})));
    CHECK_FALSE(is_positroid(direct_sum(4, {{1, 3}, {2, 4}}, {u, u})));
    auto u23 = Positroid::uniform(3, 2).matroid();
    CHECK(is_positroid(direct_sum(6, {{1, 2, 3}, {4, 5, 6}}, {u23, u23})));
    CHECK(is_positroid(direct_sum(6, {{1, 5, 6}, {2, 3, 4}}, {u23, u23})));
    CHECK_FALSE(is_positroid(direct_sum(6, {{1, 3, 5}, {2, 4, 6}}, {u23, u23})));
  }

  TEST_CASE("matroid polytope vertex sets (edge directions)") {
    CHECK(is_matroid_polytope_vertexset(4, 2, all_subsets(4, 2)));
    CHECK_FALSE(is_matroid_polytope_vertexset(4, 2, Ss(4, {"12", "34"})));
    CHECK(is_matroid_polytope_vertexset(4, 2, Ss(4, {"12", "13"})));
    // exchange-axiom oracle on every basis set of (2,4)
    const auto& idx = subset_index(4, 2);
    for (int sel = 1; sel < (1 << idx.size()); ++sel) {
      std::vector<SubsetK> S;
      for (int i = 0; i < idx.size(); ++i)
        if (sel >> i & 1) S.emplace_back(4, idx.mask(i));
      REQUIRE(is_matroid_polytope_vertexset(4, 2, S) == is_matroid(4, 2, S));
    }
  }
}
