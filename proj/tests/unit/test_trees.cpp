#include <algorithm>
#include <set>

#include "doctest.h"
#include "postrop/errors.hpp"
#include "postrop/fans.hpp"
#include "postrop/trees.hpp"
#include "support.hpp"

using namespace postrop;
using testsupport::M;
using testsupport::rand_int;

namespace {

long long catalan(int m) {
  long long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// p_ij = sum of the weights of the splits containing both i and j.
TropVector weighted_trop(const PlanarTree& T, const std::vector<long>& w) {
  TropVector p = TropVector::zeros(T.n(), 2);
  for (Mask m : subset_index(T.n(), 2).masks()) {
    long c = 0;
    for (std::size_t e = 0; e < T.splits().size(); ++e)
      if ((m & T.splits()[e]) == m) c += w[e];
    p.set(m, Rational(c));
  }
  return p;
}

int count_pieces(const Subdivision& s) { return static_cast<int>(s.maximal_faces.size()); }

}  // namespace

TEST_SUITE("trees") {
  TEST_CASE("construction, validation and printing") {
    PlanarTree star = PlanarTree::star(5);
    CHECK(star.str() == "(1,2,3,4,5)");
    CHECK(star.vertices().size() == 1);
    PlanarTree t = PlanarTree::from_splits(5, {M("34")});
    CHECK(t.str() == "(1,2,(3,4),5)");
    REQUIRE(t.vertices().size() == 2);
    CHECK(t.vertices()[0] == std::vector<Mask>{M("1"), M("2"), M("34"), M("5")});
    CHECK(t.vertices()[1] == std::vector<Mask>{M("3"), M("4"), M("125")});
    CHECK(PlanarTree::from_splits(5, {M("12")}).str() == "((1,2),3,4,5)");
    CHECK(PlanarTree::from_splits(6, {M("123"), M("23")}).str() == "((1,(2,3)),4,5,6)");

    CHECK_THROWS_AS(PlanarTree::from_splits(5, {M("13")}), InputError);   // not an interval
    CHECK_THROWS_AS(PlanarTree::from_splits(5, {M("45")}), InputError);   // contains n
    CHECK_THROWS_AS(PlanarTree::from_splits(5, {M("1234")}), InputError); // trivial
    CHECK_THROWS_AS(PlanarTree::from_splits(6, {M("123"), M("234")}), InputError);  // crossing
    CHECK_THROWS_AS(PlanarTree::from_splits(6, {M("12"), M("12")}), InputError);

    CHECK(PlanarTree::parse(" ( 1 , 2 , (3,4) , 5 ) ") == t);
    for (const char* bad : {"(1,2,3", "(1,3,2,4,5)", "((1,2,3,4),5)", "(1,(2),3,4,5)", "(1,2,(3,4,5))",
                            "(1,2)", "1,2,3", "(1,2,3,4,5)x", "(1,,2,3)"})
      CHECK_THROWS_AS(PlanarTree::parse(bad), InputError);
  }

  TEST_CASE("parse and print round trip over all planar trees") {
    for (int n = 3; n <= 8; ++n)
      for (const PlanarTree& T : all_planar_trees(n)) {
        CHECK(PlanarTree::parse(T.str()) == T);
        CHECK(T.vertices().size() == T.splits().size() + 1);
        for (const auto& blocks : T.vertices()) {
          CHECK(blocks.size() >= 3);
          Mask u = 0;
          for (Mask b : blocks) {
            CHECK((u & b) == 0);
            u |= b;
          }
          CHECK(u == full_mask(n));
        }
      }
  }

  TEST_CASE("counts of planar trees") {
    // Noncrossing sets of diagonals of an n-gon (little Schröder numbers) and
    // trivalent trees (Catalan numbers).
    const long long schroeder[] = {0, 0, 0, 1, 3, 11, 45, 197, 903};
    for (int n = 3; n <= 8; ++n) {
      auto all = all_planar_trees(n);
      CHECK(static_cast<long long>(all.size()) == schroeder[n]);
      long long trivalent = std::count_if(all.begin(), all.end(),
                                          [&](const PlanarTree& T) { return (int)T.splits().size() == n - 3; });
      CHECK(trivalent == catalan(n - 2));
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
  }

  TEST_CASE("subdivisions of the hypersimplex from trees") {
    Subdivision s0 = subdivision_from_tree(PlanarTree::star(5));
    CHECK(s0.trivial());
    CHECK(count_pieces(subdivision_from_tree(PlanarTree::from_splits(5, {M("34")}))) == 2);
    auto cs = cuts(subdivision_from_tree(PlanarTree::from_splits(5, {M("34")})));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].normal == IntVec{0, 0, 1, 1, 0});
    CHECK(cs[0].rhs == 1);
    auto cs2 = cuts(subdivision_from_tree(PlanarTree::from_splits(5, {M("12")})));
    REQUIRE(cs2.size() == 1);
    CHECK(cs2[0].normal == IntVec{1, 1, 0, 0, 0});

    for (int n = 4; n <= 7; ++n)
      for (const PlanarTree& T : all_planar_trees(n)) {
        Subdivision s = subdivision_from_tree(T);
        CHECK(count_pieces(s) == static_cast<int>(T.vertices().size()));
        CHECK(s.maximal_faces == regular_subdivision(trop_from_tree(T)).maximal_faces);
        CHECK(tree_from_subdivision(s) == T);
        CHECK(is_positroid_subdivision(s));
        CHECK(dim_subdivision(s) == n - 2 - static_cast<int>(T.vertices().size()));
        if (static_cast<int>(T.splits().size()) == n - 3) CHECK(ndim(s) == 0);
      }
  }

  TEST_CASE("a caterpillar tree") {
    for (int n = 5; n <= 9; ++n) {
      std::vector<Mask> splits;
      for (int b = 2; b <= n - 2; ++b) splits.push_back(full_mask(b));
      PlanarTree T = PlanarTree::from_splits(n, splits);
      Subdivision s = subdivision_from_tree(T);
      CHECK(count_pieces(s) == n - 2);
      CHECK(dim_subdivision(s) == 0);
    }
  }

  TEST_CASE("tree from tropical vectors") {
    for (int n = 4; n <= 8; ++n)
      for (const PlanarTree& T : all_planar_trees(n)) CHECK(tree_from_trop(trop_from_tree(T)) == T);

    for (int rep = 0; rep < 300; ++rep) {
      int n = static_cast<int>(rand_int(4, 9));
      auto all = all_planar_trees(n);
      const PlanarTree& T = all[rand_int(0, static_cast<long>(all.size()) - 1)];
      std::vector<long> w;
      for (std::size_t e = 0; e < T.splits().size(); ++e) w.push_back(rand_int(1, 20));
      TropVector p = weighted_trop(T, w);
      // The tree is invariant under the torus action.
      ActVector a(n);
      for (int i = 0; i < n; ++i) a[i] = Rational(rand_int(-9, 9));
      CHECK(tree_from_trop(act(a, p)) == T);
      CHECK(tree_from_trop(p) == T);
    }

    // Random positive vectors from the parametrization.
    for (int n = 5; n <= 8; ++n) {
      Parametrization P = markparam(n);
      for (int rep = 0; rep < 60; ++rep) {
        QVec y(P.r);
        for (auto& c : y) c = Rational(rand_int(-6, 6));
        TropVector p = P.trop(y);
        PlanarTree T = tree_from_trop(p);
        CHECK(subdivision_from_tree(T).maximal_faces == regular_subdivision(p).maximal_faces);
      }
    }
    TropVector bad = TropVector::zeros(5, 2);
    bad.set(M("13"), Rational(1));
    CHECK_THROWS_AS(tree_from_trop(bad), PreconditionError);
    CHECK_THROWS_AS(tree_from_trop(TropVector::zeros(6, 3)), PreconditionError);
  }

  TEST_CASE("the (2,n) fan is the fan of planar trees") {
    for (int n = 5; n <= 8; ++n) {
      Parametrization P = markparam(n);
      NormalFan F = normal_fan(P);
      CHECK(static_cast<long long>(F.vertices.size()) == catalan(n - 2));
      CHECK(static_cast<int>(F.rays.size()) == n * (n - 3) / 2);
      // Each ray gives a one-split tree; each maximal cone a distinct trivalent tree.
      std::set<Mask> ray_splits;
      for (const IntVec& r : F.rays) {
        PlanarTree T = tree_from_trop(P.trop(to_qvec(r)));
        REQUIRE(T.splits().size() == 1);
        ray_splits.insert(T.splits()[0]);
      }
      CHECK(static_cast<int>(ray_splits.size()) == n * (n - 3) / 2);
      std::set<PlanarTree> trees;
      for (const auto& cone : F.cone_rays) {
        QVec y(P.r, Rational(0));
        for (int i : cone)
          for (int c = 0; c < P.r; ++c) y[c] += Rational(static_cast<long>(F.rays[i][c]));
        PlanarTree T = tree_from_trop(P.trop(y));
        CHECK(static_cast<int>(T.splits().size()) == n - 3);
        trees.insert(T);
      }
      CHECK(static_cast<long long>(trees.size()) == catalan(n - 2));
    }
  }

  TEST_CASE("u variables are nonnegative on trees and vanish on the star") {
    for (int n = 5; n <= 7; ++n)
      for (const PlanarTree& T : all_planar_trees(n)) {
        TropVector p = trop_from_tree(T);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 2; j <= n; ++j) {
            if (i == 1 && j == n) continue;
            TropValue u = u_trop(p, i, j);
            REQUIRE(!u.inf);
            CHECK(u.v >= Rational(0));
            if (T.splits().empty()) CHECK(u.v == Rational(0));
          }
      }
  }
}
