#include "doctest.h"
#include "postrop/clusters.hpp"
#include "postrop/errors.hpp"
#include "postrop/realize.hpp"
#include "support.hpp"

using namespace postrop;
using testsupport::M;
using testsupport::rand_int;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

PuiseuxPoly T(long c, long num, long den = 1) { return PuiseuxPoly::monomial(Rational(c), q(num, den)); }
PuiseuxPoly C(long c) { return PuiseuxPoly::constant(Rational(c)); }

// The curve of the (2,5) introductory example.
PuiseuxMatrix intro_curve() {
  return {{C(0), C(1), C(1), C(1), C(1)}, {C(-1), C(0), C(1), C(1) + T(1, 1), C(1) + T(2, 1)}};
}

std::vector<Positroid> positroids(int n, int k) {
  std::vector<Positroid> out;
  for (auto& w : testsupport::all_bounded_affine_perms(n, k))
    out.push_back(Positroid::from_perm(BoundedAffinePermutation(n, w)));
  return out;
}

std::vector<Rational> random_z(int len) {
  std::vector<Rational> z;
  for (int i = 0; i < len; ++i) z.push_back(q(rand_int(-9, 9), rand_int(1, 4)));
  return z;
}

void check_realization(const TropVector& p) {
  Realization R = realize(p);
  CHECK(valuation(R.point) == p);
  CHECK(is_nonnegative(R.point));
  CHECK(satisfies_three_term(R.point));
  std::vector<Rational> finite;
  for (const auto& v : p.values())
    if (v.finite()) finite.push_back(v.v);
  CHECK(Integer(R.denom) == lcm_of_denominators(finite));
  for (const auto& f : R.point.pluckers) CHECK(R.denom % f.denom() == 0);
}

}  // namespace

TEST_SUITE("realize") {
  TEST_CASE("Puiseux arithmetic") {
    PuiseuxPoly h = T(1, 1, 2);
    CHECK(h.denom() == 2);
    CHECK(h * h == T(1, 1));
    CHECK((h * h).denom() == 1);
    CHECK(PuiseuxPoly::from_terms(4, {{2, q(1)}, {6, q(3)}}) == h + T(3, 3, 2));
    CHECK((h - h).is_zero());
    CHECK((h - h).val().inf);
    CHECK((C(2) + T(-1, -1, 3)).val() == TropValue::of(q(-1, 3)));
    CHECK((C(2) + T(-1, -1, 3)).leading_coefficient() == -1);
    CHECK((C(1) + T(2, 1, 2) + T(1, 1)).str() == "1 + 2*t^(1/2) + t");
    CHECK_THROWS_AS(PuiseuxPoly::from_terms(0, {}), InputError);
  }

  TEST_CASE("the introductory curve") {
    PuiseuxPluckerPoint P = plucker_point(intro_curve());
    for (const char* one : {"12", "13", "14", "15", "23"}) CHECK(P.at(M(one)) == C(1));
    CHECK(P.at(M("24")) == C(1) + T(1, 1));
    CHECK(P.at(M("25")) == C(1) + T(2, 1));
    CHECK(P.at(M("34")) == T(1, 1));
    CHECK(P.at(M("35")) == T(2, 1));
    CHECK(P.at(M("45")) == T(1, 1));
    TropVector expect = TropVector::zeros(5, 2);
    for (const char* s : {"34", "35", "45"}) expect.set(M(s), Rational(1));
    CHECK(valuation(P) == expect);
    CHECK(is_nonnegative(P));
    CHECK(satisfies_three_term(P));
    // Torus scaling shifts valuations by the equivalence action.
    std::vector<Rational> a{q(1, 2), q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)};
    PuiseuxPluckerPoint Pa = plucker_point(torus_scale(intro_curve(), a));
    CHECK(valuation(Pa) == act(a, expect));
    CHECK(satisfies_three_term(Pa));
  }

  TEST_CASE("constant totally positive points have zero valuation") {
    for (int n = 4; n <= 6; ++n)
      for (int k = 2; k <= 3; ++k) {
        PuiseuxMatrix V(k, std::vector<PuiseuxPoly>(n));
        for (int r = 0; r < k; ++r)
          for (int j = 0; j < n; ++j) {
            long v = 1;
            for (int e = 0; e < r; ++e) v *= (j + 1);
            V[r][j] = C(v);
          }
        PuiseuxPluckerPoint P = plucker_point(V);
        CHECK(valuation(P) == TropVector::zeros(n, k));
        CHECK(is_nonnegative(P));
      }
  }

  TEST_CASE("realize examples") {
    Realization z = realize(TropVector::zeros(4, 2));
    for (const auto& f : z.point.pluckers) {
      CHECK(f.val() == TropValue::of(0));
      CHECK(f.terms().size() == 1);
    }
    CHECK(z.denom == 1);
    TropVector intro = TropVector::zeros(5, 2);
    for (const char* s : {"34", "35", "45"}) intro.set(M(s), Rational(1));
    check_realization(intro);
    TropVector half = TropVector::zeros(5, 2);
    half.set(M("34"), q(1, 2));
    check_realization(half);
    CHECK(realize(half).denom == 2);
    TropVector bad = TropVector::zeros(4, 2);
    bad.set(M("13"), Rational(1));
    CHECK_THROWS_AS(realize(bad), PreconditionError);
  }

  TEST_CASE("valuation inverts realize: every positroid, n <= 5") {
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k < n; ++k)
        for (const auto& P : positroids(n, k)) {
          int d = dim_positroid(P);
          for (int trial = 0; trial < 3; ++trial) check_realization(bridge_parametrize(P, random_z(d + 1)));
        }
  }

  TEST_CASE("valuation inverts realize: random rational vectors in (2,5), (2,6), (3,6)") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}}) {
      Positroid U = Positroid::uniform(n, k);
      for (int trial = 0; trial < 30; ++trial) check_realization(bridge_parametrize(U, random_z(dim_positroid(U) + 1)));
    }
    // Non-uniform supports in (3,6).
    auto all = positroids(6, 3);
    for (int trial = 0; trial < 30; ++trial) {
      const Positroid& P = all[rand_int(0, static_cast<long>(all.size()) - 1)];
      check_realization(bridge_parametrize(P, random_z(dim_positroid(P) + 1)));
    }
  }
}
