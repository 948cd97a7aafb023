#pragma once

#include <map>
#include <string>
#include <vector>

#include "postrop/rational.hpp"
#include "postrop/tropical.hpp"

namespace postrop {

// A polynomial in t^{1/N}: sum of c_e t^{e/N} over finitely many integers e
// (negative e allowed). N is kept minimal (gcd-reduced); the zero polynomial
// has N = 1 and no terms.
class PuiseuxPoly {
 public:
  PuiseuxPoly() = default;
  static PuiseuxPoly constant(const Rational& c);
  // c · t^{exponent}
  static PuiseuxPoly monomial(const Rational& c, const Rational& exponent);
  // From an explicit denominator and numerator→coefficient map (reduced on construction).
  static PuiseuxPoly from_terms(long denom, const std::map<long, Rational>& terms);

  long denom() const { return denom_; }
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Lowest exponent; infinity for zero.
  TropValue val() const;
  // Coefficient of the lowest term; 0 for zero.
  Rational leading_coefficient() const;

  PuiseuxPoly operator+(const PuiseuxPoly& o) const;
  PuiseuxPoly operator-(const PuiseuxPoly& o) const;
  PuiseuxPoly operator-() const;
  PuiseuxPoly operator*(const PuiseuxPoly& o) const;

  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return a.denom_ == b.denom_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

  std::string str() const;  // e.g. "1 + 2*t^(1/2) + t"

 private:
  void reduce();
  PuiseuxPoly rescaled(long to) const;  // same value over denominator `to` (a multiple of denom_)
  long denom_ = 1;
  std::map<long, Rational> terms_;
};

using PuiseuxMatrix = std::vector<std::vector<PuiseuxPoly>>;  // k rows, n columns

// Plücker coordinates over the Puiseux polynomials, in lexicographic subset order.
struct PuiseuxPluckerPoint {
  int n = 0, k = 0;
  std::vector<PuiseuxPoly> pluckers;  // indexed by subset_index(n, k)
  const PuiseuxPoly& at(Mask I) const;
};

// k×k minors of a k×n matrix.
PuiseuxPluckerPoint plucker_point(const PuiseuxMatrix& V);

TropVector valuation(const PuiseuxPluckerPoint& v);
// Every nonzero coordinate has a positive leading coefficient.
bool is_nonnegative(const PuiseuxPluckerPoint& v);
// Δ_Sac Δ_Sbd = Δ_Sab Δ_Scd + Δ_Sad Δ_Sbc as exact identities on every frame.
bool satisfies_three_term(const PuiseuxPluckerPoint& v);
// V · diag(t^{a_1}, ..., t^{a_n}).
PuiseuxMatrix torus_scale(const PuiseuxMatrix& V, const std::vector<Rational>& a);

struct Realization {
  PuiseuxMatrix matrix;
  PuiseuxPluckerPoint point;
  long denom = 1;  // lcm of the denominators of the input entries
};

// A Puiseux point of the nonnegative Grassmannian with valuation p, built by
// replaying the bridge reduction of p as column operations with coefficients
// ±t^{a}. Requires check_positive_tropical(p) (PreconditionError otherwise).
// The result is verified (valuation, positivity, three-term identities,
// denominators dividing `denom`); a failure raises InternalError.
Realization realize(const TropVector& p);

}  // namespace postrop
