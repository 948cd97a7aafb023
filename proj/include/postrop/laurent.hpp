#pragma once

#include <string>
#include <utility>
#include <vector>

#include "postrop/linalg.hpp"
#include "postrop/rational.hpp"
#include "postrop/tropical.hpp"

namespace postrop {

// Exact multivariate Laurent polynomial in variables x1..xr with rational
// coefficients. Terms are kept sorted by exponent vector (lexicographic,
// ascending) with nonzero coefficients. Intermediate results of minor
// expansions may carry negative coefficients; all_positive() checks the
// invariant required of pulled-back Plücker coordinates.
class LaurentPoly {
 public:
  using Exp = std::vector<int>;
  using Term = std::pair<Exp, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly variable(int nvars, int i);  // x_{i+1}, i zero-based
  static LaurentPoly monomial(int nvars, Exp e, const Rational& c = 1);
  // Parses sums of products such as "1+x1+x1*x2", "-1-x1", "2*x1^-1*x3",
  // "x1^2/3" is not allowed (integer exponents only). Throws InputError.
  static LaurentPoly parse(const std::string& text, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool all_positive() const;
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  // Exact quotient; throws PreconditionError if o does not divide *this or o == 0.
  LaurentPoly divide_exact(const LaurentPoly& o) const;
  LaurentPoly pow(int e) const;  // e >= 0, or e < 0 for monomials

  // Value at a point with nonzero coordinates.
  Rational eval(const QVec& x) const;
  // min over terms of e·y (the tropicalization); infinity for the zero polynomial.
  TropValue trop(const QVec& y) const;
  // Exponent vectors as integer points (the Newton polytope's generators).
  std::vector<IntVec> exponents() const;

  std::string str() const;  // e.g. "1 + x1 + x1*x2"

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  static LaurentPoly from_terms(int nvars, std::vector<Term> t);  // sorts and merges
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Semifield of subtraction-free expressions, for evaluate_plan.
struct LaurentSemifield {
  int nvars = 0;
  using T = LaurentPoly;
  T zero() const { return LaurentPoly(nvars); }
  T add(const T& a, const T& b) const { return a + b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T div(const T& a, const T& b) const;
};

}  // namespace postrop
