#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postrop/clusters.hpp"
#include "postrop/errors.hpp"
#include "postrop/laurent.hpp"
#include "postrop/polytope.hpp"
#include "postrop/tropical.hpp"

namespace postrop {

// A positive parametrization of a positroid cell modulo the torus: every
// nonzero Plücker coordinate pulled back to a Laurent polynomial with positive
// coefficients in r parameters.
struct Parametrization {
  std::string id;
  int n = 0, k = 0, r = 0;
  std::vector<Mask> masks;          // Plücker indices with a nonzero pullback (lexicographic)
  std::vector<LaurentPoly> polys;  // parallel to masks
  // Cluster parametrizations only: the cluster, its gauge-fix, and the
  // cluster members used as variables x1..xr (in this order).
  std::vector<Mask> cluster, gauge, variables;

  // Pullback of Δ_I; the zero polynomial for a non-basis.
  LaurentPoly at(Mask I) const;
  // The tropical Plücker vector Trop(Δ)(y).
  TropVector trop(const QVec& y) const;
};

// k×k minors of a k×n matrix of Laurent polynomials, each checked to have
// positive coefficients (InternalError otherwise).
Parametrization minors_parametrization(std::string id, const std::vector<std::vector<LaurentPoly>>& matrix);

Parametrization reference_36();
Parametrization reference_37();
Parametrization markparam(int n);
// Gauge entries are 1; the other cluster members are the variables; every
// other Plücker coordinate is obtained by subtraction-free propagation.
Parametrization cluster_parametrization(const Cluster& C, const std::vector<Mask>& gauge);
Parametrization cluster_parametrization(const Positroid& p);  // greedy cluster, first gauge-fix

// Accepts "3,6-reference", "3,7-reference", "2,<n>-markparam", "cluster:<n>,<k>"
// (uniform positroid with its default cluster and gauge-fix). Throws InputError.
Parametrization plucker_polynomials(const std::string& id);

Polytope newton_polytope(const LaurentPoly& f);
Polytope minkowski_sum(const std::vector<Polytope>& parts);
// The Minkowski sum of the Newton polytopes of all Plücker pullbacks.
Polytope plucker_polytope(const Parametrization& param);

// Inner facet normals of a full-dimensional polytope, primitive, sorted.
// PreconditionError (naming the affine hull) otherwise.
std::vector<IntVec> fan_rays(const Polytope& P);

// The normal fan of a Minkowski sum enumerated cone by cone: a breadth-first
// walk over the maximal cones (vertices of the sum), flipping across walls.
struct NormalFan {
  int dim = 0;
  std::vector<IntVec> vertices;  // vertices of the Minkowski sum, sorted
  std::vector<IntVec> rays;      // primitive rays of the fan, sorted
  std::vector<std::vector<int>> cone_rays;  // per vertex: indices into rays, sorted
};
NormalFan normal_fan(const std::vector<LaurentPoly>& polys);
NormalFan normal_fan(const Parametrization& param);
// The Minkowski sum as a Polytope, assembled from the fan (its rays are the
// facet normals) without a separate hull computation.
Polytope polytope_from_fan(const NormalFan& F);

// Which side of each three-term relation attains the minimum, over all_frames(n,k).
enum class Side { Left, Right, Both };
using SignVector = std::vector<Side>;
SignVector plucker_sign_vector(const TropVector& p);

enum class FanStructure { Secondary, Plucker, Positive };
bool same_cone(const TropVector& p, const TropVector& q, FanStructure s);

// Trop(u_ij) = p_{i,j+1} + p_{i+1,j} - p_{ij} - p_{i+1,j+1} for a diagonal
// (i,j) of the n-gon (indices modulo n).
TropValue u_trop(const TropVector& p, int i, int j);
// The Laurent monomial u_ij as an exponent map.
std::map<Mask, int> u_exponents(int n, int i, int j);

// A Plücker monomial whose torus weight sum_I a_I e_I is nonzero.
struct TInvarianceError : InputError {
  TInvarianceError(const std::string& what, IntVec w) : InputError(what), weight(std::move(w)) {}
  IntVec weight;
};

// Whether the Plücker monomial prod Δ_I^{a_I} is nearly convergent:
// T-invariance (InputError naming the weight otherwise) and, pulled back
// through param, N[numerator] ⊆ N[denominator].
bool nearly_convergent(const std::map<Mask, int>& a, const Parametrization& param);

}  // namespace postrop
