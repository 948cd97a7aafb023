#include "postrop/realize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "postrop/errors.hpp"

namespace postrop {

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw OverflowError("Puiseux exponent out of range");
  return z.get_si();
}

}  // namespace

void PuiseuxPoly::reduce() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
  if (terms_.empty()) {
    denom_ = 1;
    return;
  }
  long g = denom_;
  for (const auto& [e, c] : terms_) g = std::gcd(g, std::abs(e));
  if (g > 1) {
    std::map<long, Rational> t;
    for (const auto& [e, c] : terms_) t.emplace(e / g, c);
    terms_ = std::move(t);
    denom_ /= g;
  }
}

PuiseuxPoly PuiseuxPoly::rescaled(long to) const {
  if (to % denom_ != 0) throw InternalError("Puiseux rescale to a non-multiple denominator");
  const long f = to / denom_;
  PuiseuxPoly r;
  r.denom_ = to;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * f, c);
  return r;
}

PuiseuxPoly PuiseuxPoly::constant(const Rational& c) { return monomial(c, 0); }

PuiseuxPoly PuiseuxPoly::monomial(const Rational& c, const Rational& exponent) {
  PuiseuxPoly r;
  if (c == 0) return r;
  r.denom_ = to_long(exponent.get_den());
  r.terms_.emplace(to_long(exponent.get_num()), c);
  r.reduce();
  return r;
}

PuiseuxPoly PuiseuxPoly::from_terms(long denom, const std::map<long, Rational>& terms) {
  if (denom <= 0) throw InputError("Puiseux denominator must be positive");
  PuiseuxPoly r;
  r.denom_ = denom;
  r.terms_ = terms;
  r.reduce();
  return r;
}

TropValue PuiseuxPoly::val() const {
  if (terms_.empty()) return TropValue::infinity();
  Rational e(static_cast<long>(terms_.begin()->first), static_cast<long>(denom_));
  e.canonicalize();
  return TropValue::of(e);
}

Rational PuiseuxPoly::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

PuiseuxPoly PuiseuxPoly::operator+(const PuiseuxPoly& o) const {
  long L = std::lcm(denom_, o.denom_);
  PuiseuxPoly r = rescaled(L);
  for (const auto& [e, c] : o.rescaled(L).terms_) r.terms_[e] += c;
  r.reduce();
  return r;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

PuiseuxPoly PuiseuxPoly::operator-(const PuiseuxPoly& o) const { return *this + (-o); }

PuiseuxPoly PuiseuxPoly::operator*(const PuiseuxPoly& o) const {
  if (is_zero() || o.is_zero()) return PuiseuxPoly();
  long L = std::lcm(denom_, o.denom_);
  PuiseuxPoly a = rescaled(L), b = o.rescaled(L), r;
  r.denom_ = L;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) r.terms_[e1 + e2] += c1 * c2;
  r.reduce();
  return r;
}

std::string PuiseuxPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    Rational ex(static_cast<long>(e), static_cast<long>(denom_));
    ex.canonicalize();
    if (ex == 0) {
      os << to_string(a);
      continue;
    }
    if (a != 1) os << to_string(a) << "*";
    os << "t";
    if (ex != 1) {
      if (ex.get_den() == 1 && ex > 0)
        os << "^" << to_string(ex);
      else
        os << "^(" << to_string(ex) << ")";
    }
  }
  return os.str();
}

const PuiseuxPoly& PuiseuxPluckerPoint::at(Mask I) const {
  int idx = subset_index(n, k).index(I);
  if (idx < 0) throw InputError("not a k-subset of [n]");
  return pluckers[idx];
}

PuiseuxPluckerPoint plucker_point(const PuiseuxMatrix& V) {
  PuiseuxPluckerPoint P;
  P.k = static_cast<int>(V.size());
  if (P.k == 0) throw InputError("empty matrix");
  P.n = static_cast<int>(V[0].size());
  for (const auto& row : V)
    if (static_cast<int>(row.size()) != P.n) throw InputError("ragged matrix");
  if (P.k > 6) throw InputError("minor expansion supports k <= 6");
  std::vector<int> perm(P.k);
  for (Mask I : subset_index(P.n, P.k).masks()) {
    std::vector<int> cols = mask_elements(I);
    std::iota(perm.begin(), perm.end(), 0);
    PuiseuxPoly det;
    do {
      int inv = 0;
      for (int a = 0; a < P.k; ++a)
        for (int b = a + 1; b < P.k; ++b) inv += perm[a] > perm[b];
      PuiseuxPoly term = PuiseuxPoly::constant(inv % 2 ? -1 : 1);
      for (int r = 0; r < P.k && !term.is_zero(); ++r) term = term * V[r][cols[perm[r]] - 1];
      det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    P.pluckers.push_back(std::move(det));
  }
  return P;
}

TropVector valuation(const PuiseuxPluckerPoint& v) {
  TropVector p(v.n, v.k);
  const auto& masks = subset_index(v.n, v.k).masks();
  for (std::size_t i = 0; i < masks.size(); ++i) p.set(masks[i], v.pluckers[i].val());
  return p;
}

bool is_nonnegative(const PuiseuxPluckerPoint& v) {
  return std::all_of(v.pluckers.begin(), v.pluckers.end(),
                     [](const PuiseuxPoly& f) { return f.is_zero() || f.leading_coefficient() > 0; });
}

bool satisfies_three_term(const PuiseuxPluckerPoint& v) {
  for (const auto& f : all_frames(v.n, v.k)) {
    auto D = [&](int x, int y) -> const PuiseuxPoly& { return v.at(f.with(x, y)); };
    if (D(f.a, f.c) * D(f.b, f.d) != D(f.a, f.b) * D(f.c, f.d) + D(f.a, f.d) * D(f.b, f.c)) return false;
  }
  return true;
}

PuiseuxMatrix torus_scale(const PuiseuxMatrix& V, const std::vector<Rational>& a) {
  PuiseuxMatrix W = V;
  for (auto& row : W) {
    if (row.size() != a.size()) throw InputError("torus vector has wrong length");
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] * PuiseuxPoly::monomial(1, a[j]);
  }
  return W;
}

Realization realize(const TropVector& p) {
  if (!check_positive_tropical(p)) throw PreconditionError("realize: input is not a positive tropical Plücker vector");
  const int n = p.n(), k = p.k();
  std::vector<Rational> finite;
  for (const auto& v : p.values())
    if (v.finite()) finite.push_back(v.v);
  Realization R;
  R.denom = to_long(lcm_of_denominators(finite));
  const std::vector<BridgeMove> moves = bridge_reduce(p);
  const BridgeMove& base = moves.back();

  R.matrix.assign(k, std::vector<PuiseuxPoly>(n));
  {
    std::vector<int> b = mask_elements(base.base);
    for (int r = 0; r < k; ++r) R.matrix[r][b[r] - 1] = PuiseuxPoly::constant(1);
    R.matrix[0][b[0] - 1] = PuiseuxPoly::monomial(1, base.a);
  }
  TropVector cur(n, k);
  cur.set(base.base, base.a);
  for (auto it = moves.rbegin() + 1; it != moves.rend(); ++it) {
    if (it->kind != BridgeMove::Kind::Bridge) continue;  // embeddings are the identity in full coordinates
    const int i = it->i, j = it->j;
    // Adding c·(column i) to column j changes Δ_I (j in I, i not in I) by
    // c·(-1)^m·Δ_{I-j+i}, where m counts elements of I strictly between i and
    // j. Choose the sign of c so that every contribution is positive.
    const int lo = std::min(i, j), hi = std::max(i, j);
    Mask between = 0;
    for (int x = lo + 1; x < hi; ++x) between |= bit(x);
    int parity = -1;
    for (Mask I : subset_index(n, k).masks()) {
      if (!(I & bit(j)) || (I & bit(i))) continue;
      if (!cur.at((I & ~bit(j)) | bit(i)).finite()) continue;
      int m = popcount(I & between) % 2;
      if (parity >= 0 && parity != m) throw InternalError("realize: inconsistent bridge sign");
      parity = m;
    }
    PuiseuxPoly c = PuiseuxPoly::monomial(parity == 1 ? -1 : 1, it->a);
    for (int r = 0; r < k; ++r) R.matrix[r][j - 1] = R.matrix[r][j - 1] + c * R.matrix[r][i - 1];
    cur = tropical_bridge(cur, i, j, it->a);
  }
  R.point = plucker_point(R.matrix);
  if (valuation(R.point) != p) throw InternalError("realize: valuation of the constructed point differs from the input");
  if (!is_nonnegative(R.point)) throw InternalError("realize: a Plücker coordinate has a negative leading coefficient");
  if (!satisfies_three_term(R.point)) throw InternalError("realize: three-term relations fail");
  for (const auto& f : R.point.pluckers)
    if (R.denom % f.denom() != 0) throw InternalError("realize: exponent denominator exceeds the input's");
  return R;
}

}  // namespace postrop
