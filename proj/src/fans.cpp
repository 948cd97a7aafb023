#include "postrop/fans.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "postrop/dd.hpp"
#include "postrop/errors.hpp"
#include "postrop/subdivision.hpp"

namespace postrop {

namespace {

std::string mask_name(Mask m, int n) { return SubsetK(n, m).str(); }

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

std::vector<std::vector<LaurentPoly>> parse_matrix(const std::vector<std::vector<std::string>>& rows, int r) {
  std::vector<std::vector<LaurentPoly>> m;
  for (const auto& row : rows) {
    m.emplace_back();
    for (const auto& s : row) m.back().push_back(LaurentPoly::parse(s, r));
  }
  return m;
}

}  // namespace

LaurentPoly Parametrization::at(Mask I) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), I, lex_less);
  if (it == masks.end() || *it != I) return LaurentPoly(r);
  return polys[it - masks.begin()];
}

TropVector Parametrization::trop(const QVec& y) const {
  if (static_cast<int>(y.size()) != r) throw InputError("point has wrong dimension for the parametrization");
  TropVector p(n, k);
  for (std::size_t i = 0; i < masks.size(); ++i) p.set(masks[i], polys[i].trop(y));
  return p;
}

Parametrization minors_parametrization(std::string id, const std::vector<std::vector<LaurentPoly>>& matrix) {
  Parametrization P;
  P.id = std::move(id);
  P.k = static_cast<int>(matrix.size());
  if (P.k == 0) throw InputError("empty parametrizing matrix");
  P.n = static_cast<int>(matrix[0].size());
  P.r = matrix[0][0].nvars();
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != P.n) throw InputError("ragged parametrizing matrix");
  std::vector<int> perm(P.k);
  for (Mask I : subset_index(P.n, P.k).masks()) {
    std::vector<int> cols = mask_elements(I);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly det(P.r);
    do {
      int inversions = 0;
      for (int a = 0; a < P.k; ++a)
        for (int b = a + 1; b < P.k; ++b) inversions += perm[a] > perm[b];
      LaurentPoly term = LaurentPoly::constant(P.r, inversions % 2 ? -1 : 1);
      for (int row = 0; row < P.k && !term.is_zero(); ++row) term = term * matrix[row][cols[perm[row]] - 1];
      det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (det.is_zero()) continue;
    if (!det.all_positive())
      throw InternalError("minor " + mask_name(I, P.n) + " of parametrization " + P.id +
                          " has a negative coefficient: " + det.str());
    P.masks.push_back(I);
    P.polys.push_back(std::move(det));
  }
  return P;
}

Parametrization reference_36() {
  return minors_parametrization(
      "3,6-reference",
      parse_matrix({{"0", "0", "-1", "-1", "-1", "-1"},
                    {"0", "1", "0", "-1", "-1-x1", "-1-x1-x1*x3"},
                    {"1", "0", "0", "1", "1+x1+x1*x2", "1+x1+x1*x2+x1*x2*x3+x1*x3+x1*x2*x3*x4"}},
                   4));
}

Parametrization reference_37() {
  // Listed column by column.
  std::vector<std::vector<std::string>> cols = {
      {"0", "0", "1"},
      {"0", "1", "0"},
      {"-1", "0", "0"},
      {"-1", "-1", "1"},
      {"-1", "-1-x1", "1+x1+x1*x2"},
      {"-1", "-1-x1-x1*x3", "1+x1+x1*x2+x1*x3+x1*x2*x3+x1*x2*x3*x4"},
      {"-1", "-1-x1-x1*x3-x1*x3*x5",
       "1+x1+x1*x2+x1*x3+x1*x2*x3+x1*x2*x3*x4+x1*x3*x5+x1*x2*x3*x5+x1*x2*x3*x4*x5+x1*x2*x3*x4*x5*x6"}};
  std::vector<std::vector<std::string>> rows(3);
  for (const auto& c : cols)
    for (int i = 0; i < 3; ++i) rows[i].push_back(c[i]);
  return minors_parametrization("3,7-reference", parse_matrix(rows, 6));
}

Parametrization markparam(int n) {
  if (n < 4 || n > 30) throw InputError("markparam requires 4 <= n <= 30");
  const int r = n - 3;
  std::vector<std::vector<LaurentPoly>> m(2);
  m[0].push_back(LaurentPoly(r));
  m[1].push_back(LaurentPoly::constant(r, -1));
  m[0].push_back(LaurentPoly::constant(r, 1));
  m[1].push_back(LaurentPoly(r));
  LaurentPoly partial = LaurentPoly::constant(r, 1), mono = LaurentPoly::constant(r, 1);
  for (int j = 3; j <= n; ++j) {
    m[0].push_back(LaurentPoly::constant(r, 1));
    if (j >= 4) {
      mono = mono * LaurentPoly::variable(r, j - 4);
      partial = partial + mono;
    }
    m[1].push_back(partial);
  }
  return minors_parametrization("2," + std::to_string(n) + "-markparam", m);
}

Parametrization cluster_parametrization(const Cluster& C, const std::vector<Mask>& gauge) {
  const Positroid& M = C.positroid;
  Parametrization P;
  P.n = M.n();
  P.k = M.k();
  P.cluster = C.members;
  P.gauge = gauge;
  std::sort(P.gauge.begin(), P.gauge.end(), lex_less);
  for (Mask g : P.gauge)
    if (!C.contains(g)) throw InputError("gauge-fix entry " + mask_name(g, P.n) + " is not a cluster member");
  for (Mask m : C.members)
    if (!std::binary_search(P.gauge.begin(), P.gauge.end(), m, lex_less)) P.variables.push_back(m);
  P.r = static_cast<int>(P.variables.size());
  P.id = "cluster";
  const PropagationPlan& plan = cached_plan(M, C.members);
  std::vector<LaurentPoly> inputs;
  int var = 0;
  for (Mask m : plan.inputs) {
    if (std::binary_search(P.gauge.begin(), P.gauge.end(), m, lex_less))
      inputs.push_back(LaurentPoly::constant(P.r, 1));
    else
      inputs.push_back(LaurentPoly::variable(P.r, var++));
  }
  std::vector<LaurentPoly> vals = evaluate_plan(plan, inputs, LaurentSemifield{P.r});
  const SubsetIndex& idx = subset_index(P.n, P.k);
  for (int i : plan.basis_index) {
    if (vals[i].is_zero()) throw InternalError("propagation left basis " + mask_name(idx.mask(i), P.n) + " undetermined");
    if (!vals[i].all_positive()) throw InternalError("pullback of a Plücker coordinate is not positive");
    P.masks.push_back(idx.mask(i));
    P.polys.push_back(std::move(vals[i]));
  }
  return P;
}

Parametrization cluster_parametrization(const Positroid& p) {
  GaugeFix g = find_gauge_fix(p);
  return cluster_parametrization(g.cluster, g.members);
}

Parametrization plucker_polynomials(const std::string& id) {
  if (id == "3,6-reference") return reference_36();
  if (id == "3,7-reference") return reference_37();
  auto parse_pair = [&](const std::string& s, int& a, int& b) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw InputError("unknown parametrization '" + id + "'");
    try {
      std::size_t used1 = 0, used2 = 0;
      a = std::stoi(s.substr(0, comma), &used1);
      b = std::stoi(s.substr(comma + 1), &used2);
      if (used1 != comma || used2 != s.size() - comma - 1) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("unknown parametrization '" + id + "'");
    }
  };
  const std::string mark = "-markparam";
  if (id.size() > mark.size() && id.compare(id.size() - mark.size(), mark.size(), mark) == 0) {
    int k, n;
    parse_pair(id.substr(0, id.size() - mark.size()), k, n);
    if (k != 2) throw InputError("markparam is defined for k = 2 only");
    return markparam(n);
  }
  if (id.rfind("cluster:", 0) == 0) {
    int n, k;
    parse_pair(id.substr(8), n, k);
    if (k < 1 || k >= n || n > 12) throw InputError("cluster parametrization requires 1 <= k < n <= 12");
    Parametrization P = cluster_parametrization(Positroid::uniform(n, k));
    P.id = id;
    return P;
  }
  throw InputError("unknown parametrization '" + id + "'");
}

Polytope newton_polytope(const LaurentPoly& f) {
  if (f.is_zero()) throw PreconditionError("the zero polynomial has no Newton polytope");
  return convex_hull(f.exponents());
}

Polytope minkowski_sum(const std::vector<Polytope>& parts) {
  if (parts.empty()) throw InputError("empty Minkowski sum");
  std::vector<IntVec> cur = parts[0].vertices;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::vector<IntVec> cand;
    cand.reserve(cur.size() * parts[i].vertices.size());
    for (const auto& u : cur)
      for (const auto& v : parts[i].vertices) cand.push_back(add(u, v));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    cur = convex_hull(cand).vertices;
  }
  return convex_hull(cur);
}

Polytope plucker_polytope(const Parametrization& param) {
  std::vector<Polytope> parts;
  for (const auto& f : param.polys)
    if (!f.is_monomial()) parts.push_back(newton_polytope(f));
  if (parts.empty()) return convex_hull({IntVec(param.r, 0)});
  return minkowski_sum(parts);
}

std::vector<IntVec> fan_rays(const Polytope& P) {
  if (!P.full_dimensional()) {
    std::ostringstream os;
    os << "polytope of dimension " << P.dim << " in R^" << P.ambient << " is not full-dimensional; affine hull:";
    for (std::size_t i = 0; i < P.eq_normals.size(); ++i) {
      os << " (";
      for (std::size_t j = 0; j < P.eq_normals[i].size(); ++j) os << (j ? "," : "") << P.eq_normals[i][j];
      os << ")·x = " << P.eq_rhs[i] << ";";
    }
    throw PreconditionError(os.str());
  }
  std::vector<IntVec> rays = P.facet_normals;
  std::sort(rays.begin(), rays.end());
  return rays;
}

NormalFan normal_fan(const std::vector<LaurentPoly>& polys) {
  if (polys.empty()) throw InputError("no polynomials");
  const int r = polys[0].nvars();
  std::vector<std::vector<IntVec>> verts;
  std::vector<IntVec> all_dirs;
  for (const auto& f : polys) {
    if (f.nvars() != r) throw InputError("polynomials in different variable sets");
    if (f.is_zero()) throw PreconditionError("the zero polynomial has no Newton polytope");
    if (f.is_monomial()) continue;
    verts.push_back(newton_polytope(f).vertices);
    for (const auto& v : verts.back()) all_dirs.push_back(sub(v, verts.back()[0]));
  }
  if (rank(all_dirs, r) != r) throw PreconditionError("Minkowski sum is not full-dimensional");

  // argmin over the vertices of summand j in direction y, ties broken by -n
  // and then lexicographically (an infinitesimal generic perturbation).
  auto argmin = [&](std::size_t j, const IntVec& y, const IntVec& nrm) {
    int best = 0;
    long long by = dot(verts[j][0], y), bn = -dot(verts[j][0], nrm);
    for (std::size_t e = 1; e < verts[j].size(); ++e) {
      long long ey = dot(verts[j][e], y), en = -dot(verts[j][e], nrm);
      if (ey < by || (ey == by && (en < bn || (en == bn && verts[j][e] < verts[j][best])))) {
        best = static_cast<int>(e);
        by = ey;
        bn = en;
      }
    }
    return best;
  };
  auto vertex_of = [&](const std::vector<int>& choice) {
    IntVec v(r, 0);
    for (std::size_t j = 0; j < verts.size(); ++j) v = add(v, verts[j][choice[j]]);
    return v;
  };

  std::map<IntVec, int> vertex_id;
  std::vector<std::vector<int>> choices;
  std::vector<IntVec> vertex_list;
  std::map<IntVec, int> ray_id;
  std::vector<std::vector<int>> cone_rays;
  std::deque<int> queue;
  auto visit = [&](std::vector<int> choice) {
    IntVec v = vertex_of(choice);
    auto [it, fresh] = vertex_id.emplace(v, static_cast<int>(vertex_list.size()));
    if (fresh) {
      vertex_list.push_back(v);
      choices.push_back(std::move(choice));
      queue.push_back(it->second);
    }
  };
  {
    std::vector<int> start(verts.size());
    const IntVec zero(r, 0);
    for (std::size_t j = 0; j < verts.size(); ++j) start[j] = argmin(j, zero, zero);
    visit(start);
  }
  while (!queue.empty()) {
    int vi = queue.front();
    queue.pop_front();
    const std::vector<int> choice = choices[vi];
    std::vector<IntVec> rows;
    for (std::size_t j = 0; j < verts.size(); ++j)
      for (std::size_t e = 0; e < verts[j].size(); ++e)
        if (static_cast<int>(e) != choice[j]) {
          IntVec d = sub(verts[j][e], verts[j][choice[j]]);
          make_primitive(d);
          rows.push_back(std::move(d));
        }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    ConeRays cr = extreme_rays(rows, r);
    std::vector<int> ids;
    for (const auto& ray : cr.rays) ids.push_back(ray_id.emplace(ray, static_cast<int>(ray_id.size())).first->second);
    if (static_cast<int>(cone_rays.size()) <= vi) cone_rays.resize(vi + 1);
    cone_rays[vi] = ids;
    // Walls: rows whose tight rays span a hyperplane.
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<int> tight;
      for (std::size_t q = 0; q < cr.rays.size(); ++q)
        if (cr.zero_sets[q].test(i)) tight.push_back(static_cast<int>(q));
      if (static_cast<int>(tight.size()) < r - 1 || seen.count(tight)) continue;
      std::vector<IntVec> tr;
      for (int q : tight) tr.push_back(cr.rays[q]);
      if (rank(tr, r) != r - 1) continue;
      seen.insert(tight);
      IntVec y(r, 0);
      for (const auto& t : tr) y = add(y, t);
      std::vector<int> next(verts.size());
      for (std::size_t j = 0; j < verts.size(); ++j) next[j] = argmin(j, y, rows[i]);
      visit(std::move(next));
    }
  }

  NormalFan F;
  F.dim = r;
  std::vector<int> ray_order(ray_id.size());
  for (const auto& [ray, id] : ray_id) F.rays.push_back(ray);
  {
    int pos = 0;
    for (const auto& [ray, id] : ray_id) ray_order[id] = pos++;
  }
  for (const auto& [v, id] : vertex_id) {
    F.vertices.push_back(v);
    std::vector<int> c;
    for (int q : cone_rays[id]) c.push_back(ray_order[q]);
    std::sort(c.begin(), c.end());
    F.cone_rays.push_back(std::move(c));
  }
  return F;
}

NormalFan normal_fan(const Parametrization& param) { return normal_fan(param.polys); }

Polytope polytope_from_fan(const NormalFan& F) {
  Polytope P;
  P.ambient = P.dim = F.dim;
  P.vertices = F.vertices;
  for (const auto& n : F.rays) {
    long long best = dot(n, F.vertices[0]);
    for (const auto& v : F.vertices) best = std::min(best, dot(n, v));
    std::vector<int> on;
    for (std::size_t i = 0; i < F.vertices.size(); ++i)
      if (dot(n, F.vertices[i]) == best) on.push_back(static_cast<int>(i));
    P.facet_normals.push_back(n);
    P.facet_offsets.push_back(best);
    P.facet_vertices.push_back(std::move(on));
  }
  return P;
}

SignVector plucker_sign_vector(const TropVector& p) {
  SignVector s;
  const auto& frames = all_frames(p.n(), p.k());
  s.reserve(frames.size());
  for (const auto& f : frames) {
    TropValue L = p.at(f.with(f.a, f.b)) + p.at(f.with(f.c, f.d));
    TropValue R = p.at(f.with(f.a, f.d)) + p.at(f.with(f.b, f.c));
    s.push_back(L < R ? Side::Left : R < L ? Side::Right : Side::Both);
  }
  return s;
}

namespace {

// Values u + ε·w with ε a positive infinitesimal, ordered lexicographically.
struct Germ {
  bool inf = true;
  Rational a = 0, b = 0;
};

struct GermSemifield {
  using T = Germ;
  T zero() const { return Germ{}; }
  T add(const T& x, const T& y) const {
    if (x.inf) return y;
    if (y.inf) return x;
    if (x.a != y.a) return x.a < y.a ? x : y;
    return x.b <= y.b ? x : y;
  }
  T mul(const T& x, const T& y) const {
    if (x.inf || y.inf) return Germ{};
    return Germ{false, x.a + y.a, x.b + y.b};
  }
  T div(const T& x, const T& y) const {
    if (y.inf) throw InternalError("division by the tropical zero");
    if (x.inf) return Germ{};
    return Germ{false, x.a - y.a, x.b - y.b};
  }
};

}  // namespace

bool same_cone(const TropVector& p, const TropVector& q, FanStructure s) {
  if (p.n() != q.n() || p.k() != q.k()) throw InputError("vectors of different shapes");
  if (p.finite_support() != q.finite_support()) throw InputError("vectors have different supports");
  switch (s) {
    case FanStructure::Secondary:
      return regular_subdivision(p).maximal_faces == regular_subdivision(q).maximal_faces;
    case FanStructure::Plucker:
      return plucker_sign_vector(p) == plucker_sign_vector(q);
    case FanStructure::Positive: {
      // Every coordinate of propagate is the tropicalization of a Laurent
      // polynomial, hence concave; p and q share a relatively open cone iff all
      // coordinates are affine on a slight extension of the segment [u, v].
      Positroid M = support(p);
      Cluster C = extend_to_cluster(M, {});
      const PropagationPlan& plan = cached_plan(M, C.members);
      std::vector<Rational> u = restrict_to(p, plan.inputs), v = restrict_to(q, plan.inputs);
      std::vector<Germ> lo, hi, mid;
      for (std::size_t i = 0; i < u.size(); ++i) {
        Rational w = v[i] - u[i];
        lo.push_back(Germ{false, u[i], -w});
        hi.push_back(Germ{false, v[i], w});
        mid.push_back(Germ{false, (u[i] + v[i]) / 2, 0});
      }
      GermSemifield G;
      auto A = evaluate_plan(plan, lo, G), B = evaluate_plan(plan, hi, G), Mv = evaluate_plan(plan, mid, G);
      for (int J : plan.basis_index)
        if (A[J].a + B[J].a != 2 * Mv[J].a || A[J].b + B[J].b != 2 * Mv[J].b) return false;
      return true;
    }
  }
  return false;
}

TropValue u_trop(const TropVector& p, int i, int j) {
  if (p.k() != 2) throw InputError("u_ij is defined for k = 2");
  Rational total = 0;
  for (const auto& [mask, e] : u_exponents(p.n(), i, j)) {
    const TropValue& x = p.at(mask);
    if (x.inf) return TropValue::infinity();
    total += x.v * e;
  }
  return TropValue::of(total);
}

std::map<Mask, int> u_exponents(int n, int i, int j) {
  auto wrap = [n](int x) { return (x - 1) % n + 1; };
  if (i < 1 || j < 1 || i > n || j > n) throw InputError("diagonal endpoints out of range");
  int a = std::min(i, j), b = std::max(i, j);
  if (b - a < 2 || (a == 1 && b == n)) throw InputError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a diagonal");
  std::map<Mask, int> m;
  m[bit(a) | bit(wrap(b + 1))] += 1;
  m[bit(a + 1) | bit(b)] += 1;
  m[bit(a) | bit(b)] -= 1;
  m[bit(a + 1) | bit(wrap(b + 1))] -= 1;
  return m;
}

bool nearly_convergent(const std::map<Mask, int>& a, const Parametrization& param) {
  const int n = param.n;
  IntVec weight(n, 0);
  for (const auto& [mask, e] : a) {
    if (popcount(mask) != param.k || mask > full_mask(n)) throw InputError("exponent key is not a k-subset of [n]");
    for (int x : mask_elements(mask)) weight[x - 1] += e;
  }
  if (std::any_of(weight.begin(), weight.end(), [](long long w) { return w != 0; })) {
    std::ostringstream os;
    os << "monomial is not T-invariant: weight (";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << weight[i];
    os << ") != 0";
    throw TInvarianceError(os.str(), weight);
  }
  std::vector<Polytope> num, den;
  for (const auto& [mask, e] : a) {
    if (e == 0) continue;
    LaurentPoly f = param.at(mask);
    if (f.is_zero()) throw InputError("Δ_" + mask_name(mask, n) + " vanishes on the parametrized cell");
    Polytope N = newton_polytope(f);
    for (int t = 0; t < std::abs(e); ++t) (e > 0 ? num : den).push_back(N);
  }
  const IntVec origin(param.r, 0);
  Polytope PN = num.empty() ? convex_hull({origin}) : minkowski_sum(num);
  Polytope PD = den.empty() ? convex_hull({origin}) : minkowski_sum(den);
  for (const auto& v : PN.vertices)
    if (!PD.contains(v)) return false;
  return true;
}

}  // namespace postrop
