#include "postrop/dd.hpp"

#include <algorithm>
#include <numeric>

#include "postrop/errors.hpp"

namespace postrop {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Int64Arith {
  using Z = long long;
  using S = i128;
  static S dot(const IntVec& a, const std::vector<Z>& r) {
    S acc = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (a[j] == 0 || r[j] == 0) continue;
      S prod = static_cast<S>(a[j]) * r[j];
      if (__builtin_add_overflow(acc, prod, &acc)) throw OverflowError("dd dot");
    }
    return acc;
  }
  static int sign(S s) { return s > 0 ? 1 : (s < 0 ? -1 : 0); }
  // sp > 0 > sm; returns primitive sp*m - sm*p.
  static std::vector<Z> combine(S sp, const std::vector<Z>& m, S sm, const std::vector<Z>& p) {
    S g = gcd128(sp, sm);
    S a = sp / g, b = -sm / g;
    std::vector<S> v(m.size());
    S gg = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      S x, y;
      if (__builtin_mul_overflow(a, static_cast<S>(m[j]), &x)) throw OverflowError("dd combine");
      if (__builtin_mul_overflow(b, static_cast<S>(p[j]), &y)) throw OverflowError("dd combine");
      if (__builtin_add_overflow(x, y, &v[j])) throw OverflowError("dd combine");
      gg = gcd128(gg, v[j]);
    }
    std::vector<Z> out(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
      S q = gg > 1 ? v[j] / gg : v[j];
      if (q > static_cast<S>(INT64_MAX) || q < static_cast<S>(INT64_MIN)) throw OverflowError("dd ray");
      out[j] = static_cast<Z>(q);
    }
    return out;
  }
  static std::vector<Z> from_integer(const std::vector<Integer>& v) { return to_intvec_checked(v); }
  static IntVec to_intvec(const std::vector<Z>& v) { return v; }
};

struct BigArith {
  using Z = Integer;
  using S = Integer;
  static S dot(const IntVec& a, const std::vector<Z>& r) {
    S acc = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (a[j] != 0) acc += Integer(static_cast<long>(a[j])) * r[j];
    return acc;
  }
  static int sign(const S& s) { return sgn(s); }
  static std::vector<Z> combine(const S& sp, const std::vector<Z>& m, const S& sm, const std::vector<Z>& p) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), sp.get_mpz_t(), sm.get_mpz_t());
    Integer a = sp / g, b = -sm / g;
    std::vector<Z> v(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) v[j] = a * m[j] + b * p[j];
    make_primitive(v);
    return v;
  }
  static std::vector<Z> from_integer(const std::vector<Integer>& v) { return v; }
  static IntVec to_intvec(const std::vector<Z>& v) { return to_intvec_checked(v); }
};

template <class Arith>
ConeRays dd_impl(const std::vector<IntVec>& A, int d) {
  using Z = typename Arith::Z;
  using S = typename Arith::S;
  const std::size_t m = A.size();
  Echelon e = row_echelon(to_qmat(A), d);
  if (e.rank < d) throw PreconditionError("extreme_rays: cone is not pointed (rank deficient)");

  // Initial simplicial cone from the first independent rows: rays are the
  // columns of the inverse of the basis matrix.
  QMat aug;
  for (int i = 0; i < d; ++i) {
    QVec r(2 * d);
    for (int j = 0; j < d; ++j) r[j] = Rational(static_cast<long>(A[e.pivot_rows[i]][j]));
    r[d + i] = 1;
    aug.push_back(std::move(r));
  }
  Echelon inv = row_echelon(aug, 2 * d);
  std::vector<std::vector<Z>> rays;
  std::vector<Bitset> zs;
  std::vector<bool> processed(m, false);
  for (int i = 0; i < d; ++i) processed[e.pivot_rows[i]] = true;
  for (int j = 0; j < d; ++j) {
    QVec col(d);
    for (int t = 0; t < d; ++t) col[inv.pivot_cols[t]] = inv.rows[t][d + j];
    rays.push_back(Arith::from_integer(primitive_integer(col)));
    Bitset z(m);
    for (int i = 0; i < d; ++i)
      if (i != j) z.set(e.pivot_rows[i]);
    zs.push_back(std::move(z));
  }

  std::vector<S> s;
  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    const std::size_t R = rays.size();
    s.assign(R, S(0));
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < R; ++r) {
      s[r] = Arith::dot(A[row], rays[r]);
      int sg = Arith::sign(s[r]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r : zer) zs[r].set(row);
      continue;
    }
    std::vector<std::vector<Z>> nrays;
    std::vector<Bitset> nzs;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bitset Z2 = zs[p] & zs[q];
        if (static_cast<int>(Z2.count()) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < R && adjacent; ++r)
          if (r != p && r != q && Z2.subset_of(zs[r])) adjacent = false;
        if (!adjacent) continue;
        nrays.push_back(Arith::combine(s[p], rays[q], s[q], rays[p]));
        Z2.set(row);
        nzs.push_back(std::move(Z2));
      }
    std::vector<std::vector<Z>> keep;
    std::vector<Bitset> keepz;
    for (std::size_t r = 0; r < R; ++r) {
      int sg = Arith::sign(s[r]);
      if (sg < 0) continue;
      if (sg == 0) zs[r].set(row);
      keep.push_back(std::move(rays[r]));
      keepz.push_back(std::move(zs[r]));
    }
    for (std::size_t t = 0; t < nrays.size(); ++t) {
      keep.push_back(std::move(nrays[t]));
      keepz.push_back(std::move(nzs[t]));
    }
    rays = std::move(keep);
    zs = std::move(keepz);
  }

  std::vector<std::pair<IntVec, Bitset>> out;
  for (std::size_t r = 0; r < rays.size(); ++r) out.emplace_back(Arith::to_intvec(rays[r]), std::move(zs[r]));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ConeRays res;
  for (auto& [v, z] : out) {
    res.rays.push_back(std::move(v));
    res.zero_sets.push_back(std::move(z));
  }
  return res;
}

}  // namespace

ConeRays extreme_rays(const std::vector<IntVec>& A, int d) {
  for (const auto& r : A)
    if (static_cast<int>(r.size()) != d) throw InternalError("extreme_rays: row length mismatch");
  try {
    return dd_impl<Int64Arith>(A, d);
  } catch (const OverflowError&) {
    return dd_impl<BigArith>(A, d);
  }
}

}  // namespace postrop
