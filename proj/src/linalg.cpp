#include "postrop/linalg.hpp"

#include <numeric>

#include "postrop/errors.hpp"

namespace postrop {

QVec to_qvec(const IntVec& v) {
  QVec q(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) q[j] = Rational(static_cast<long>(v[j]));
  return q;
}

QMat to_qmat(const std::vector<IntVec>& rows) {
  QMat out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    QVec q(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) q[j] = Rational(static_cast<long>(r[j]));
    out.push_back(std::move(q));
  }
  return out;
}

Echelon row_echelon(const QMat& input, int ncols) {
  Echelon e;
  QMat& R = e.rows;
  for (std::size_t ri = 0; ri < input.size(); ++ri) {
    QVec v = input[ri];
    if (static_cast<int>(v.size()) != ncols) throw InternalError("row_echelon: row length mismatch");
    for (int t = 0; t < e.rank; ++t) {
      int c = e.pivot_cols[t];
      if (v[c] != 0) {
        Rational f = v[c];
        for (int j = 0; j < ncols; ++j)
          if (R[t][j] != 0) v[j] -= f * R[t][j];
      }
    }
    int piv = -1;
    for (int j = 0; j < ncols; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    Rational inv = 1 / v[piv];
    for (int j = 0; j < ncols; ++j) v[j] *= inv;
    for (int t = 0; t < e.rank; ++t) {
      if (R[t][piv] != 0) {
        Rational f = R[t][piv];
        for (int j = 0; j < ncols; ++j)
          if (v[j] != 0) R[t][j] -= f * v[j];
      }
    }
    R.push_back(std::move(v));
    e.pivot_cols.push_back(piv);
    e.pivot_rows.push_back(static_cast<int>(ri));
    ++e.rank;
  }
  return e;
}

int rank(const QMat& rows, int ncols) { return row_echelon(rows, ncols).rank; }

int rank(const std::vector<IntVec>& rows, int ncols) { return rank(to_qmat(rows), ncols); }

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void make_primitive(IntVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

std::vector<Integer> primitive_integer(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  make_primitive(out);
  return out;
}

std::vector<std::vector<Integer>> nullspace(const QMat& rows, int ncols) {
  Echelon e = row_echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVec x(ncols);
    x[f] = 1;
    for (int t = 0; t < e.rank; ++t) x[e.pivot_cols[t]] = -e.rows[t][f];
    basis.push_back(primitive_integer(x));
  }
  return basis;
}

Integer determinant(ZMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sw = k + 1;
      while (sw < n && m[sw][k] == 0) ++sw;
      if (sw == n) return 0;
      std::swap(m[k], m[sw]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool solve(const QMat& rows, const QVec& rhs, int ncols, QVec& x) {
  QMat aug;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    QVec r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  Echelon e = row_echelon(aug, ncols + 1);
  x.assign(ncols, Rational(0));
  for (int t = 0; t < e.rank; ++t) {
    int c = e.pivot_cols[t];
    if (c == ncols) return false;
    x[c] = e.rows[t][ncols];
  }
  return true;
}

long long to_ll_checked(const Integer& z) {
  if (!z.fits_slong_p()) throw OverflowError("integer does not fit in 64 bits");
  return z.get_si();
}

IntVec to_intvec_checked(const std::vector<Integer>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_ll_checked(v[i]);
  return out;
}

}  // namespace postrop
