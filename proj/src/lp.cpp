#include "postrop/lp.hpp"

#include "postrop/errors.hpp"

namespace postrop {

namespace {

// Tableau over nonnegative variables: rows T[r] = (coefficients..., rhs).
struct Tableau {
  std::vector<QVec> T;
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int r, int c) {
    Rational inv = 1 / T[r][c];
    for (auto& v : T[r]) v *= inv;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (static_cast<int>(i) == r || sgn(T[i][c]) == 0) continue;
      Rational f = T[i][c];
      for (int j = 0; j <= ncols; ++j)
        if (sgn(T[r][j]) != 0) T[i][j] -= f * T[r][j];
    }
    basis[r] = c;
  }

  // Minimize obj·y over the current feasible basis, using only columns < limit.
  // Returns false if unbounded.
  bool run(const QVec& obj, int limit) {
    const int R = static_cast<int>(T.size());
    for (;;) {
      // Reduced costs: obj_j - sum_r obj_{basis r} T[r][j].
      int enter = -1;
      for (int j = 0; j < limit && enter < 0; ++j) {
        Rational rc = obj[j];
        for (int r = 0; r < R; ++r)
          if (sgn(obj[basis[r]]) != 0 && sgn(T[r][j]) != 0) rc -= obj[basis[r]] * T[r][j];
        if (sgn(rc) < 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < R; ++r) {
        if (sgn(T[r][enter]) <= 0) continue;
        Rational ratio = T[r][ncols] / T[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(const QVec& c, const QMat& Aeq, const QVec& beq, const QMat& Ain, const QVec& bin, int m) {
  if (Aeq.size() != beq.size() || Ain.size() != bin.size()) throw InternalError("lp: dimension mismatch");
  const int E = static_cast<int>(Aeq.size()), I = static_cast<int>(Ain.size());
  const int R = E + I;
  // Columns: x+ (m), x- (m), slacks (I), artificials (R).
  const int nstruct = 2 * m + I;
  Tableau tb;
  tb.ncols = nstruct + R;
  tb.T.assign(R, QVec(tb.ncols + 1, Rational(0)));
  tb.basis.assign(R, 0);
  for (int r = 0; r < R; ++r) {
    const QVec& a = r < E ? Aeq[r] : Ain[r - E];
    Rational b = r < E ? beq[r] : bin[r - E];
    if (static_cast<int>(a.size()) != m) throw InternalError("lp: row length mismatch");
    QVec& row = tb.T[r];
    for (int j = 0; j < m; ++j) {
      row[j] = a[j];
      row[m + j] = -a[j];
    }
    if (r >= E) row[2 * m + (r - E)] = -1;
    row[tb.ncols] = b;
    if (sgn(b) < 0)
      for (auto& v : row) v = -v;
    row[nstruct + r] = 1;
    tb.basis[r] = nstruct + r;
  }
  QVec phase1(tb.ncols, Rational(0));
  for (int r = 0; r < R; ++r) phase1[nstruct + r] = 1;
  tb.run(phase1, tb.ncols);
  LpResult res;
  for (int r = 0; r < R; ++r)
    if (tb.basis[r] >= nstruct && sgn(tb.T[r][tb.ncols]) != 0) return res;  // infeasible
  // Drive degenerate artificials out of the basis where possible.
  for (int r = 0; r < R; ++r) {
    if (tb.basis[r] < nstruct) continue;
    for (int j = 0; j < nstruct; ++j)
      if (sgn(tb.T[r][j]) != 0) {
        tb.pivot(r, j);
        break;
      }
  }
  if (!c.empty()) {
    if (static_cast<int>(c.size()) != m) throw InternalError("lp: objective length mismatch");
    QVec obj(tb.ncols, Rational(0));
    for (int j = 0; j < m; ++j) {
      obj[j] = c[j];
      obj[m + j] = -c[j];
    }
    // Artificial columns stay out: remaining basic artificials sit on redundant rows.
    if (!tb.run(obj, nstruct)) {
      res.status = LpStatus::Unbounded;
      return res;
    }
  }
  res.status = LpStatus::Optimal;
  res.x.assign(m, Rational(0));
  for (int r = 0; r < R; ++r) {
    int b = tb.basis[r];
    if (b < m) res.x[b] += tb.T[r][tb.ncols];
    else if (b < 2 * m) res.x[b - m] -= tb.T[r][tb.ncols];
  }
  res.value = 0;
  for (int j = 0; j < static_cast<int>(c.size()); ++j) res.value += c[j] * res.x[j];
  return res;
}

std::optional<QVec> lp_feasible(const QMat& Aeq, const QVec& beq, const QMat& Ain, const QVec& bin, int m) {
  auto r = lp_minimize({}, Aeq, beq, Ain, bin, m);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace postrop
