#pragma once

#include <cstdint>
#include <vector>

#include "postrop/rational.hpp"

namespace postrop {

using IntVec = std::vector<long long>;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<std::vector<Integer>>;

QMat to_qmat(const std::vector<IntVec>& rows);
QVec to_qvec(const IntVec& v);

struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;  // pivot column of each nonzero row
  std::vector<int> pivot_rows;  // original row index that produced each pivot
  QMat rows;                    // reduced row echelon form (rank rows)
};

// Reduced row echelon form over Q; rows are processed in order, so pivot_rows
// lists a lexicographically first maximal independent subset of the rows.
Echelon row_echelon(const QMat& rows, int ncols);
int rank(const QMat& rows, int ncols);
int rank(const std::vector<IntVec>& rows, int ncols);

// Basis of {x : rows * x = 0}, each scaled to a primitive integer vector.
std::vector<std::vector<Integer>> nullspace(const QMat& rows, int ncols);

// Exact determinant (Bareiss) of a square integer matrix.
Integer determinant(ZMat m);

// Solve rows * x = rhs over Q; returns false if inconsistent. One solution (free vars = 0).
bool solve(const QMat& rows, const QVec& rhs, int ncols, QVec& x);

// Divide by the gcd of the entries (zero vector unchanged).
void make_primitive(std::vector<Integer>& v);
void make_primitive(IntVec& v);

// Common-denominator integer vector proportional to v with gcd 1.
std::vector<Integer> primitive_integer(const QVec& v);

// Checked conversions / arithmetic.
long long to_ll_checked(const Integer& z);
IntVec to_intvec_checked(const std::vector<Integer>& v);

}  // namespace postrop
