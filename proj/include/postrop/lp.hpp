#pragma once

#include <optional>

#include "postrop/linalg.hpp"

namespace postrop {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVec x;          // a solution (Optimal) or empty
  Rational value;  // objective value at x
};

// Exact dense simplex (Bland's rule) over free variables x in Q^m:
// minimize c·x subject to Aeq x = beq and Ain x >= bin. An empty c means a
// pure feasibility problem.
LpResult lp_minimize(const QVec& c, const QMat& Aeq, const QVec& beq, const QMat& Ain, const QVec& bin, int m);

std::optional<QVec> lp_feasible(const QMat& Aeq, const QVec& beq, const QMat& Ain, const QVec& bin, int m);

}  // namespace postrop
