#pragma once

#include <cstddef>
#include <vector>

#include "comparo/rational.hpp"

namespace comparo {

/// maximize objective . x  subject to rows, x >= 0.
struct LinearProgram {
  enum class Relation { LessEq, GreaterEq, Equal };
  struct Row {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
  };

  std::size_t variables = 0;
  std::vector<Row> rows;
  std::vector<Rational> objective;

  void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };

  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational value;
  /// One multiplier per row, in the rows' own orientation.
  ///  - Optimal: a dual solution, so y . rhs == value bounds the objective.
  ///  - Infeasible: a Farkas certificate (see verify_farkas).
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's rule.
LpResult solve(const LinearProgram& lp);

/// y certifies infeasibility: y_i >= 0 on <= rows, y_i <= 0 on >= rows,
/// y^T A >= 0 column-wise and y . rhs < 0.
bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& y);

/// y bounds the objective by `bound`: sign conditions as above,
/// y^T A >= objective column-wise and y . rhs == bound.
bool verify_dual_bound(const LinearProgram& lp, const std::vector<Rational>& y, const Rational& bound);

/// x satisfies every row and x >= 0.
bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace comparo
