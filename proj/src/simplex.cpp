#include "comparo/simplex.hpp"

#include <limits>

#include "comparo/errors.hpp"

namespace comparo {

namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : m_(lp.rows.size()), n_(lp.variables) {
    for (const auto& row : lp.rows) {
      if (row.coeffs.size() != n_) throw Error("LP row has the wrong number of coefficients");
    }
    sign_.assign(m_, 1);
    std::vector<LinearProgram::Relation> rel(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      rel[i] = lp.rows[i].relation;
      if (sgn(lp.rows[i].rhs) < 0) {
        sign_[i] = -1;
        if (rel[i] == LinearProgram::Relation::LessEq) rel[i] = LinearProgram::Relation::GreaterEq;
        else if (rel[i] == LinearProgram::Relation::GreaterEq) rel[i] = LinearProgram::Relation::LessEq;
      }
    }
    // Column layout: structural, then per row a slack / surplus, then
    // artificials.
    std::size_t cols = n_;
    std::vector<long> aux(m_, -1), art(m_, -1);
    for (std::size_t i = 0; i < m_; ++i)
      if (rel[i] != LinearProgram::Relation::Equal) aux[i] = static_cast<long>(cols++);
    first_artificial_ = cols;
    for (std::size_t i = 0; i < m_; ++i)
      if (rel[i] != LinearProgram::Relation::LessEq) art[i] = static_cast<long>(cols++);
    cols_ = cols;

    t_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(m_, 0);
    unit_col_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& row = lp.rows[i];
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign_[i] > 0 ? row.coeffs[j] : Rational(-row.coeffs[j]);
      t_[i][cols_] = sign_[i] > 0 ? row.rhs : Rational(-row.rhs);
      if (rel[i] == LinearProgram::Relation::LessEq) {
        t_[i][static_cast<std::size_t>(aux[i])] = 1;
        basis_[i] = unit_col_[i] = static_cast<std::size_t>(aux[i]);
      } else {
        if (aux[i] >= 0) t_[i][static_cast<std::size_t>(aux[i])] = -1;
        t_[i][static_cast<std::size_t>(art[i])] = 1;
        basis_[i] = unit_col_[i] = static_cast<std::size_t>(art[i]);
      }
    }
  }

  // Phase 1: maximize -(sum of artificials). Returns its optimum.
  Rational phase1() {
    cost_.assign(cols_, Rational(0));
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost_[j] = -1;
    optimize(/*allow_artificial=*/true);
    return objective_value();
  }

  // Pivots basic artificials (all at zero) out where possible.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  bool phase2(const std::vector<Rational>& objective) {
    cost_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = objective[j];
    return optimize(/*allow_artificial=*/false);
  }

  Rational objective_value() const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i) v += cost_[basis_[i]] * t_[i][cols_];
    return v;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
    return x;
  }

  // y^T = c_B^T B^-1, read off the columns that started as the identity,
  // mapped back to the caller's row orientation.
  std::vector<Rational> dual() const {
    std::vector<Rational> y(m_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      Rational v = 0;
      for (std::size_t k = 0; k < m_; ++k) v += cost_[basis_[k]] * t_[k][unit_col_[r]];
      y[r] = sign_[r] > 0 ? v : Rational(-v);
    }
    return y;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  // Bland's rule. Returns false when unbounded.
  bool optimize(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ : first_artificial_;
    std::vector<Rational> reduced(cols_);
    for (;;) {
      // reduced_j = c_j - c_B^T T_j
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit && enter == limit; ++j) {
        Rational d = cost_[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (sgn(t_[i][j]) != 0 && sgn(cost_[basis_[i]]) != 0) d -= cost_[basis_[i]] * t_[i][j];
        if (sgn(d) > 0) enter = j;
      }
      if (enter == limit) return true;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational p = t_[row][col];
    for (auto& v : t_[row])
      if (sgn(v) != 0) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || sgn(t_[i][col]) == 0) continue;
      const Rational factor = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(t_[row][j]) != 0) t_[i][j] -= factor * t_[row][j];
    }
    basis_[row] = col;
  }

  std::size_t m_, n_, cols_ = 0, first_artificial_ = 0;
  std::vector<int> sign_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> unit_col_;
  std::vector<Rational> cost_;
  std::size_t pivots_ = 0;
};

bool sign_ok(LinearProgram::Relation rel, const Rational& y) {
  switch (rel) {
    case LinearProgram::Relation::LessEq:
      return sgn(y) >= 0;
    case LinearProgram::Relation::GreaterEq:
      return sgn(y) <= 0;
    case LinearProgram::Relation::Equal:
      return true;
  }
  return false;
}

std::vector<Rational> column_sums(const LinearProgram& lp, const std::vector<Rational>& y) {
  std::vector<Rational> s(lp.variables, Rational(0));
  for (std::size_t i = 0; i < lp.rows.size(); ++i)
    for (std::size_t j = 0; j < lp.variables; ++j) s[j] += y[i] * lp.rows[i].coeffs[j];
  return s;
}

Rational rhs_sum(const LinearProgram& lp, const std::vector<Rational>& y) {
  Rational v = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) v += y[i] * lp.rows[i].rhs;
  return v;
}

}  // namespace

LpResult solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.variables) throw Error("LP objective has the wrong length");
  Tableau t(lp);
  LpResult r;
  if (sgn(t.phase1()) < 0) {
    r.status = LpResult::Status::Infeasible;
    r.dual = t.dual();
    r.pivots = t.pivots();
    return r;
  }
  t.purge_artificials();
  const bool bounded = t.phase2(lp.objective);
  r.x = t.primal();
  r.pivots = t.pivots();
  if (!bounded) {
    r.status = LpResult::Status::Unbounded;
    return r;
  }
  r.status = LpResult::Status::Optimal;
  r.value = t.objective_value();
  r.dual = t.dual();
  return r;
}

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& y) {
  if (y.size() != lp.rows.size()) return false;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!sign_ok(lp.rows[i].relation, y[i])) return false;
  for (const auto& s : column_sums(lp, y))
    if (sgn(s) < 0) return false;
  return sgn(rhs_sum(lp, y)) < 0;
}

bool verify_dual_bound(const LinearProgram& lp, const std::vector<Rational>& y, const Rational& bound) {
  if (y.size() != lp.rows.size()) return false;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!sign_ok(lp.rows[i].relation, y[i])) return false;
  auto s = column_sums(lp, y);
  for (std::size_t j = 0; j < lp.variables; ++j)
    if (s[j] < lp.objective[j]) return false;
  return rhs_sum(lp, y) == bound;
}

bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variables) return false;
  for (const auto& v : x)
    if (sgn(v) < 0) return false;
  for (const auto& row : lp.rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < lp.variables; ++j) lhs += row.coeffs[j] * x[j];
    switch (row.relation) {
      case LinearProgram::Relation::LessEq:
        if (lhs > row.rhs) return false;
        break;
      case LinearProgram::Relation::GreaterEq:
        if (lhs < row.rhs) return false;
        break;
      case LinearProgram::Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace comparo
