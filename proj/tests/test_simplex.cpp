#include <gtest/gtest.h>

#include "comparo/random.hpp"
#include "comparo/simplex.hpp"
#include "oracles.hpp"

using namespace comparo;
using Rel = LinearProgram::Relation;

namespace {

LinearProgram random_lp(Rng& rng) {
  LinearProgram lp;
  lp.variables = 1 + rng() % 3;
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-2, 4);
  auto row = [&] {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < lp.variables; ++j) c.emplace_back(coef(rng));
    return c;
  };
  const std::size_t rows = 1 + rng() % 3;
  for (std::size_t i = 0; i < rows; ++i) {
    const Rel rel = static_cast<Rel>(rng() % 3);
    Rational b(rhs(rng), 1 + static_cast<int>(rng() % 3));
    b.canonicalize();
    lp.add_row(row(), rel, b);
  }
  // Bounded: sum of variables <= 5.
  lp.add_row(std::vector<Rational>(lp.variables, Rational(1)), Rel::LessEq, 5);
  lp.objective = row();
  return lp;
}

}  // namespace

TEST(Simplex, SmallTextbookProblem) {
  // maximize 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
  LinearProgram lp;
  lp.variables = 2;
  lp.add_row({1, 1}, Rel::LessEq, 4);
  lp.add_row({1, 3}, Rel::LessEq, 6);
  lp.add_row({1, 0}, Rel::LessEq, 3);
  lp.objective = {3, 2};
  const LpResult r = solve(lp);
  ASSERT_EQ(r.status, LpResult::Status::Optimal);
  EXPECT_EQ(r.value, 11);
  EXPECT_EQ(r.x, (std::vector<Rational>{3, 1}));
  EXPECT_TRUE(verify_dual_bound(lp, r.dual, r.value));
}

TEST(Simplex, InfeasibleWithFarkasCertificate) {
  LinearProgram lp;
  lp.variables = 2;
  lp.add_row({1, 1}, Rel::Equal, 1);
  lp.add_row({1, 1}, Rel::GreaterEq, 2);
  lp.objective = {0, 0};
  const LpResult r = solve(lp);
  ASSERT_EQ(r.status, LpResult::Status::Infeasible);
  EXPECT_TRUE(verify_farkas(lp, r.dual));
  EXPECT_FALSE(verify_farkas(lp, std::vector<Rational>(2, Rational(0))));
}

TEST(Simplex, Unbounded) {
  LinearProgram lp;
  lp.variables = 2;
  lp.add_row({1, -1}, Rel::LessEq, 1);
  lp.objective = {1, 0};
  EXPECT_EQ(solve(lp).status, LpResult::Status::Unbounded);
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  std::size_t optimal = 0, infeasible = 0;
  for (std::size_t i = 0; i < 2000; ++i) {
    Rng rng = trial_rng(51, i);
    const LinearProgram lp = random_lp(rng);
    const LpResult r = solve(lp);
    const auto expected = oracle::vertex_optimum(lp);
    if (!expected) {
      ASSERT_EQ(r.status, LpResult::Status::Infeasible) << "trial " << i;
      ASSERT_TRUE(verify_farkas(lp, r.dual)) << "trial " << i;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(r.status, LpResult::Status::Optimal) << "trial " << i;
    ASSERT_EQ(r.value, *expected) << "trial " << i;
    ASSERT_TRUE(is_feasible(lp, r.x));
    ASSERT_TRUE(verify_dual_bound(lp, r.dual, r.value)) << "trial " << i;
    ++optimal;
  }
  EXPECT_GT(optimal, 100u);
  EXPECT_GT(infeasible, 100u);
}

TEST(Simplex, Deterministic) {
  Rng rng = trial_rng(52, 0);
  const LinearProgram lp = random_lp(rng);
  const LpResult a = solve(lp), b = solve(lp);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.dual, b.dual);
  EXPECT_EQ(a.pivots, b.pivots);
}
