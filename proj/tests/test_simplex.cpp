#include "nsz/errors.hpp"
#include "nsz/lp/simplex.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nsz;
using namespace nsz::lp;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Beale's cycling example; textbook Dantzig with smallest-index ties cycles.
LpModel beale() {
  LpModel m(Sense::Minimize);
  auto x1 = m.add_variable("x1", q(-3, 4));
  auto x2 = m.add_variable("x2", 150);
  auto x3 = m.add_variable("x3", q(-1, 50));
  auto x4 = m.add_variable("x4", 6);
  m.add_row({{x1, q(1, 4)}, {x2, -60}, {x3, q(-1, 25)}, {x4, 9}}, Relation::LessEq, 0);
  m.add_row({{x1, q(1, 2)}, {x2, -90}, {x3, q(-1, 50)}, {x4, 3}}, Relation::LessEq, 0);
  m.add_row({{x3, 1}}, Relation::LessEq, 1);
  return m;
}

struct RandomLp {
  std::vector<std::vector<long>> a;
  std::vector<long> b;
  std::vector<long> c;
};

RandomLp random_lp(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> coef(-3, 5);
  std::uniform_int_distribution<long> rhs(0, 10);
  RandomLp lp;
  lp.a.assign(rows, std::vector<long>(cols));
  for (auto& r : lp.a) {
    for (auto& v : r) v = coef(rng);
  }
  for (std::size_t i = 0; i < rows; ++i) lp.b.push_back(rhs(rng));
  for (std::size_t j = 0; j < cols; ++j) lp.c.push_back(coef(rng));
  return lp;
}

// max c x, A x <= b, x >= 0.
LpModel primal_of(const RandomLp& lp) {
  LpModel m(Sense::Maximize);
  for (std::size_t j = 0; j < lp.c.size(); ++j) m.add_variable("x" + std::to_string(j), lp.c[j]);
  for (std::size_t i = 0; i < lp.b.size(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < lp.c.size(); ++j) row.emplace_back(j, lp.a[i][j]);
    m.add_row(row, Relation::LessEq, lp.b[i]);
  }
  return m;
}

// min b y, A^T y >= c, y >= 0.
LpModel dual_of(const RandomLp& lp) {
  LpModel m(Sense::Minimize);
  for (std::size_t i = 0; i < lp.b.size(); ++i) m.add_variable("y" + std::to_string(i), lp.b[i]);
  for (std::size_t j = 0; j < lp.c.size(); ++j) {
    SparseRow row;
    for (std::size_t i = 0; i < lp.b.size(); ++i) row.emplace_back(i, lp.a[i][j]);
    m.add_row(row, Relation::GreaterEq, lp.c[j]);
  }
  return m;
}

}  // namespace

TEST(Simplex, BealeExampleTerminatesUnderEveryRule) {
  for (auto rule : {PivotRule::Dantzig, PivotRule::Bland, PivotRule::Hybrid}) {
    for (auto form : {Formulation::Direct, Formulation::Dualized}) {
      SimplexOptions opt;
      opt.rule = rule;
      opt.formulation = form;
      auto model = beale();
      auto sol = simplex_solve(model, opt);
      ASSERT_EQ(sol.status, LpStatus::Optimal);
      EXPECT_EQ(sol.value, q(-1, 20));
      EXPECT_TRUE(model.is_feasible(sol.primal));
      EXPECT_EQ(model.objective(sol.primal), sol.value);
      EXPECT_TRUE(certify_optimality(model, sol));
    }
  }
}

TEST(Simplex, SmallKnownOptimum) {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3  ->  (3, 1), value 11.
  LpModel m(Sense::Maximize);
  auto x = m.add_variable("x", 3);
  auto y = m.add_variable("y", 2);
  m.add_row({{x, 1}, {y, 1}}, Relation::LessEq, 4);
  m.add_row({{x, 1}, {y, 3}}, Relation::LessEq, 6);
  m.add_row({{x, 1}}, Relation::LessEq, 3);
  auto sol = simplex_solve(m);
  ASSERT_EQ(sol.status, LpStatus::Optimal);
  EXPECT_EQ(sol.value, 11);
  EXPECT_EQ(sol.primal[x], 3);
  EXPECT_EQ(sol.primal[y], 1);
}

TEST(Simplex, FreeAndBoundedVariables) {
  // min x - y, -2 <= x <= 5, y free, x + y = 1, y <= 4 via a row.
  LpModel m(Sense::Minimize);
  auto x = m.add_variable("x", 1, q(-2), q(5));
  auto y = m.add_free_variable("y", -1);
  m.add_row({{x, 1}, {y, 1}}, Relation::Equal, 1);
  m.add_row({{y, 1}}, Relation::LessEq, 4);
  auto sol = simplex_solve(m);
  ASSERT_EQ(sol.status, LpStatus::Optimal);
  EXPECT_EQ(sol.value, -5);
  EXPECT_EQ(sol.primal[x], -2);
  EXPECT_TRUE(certify_optimality(m, sol));
}

TEST(Simplex, DetectsInfeasibleAndUnbounded) {
  LpModel inf(Sense::Minimize);
  auto x = inf.add_variable("x", 1);
  inf.add_row({{x, 1}}, Relation::LessEq, 1);
  inf.add_row({{x, 1}}, Relation::GreaterEq, 2);
  EXPECT_EQ(simplex_solve(inf).status, LpStatus::Infeasible);

  LpModel unb(Sense::Maximize);
  auto y = unb.add_variable("y", 1);
  auto z = unb.add_variable("z", 0);
  unb.add_row({{y, 1}, {z, -1}}, Relation::LessEq, 1);
  EXPECT_EQ(simplex_solve(unb).status, LpStatus::Unbounded);
}

TEST(Simplex, DeadlineRaisesTimeout) {
  SimplexOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(simplex_solve(beale(), opt), TimeoutError);
}

TEST(Simplex, StrongDualityOnRandomPrograms) {
  std::mt19937_64 rng(29);
  int optimal = 0;
  for (int t = 0; t < 150; ++t) {
    auto lp = random_lp(rng, 2 + rng() % 4, 2 + rng() % 4);
    auto pm = primal_of(lp);
    auto dm = dual_of(lp);
    auto p = simplex_solve(pm);
    auto d = simplex_solve(dm);
    if (p.status == LpStatus::Optimal) {
      ++optimal;
      ASSERT_EQ(d.status, LpStatus::Optimal);
      EXPECT_EQ(p.value, d.value);
      EXPECT_TRUE(certify_optimality(pm, p));
      // Shadow prices of the primal solve the dual.
      Rational by = 0;
      for (std::size_t i = 0; i < lp.b.size(); ++i) by += Rational(lp.b[i]) * p.dual[i];
      EXPECT_EQ(by, p.value);
      EXPECT_TRUE(dm.is_feasible(p.dual));
    } else {
      EXPECT_EQ(p.status, LpStatus::Unbounded);
      EXPECT_EQ(d.status, LpStatus::Infeasible);
    }
  }
  EXPECT_GT(optimal, 30);
}

TEST(Simplex, FormulationsAgree) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    auto model = primal_of(random_lp(rng, 3 + rng() % 3, 3 + rng() % 3));
    SimplexOptions direct;
    direct.formulation = Formulation::Direct;
    SimplexOptions dualized;
    dualized.formulation = Formulation::Dualized;
    auto a = simplex_solve(model, direct);
    auto b = simplex_solve(model, dualized);
    ASSERT_EQ(a.status, b.status);
    if (a.status == LpStatus::Optimal) {
      EXPECT_EQ(a.value, b.value);
    }
  }
}

TEST(Simplex, ColumnsCanBeAppendedBetweenSolves) {
  // min x0 + 2 x1, x0 + x1 = 3; then a cheaper column arrives.
  StandardFormSimplex s({3});
  s.add_column({{0, 1}}, 1);
  s.add_column({{0, 1}}, 2);
  ASSERT_EQ(s.solve(), LpStatus::Optimal);
  EXPECT_EQ(s.value(), 3);
  EXPECT_EQ(s.duals()[0], 1);
  auto c = s.add_column({{0, 2}}, 1);
  EXPECT_EQ(s.reduced_cost(c), -1);
  ASSERT_EQ(s.solve(), LpStatus::Optimal);
  EXPECT_EQ(s.value(), q(3, 2));
}
