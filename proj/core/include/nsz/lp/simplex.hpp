#pragma once

// Exact two-phase primal simplex on a dense rational tableau.

#include "nsz/lp/model.hpp"

#include <chrono>
#include <optional>
#include <vector>

namespace nsz::lp {

enum class PivotRule {
  Dantzig,  // most negative reduced cost
  Bland,    // lowest eligible index; never cycles
  Hybrid,   // Dantzig with lexicographic ties, Bland during very long degenerate runs
};

enum class Formulation {
  Auto,      // the smaller of Direct and Dualized
  Direct,    // slack/shift the model into standard form
  Dualized,  // solve the LP dual in standard form and read x from its duals
};

struct SimplexOptions {
  PivotRule rule = PivotRule::Hybrid;
  Formulation formulation = Formulation::Auto;
  /// Consecutive degenerate pivots before Hybrid switches to Bland.
  std::size_t degenerate_limit = 5000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// min c^T x  s.t.  A x = b,  x >= 0,  with b >= 0.
///
/// One artificial column per row is kept in the tableau so that its block
/// always holds B^-1; duals are read from it and appended columns are
/// priced and expressed in the current basis without refactoring.
class StandardFormSimplex {
 public:
  StandardFormSimplex(std::vector<Rational> b, SimplexOptions options = {});

  /// Appends a structural column; allowed before or between solves.
  std::size_t add_column(const SparseRow& column, Rational cost);

  LpStatus solve();

  [[nodiscard]] std::size_t rows() const noexcept { return m_; }
  [[nodiscard]] std::size_t columns() const noexcept { return cost_.size() - m_; }
  [[nodiscard]] Rational value() const;
  /// Value of every structural column.
  [[nodiscard]] std::vector<Rational> primal() const;
  /// y with y^T A <= c at optimality and y^T b = value().
  [[nodiscard]] std::vector<Rational> duals() const;
  /// c_j - y^T a_j for structural column j.
  [[nodiscard]] Rational reduced_cost(std::size_t column) const;
  [[nodiscard]] std::size_t pivots() const noexcept { return pivots_; }

 private:
  enum class Phase { Fresh, One, Two, Infeasible };

  void pivot(std::size_t row, std::size_t col);
  void reset_reduced_costs(bool phase_one);
  LpStatus iterate(bool phase_one);
  void drive_out_artificials();
  [[nodiscard]] bool lex_less(std::size_t a, std::size_t b, std::size_t col) const;
  void check_deadline() const;

  SimplexOptions options_;
  std::size_t m_;
  std::vector<std::vector<Rational>> tableau_;  // m x (m + n); artificial block first
  std::vector<Rational> rhs_;
  std::vector<Rational> cost_;      // phase-two costs, artificials 0
  std::vector<Rational> reduced_;   // current reduced-cost row
  std::vector<std::size_t> basis_;  // column basic in each row
  std::vector<std::int64_t> basic_row_;  // row of each basic column, -1 otherwise
  Phase phase_ = Phase::Fresh;
  std::size_t pivots_ = 0;
  std::size_t degenerate_run_ = 0;
  bool bland_mode_ = false;
};

LpSolution simplex_solve(const LpModel& model, const SimplexOptions& options = {});

/// Exact KKT check: primal feasibility, dual sign conditions, reduced-cost
/// complementarity and equal objective values.
bool certify_optimality(const LpModel& model, const LpSolution& solution);

}  // namespace nsz::lp
