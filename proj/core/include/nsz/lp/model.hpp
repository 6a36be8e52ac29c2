#pragma once

// Exact-rational linear programs in the general form
//   min / max  c^T x   s.t.  a_i^T x {<=, =, >=} b_i,  l <= x <= u
// with optional (infinite) bounds.

#include "nsz/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nsz::lp {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct LpRow {
  SparseRow coeffs;
  Relation relation = Relation::Equal;
  Rational rhs = 0;
  std::string label;
};

class LpModel {
 public:
  explicit LpModel(Sense sense = Sense::Minimize) : sense_(sense) {}

  /// New variable with bounds [lower, upper]; nullopt means unbounded.
  std::size_t add_variable(std::string label, Rational cost = 0, std::optional<Rational> lower = Rational(0),
                           std::optional<Rational> upper = std::nullopt);
  std::size_t add_free_variable(std::string label, Rational cost = 0) {
    return add_variable(std::move(label), std::move(cost), std::nullopt, std::nullopt);
  }
  /// Duplicate indices in `coeffs` are summed; zero coefficients dropped.
  std::size_t add_row(SparseRow coeffs, Relation relation, Rational rhs, std::string label = {});

  void set_sense(Sense sense) { sense_ = sense; }
  void set_cost(std::size_t var, Rational cost) { cost_.at(var) = std::move(cost); }

  [[nodiscard]] Sense sense() const noexcept { return sense_; }
  [[nodiscard]] std::size_t var_count() const noexcept { return cost_.size(); }
  [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<Rational>& costs() const noexcept { return cost_; }
  [[nodiscard]] const std::vector<LpRow>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::optional<Rational>& lower(std::size_t var) const { return lower_.at(var); }
  [[nodiscard]] const std::optional<Rational>& upper(std::size_t var) const { return upper_.at(var); }
  [[nodiscard]] const std::string& label(std::size_t var) const { return labels_.at(var); }

  /// Objective value of a candidate point.
  [[nodiscard]] Rational objective(const std::vector<Rational>& x) const;
  /// Whether x satisfies every row and bound exactly.
  [[nodiscard]] bool is_feasible(const std::vector<Rational>& x) const;

 private:
  Sense sense_;
  std::vector<Rational> cost_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<std::string> labels_;
  std::vector<LpRow> rows_;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  std::vector<Rational> primal;
  /// Shadow prices: d(optimal value)/d(rhs_i) for each row.
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

}  // namespace nsz::lp
