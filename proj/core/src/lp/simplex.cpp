#include "nsz/lp/simplex.hpp"

#include "nsz/errors.hpp"

#include <stdexcept>

namespace nsz::lp {

StandardFormSimplex::StandardFormSimplex(std::vector<Rational> b, SimplexOptions options)
    : options_(options), m_(b.size()), rhs_(std::move(b)) {
  for (const auto& v : rhs_) {
    if (v < 0) throw StructuralError("standard form needs a nonnegative right-hand side");
  }
  tableau_.assign(m_, std::vector<Rational>(m_));
  for (std::size_t i = 0; i < m_; ++i) tableau_[i][i] = 1;
  cost_.assign(m_, Rational(0));
  basis_.resize(m_);
  basic_row_.resize(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    basis_[i] = i;
    basic_row_[i] = static_cast<std::int64_t>(i);
  }
}

std::size_t StandardFormSimplex::add_column(const SparseRow& column, Rational cost) {
  const std::size_t col = cost_.size();
  for (const auto& [k, a] : column) {
    if (k >= m_) throw StructuralError("column entry outside the row range");
  }
  // Tableau column = B^-1 a, with B^-1 read from the artificial block.
  for (std::size_t i = 0; i < m_; ++i) {
    Rational v = 0;
    for (const auto& [k, a] : column) {
      if (tableau_[i][k] != 0) v += tableau_[i][k] * a;
    }
    tableau_[i].push_back(std::move(v));
  }
  basic_row_.push_back(-1);
  if (phase_ == Phase::Two) {
    Rational rc = cost;
    for (const auto& [k, a] : column) rc += reduced_[k] * a;  // y_k = -reduced_[k]
    reduced_.push_back(std::move(rc));
  } else if (!reduced_.empty()) {
    reduced_.push_back(Rational(0));
  }
  cost_.push_back(std::move(cost));

  if (phase_ == Phase::Two) {
    // A row whose artificial is still basic was redundant so far; if the new
    // column touches it, the column enters there at level zero.
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < m_ && tableau_[r][col] != 0) {
        pivot(r, col);
        break;
      }
    }
  }
  return col - m_;
}

void StandardFormSimplex::check_deadline() const {
  if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) {
    throw TimeoutError("simplex deadline expired after " + std::to_string(pivots_) + " pivots");
  }
}

void StandardFormSimplex::pivot(std::size_t row, std::size_t col) {
  auto& prow = tableau_[row];
  const std::size_t width = prow.size();
  Rational inv = 1 / prow[col];
  std::vector<std::size_t> nz;
  nz.reserve(width);
  for (std::size_t k = 0; k < width; ++k) {
    if (prow[k] != 0) {
      prow[k] *= inv;
      nz.push_back(k);
    }
  }
  rhs_[row] *= inv;
  Rational f;
  Rational t;
  for (std::size_t i = 0; i < m_; ++i) {
    if (i == row) continue;
    auto& r = tableau_[i];
    if (r[col] == 0) continue;
    f = r[col];
    for (std::size_t k : nz) {
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), prow[k].get_mpq_t());
      mpq_sub(r[k].get_mpq_t(), r[k].get_mpq_t(), t.get_mpq_t());
    }
    if (rhs_[row] != 0) rhs_[i] -= f * rhs_[row];
  }
  if (!reduced_.empty() && reduced_[col] != 0) {
    f = reduced_[col];
    for (std::size_t k : nz) {
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), prow[k].get_mpq_t());
      mpq_sub(reduced_[k].get_mpq_t(), reduced_[k].get_mpq_t(), t.get_mpq_t());
    }
  }
  basic_row_[basis_[row]] = -1;
  basis_[row] = col;
  basic_row_[col] = static_cast<std::int64_t>(row);
  ++pivots_;
}

void StandardFormSimplex::reset_reduced_costs(bool phase_one) {
  const std::size_t width = cost_.size();
  reduced_.assign(width, Rational(0));
  for (std::size_t j = 0; j < width; ++j) {
    if (phase_one) {
      reduced_[j] = j < m_ ? 1 : 0;
    } else {
      reduced_[j] = cost_[j];
    }
  }
  for (std::size_t i = 0; i < m_; ++i) {
    Rational cb = phase_one ? Rational(basis_[i] < m_ ? 1 : 0) : cost_[basis_[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < width; ++j) {
      if (tableau_[i][j] != 0) reduced_[j] -= cb * tableau_[i][j];
    }
  }
}

LpStatus StandardFormSimplex::iterate(bool phase_one) {
  const bool hybrid = options_.rule == PivotRule::Hybrid;
  while (true) {
    check_deadline();
    const bool bland = options_.rule == PivotRule::Bland || (hybrid && bland_mode_);
    // Entering column; artificials never re-enter.
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = m_; j < cost_.size(); ++j) {
      if (basic_row_[j] >= 0 || reduced_[j] >= 0) continue;
      if (enter == SIZE_MAX || (!bland && reduced_[j] < reduced_[enter])) enter = j;
      if (bland) break;
    }
    if (enter == SIZE_MAX) return LpStatus::Optimal;

    std::size_t leave = SIZE_MAX;
    Rational best;
    Rational ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& a = tableau_[i][enter];
      if (a <= 0) continue;
      ratio = rhs_[i] / a;
      bool better = leave == SIZE_MAX || ratio < best;
      if (!better && ratio == best) {
        better = bland ? basis_[i] < basis_[leave] : lex_less(i, leave, enter);
      }
      if (better) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == SIZE_MAX) {
      if (phase_one) throw std::logic_error("phase one cannot be unbounded");
      return LpStatus::Unbounded;
    }
    if (best == 0) {
      if (++degenerate_run_ >= options_.degenerate_limit) bland_mode_ = true;
    } else {
      degenerate_run_ = 0;
      bland_mode_ = false;
    }
    pivot(leave, enter);
  }
}

// Ties in the ratio test are broken by comparing the rows of B^-1 scaled by
// the pivot column, which keeps every row lexicographically positive and so
// rules out cycling whatever the entering rule.
bool StandardFormSimplex::lex_less(std::size_t a, std::size_t b, std::size_t col) const {
  const Rational& pa = tableau_[a][col];
  const Rational& pb = tableau_[b][col];
  Rational lhs;
  Rational rhs;
  for (std::size_t k = 0; k < m_; ++k) {
    const Rational& ta = tableau_[a][k];
    const Rational& tb = tableau_[b][k];
    if (ta == 0 && tb == 0) continue;
    mpq_mul(lhs.get_mpq_t(), ta.get_mpq_t(), pb.get_mpq_t());
    mpq_mul(rhs.get_mpq_t(), tb.get_mpq_t(), pa.get_mpq_t());
    if (lhs != rhs) return lhs < rhs;
  }
  return basis_[a] < basis_[b];
}

void StandardFormSimplex::drive_out_artificials() {
  for (std::size_t r = 0; r < m_; ++r) {
    if (basis_[r] >= m_) continue;
    for (std::size_t k = m_; k < cost_.size(); ++k) {
      if (basic_row_[k] < 0 && tableau_[r][k] != 0) {
        pivot(r, k);
        break;
      }
    }
  }
}

LpStatus StandardFormSimplex::solve() {
  if (phase_ == Phase::Two) return iterate(false);
  phase_ = Phase::One;
  reset_reduced_costs(true);
  iterate(true);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    if (basis_[i] < m_) infeasibility += rhs_[i];
  }
  if (infeasibility > 0) {
    phase_ = Phase::Infeasible;
    return LpStatus::Infeasible;
  }
  drive_out_artificials();
  phase_ = Phase::Two;
  degenerate_run_ = 0;
  bland_mode_ = false;
  reset_reduced_costs(false);
  return iterate(false);
}

Rational StandardFormSimplex::value() const {
  Rational v = 0;
  for (std::size_t i = 0; i < m_; ++i) v += cost_[basis_[i]] * rhs_[i];
  return v;
}

std::vector<Rational> StandardFormSimplex::primal() const {
  std::vector<Rational> x(cost_.size() - m_);
  for (std::size_t i = 0; i < m_; ++i) {
    if (basis_[i] >= m_) x[basis_[i] - m_] = rhs_[i];
  }
  return x;
}

std::vector<Rational> StandardFormSimplex::duals() const {
  if (phase_ != Phase::Two) throw std::logic_error("duals are available after phase two only");
  std::vector<Rational> y(m_);
  for (std::size_t i = 0; i < m_; ++i) y[i] = -reduced_[i];
  return y;
}

Rational StandardFormSimplex::reduced_cost(std::size_t column) const {
  if (phase_ != Phase::Two) throw std::logic_error("reduced costs are available after phase two only");
  return reduced_.at(m_ + column);
}

namespace {

bool is_max(const LpModel& model) { return model.sense() == Sense::Maximize; }

// x_j = offset + sign * s  (shifted or mirrored), or x_j = s+ - s- (free).
struct VarMap {
  bool free = false;
  std::size_t col = 0;
  std::size_t col_neg = 0;
  Rational offset = 0;
  int sign = 1;
};

LpSolution solve_direct(const LpModel& model, const SimplexOptions& options) {
  const std::size_t n = model.var_count();
  const Rational sense = is_max(model) ? -1 : 1;
  std::vector<VarMap> vars(n);
  std::size_t cols = 0;
  std::vector<Rational> cost;
  Rational offset_value = 0;
  std::vector<std::size_t> double_bounded;
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = sense * model.costs()[j];
    auto& v = vars[j];
    const auto& lo = model.lower(j);
    const auto& up = model.upper(j);
    if (lo) {
      v.col = cols++;
      v.offset = *lo;
      v.sign = 1;
      cost.push_back(c);
      if (up) double_bounded.push_back(j);
    } else if (up) {
      v.col = cols++;
      v.offset = *up;
      v.sign = -1;
      cost.push_back(-c);
    } else {
      v.free = true;
      v.col = cols++;
      v.col_neg = cols++;
      cost.push_back(c);
      cost.push_back(-c);
    }
    offset_value += c * v.offset;
  }

  const std::size_t r_model = model.row_count();
  std::vector<SparseRow> rows(r_model + double_bounded.size());
  std::vector<Rational> rhs(rows.size());
  for (std::size_t i = 0; i < r_model; ++i) {
    const auto& row = model.rows()[i];
    rhs[i] = row.rhs;
    for (const auto& [j, a] : row.coeffs) {
      const auto& v = vars[j];
      if (v.free) {
        rows[i].emplace_back(v.col, a);
        rows[i].emplace_back(v.col_neg, -a);
      } else {
        rows[i].emplace_back(v.col, a * v.sign);
        rhs[i] -= a * v.offset;
      }
    }
    if (row.relation != Relation::Equal) {
      rows[i].emplace_back(cols++, Rational(row.relation == Relation::LessEq ? 1 : -1));
      cost.emplace_back(0);
    }
  }
  for (std::size_t k = 0; k < double_bounded.size(); ++k) {
    std::size_t j = double_bounded[k];
    std::size_t i = r_model + k;
    rows[i].emplace_back(vars[j].col, Rational(1));
    rows[i].emplace_back(cols++, Rational(1));
    cost.emplace_back(0);
    rhs[i] = *model.upper(j) - *model.lower(j);
  }
  std::vector<int> row_sign(rows.size(), 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rhs[i] < 0) {
      row_sign[i] = -1;
      rhs[i] = -rhs[i];
      for (auto& [k, a] : rows[i]) a = -a;
    }
  }
  std::vector<SparseRow> columns(cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto& [k, a] : rows[i]) columns[k].emplace_back(i, a);
  }

  StandardFormSimplex engine(rhs, options);
  for (std::size_t k = 0; k < cols; ++k) engine.add_column(columns[k], cost[k]);
  LpSolution sol;
  sol.status = engine.solve();
  sol.pivots = engine.pivots();
  if (sol.status != LpStatus::Optimal) return sol;

  auto s = engine.primal();
  sol.primal.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = vars[j];
    sol.primal[j] = v.free ? Rational(s[v.col] - s[v.col_neg]) : Rational(v.offset + v.sign * s[v.col]);
  }
  sol.value = sense * (engine.value() + offset_value);
  auto y = engine.duals();
  sol.dual.resize(r_model);
  for (std::size_t i = 0; i < r_model; ++i) sol.dual[i] = sense * row_sign[i] * y[i];
  return sol;
}

// Returns nullopt when the dual is infeasible, which leaves the primal
// status undecided.
std::optional<LpSolution> solve_dualized(const LpModel& model, const SimplexOptions& options) {
  const std::size_t n = model.var_count();
  const Rational sense = is_max(model) ? -1 : 1;
  // Inequalities g^T x >= h with x free; origin row (or SIZE_MAX) and sign.
  struct GRow {
    SparseRow coeffs;
    Rational h;
    std::size_t origin;
    int sign;
  };
  std::vector<GRow> g;
  for (std::size_t i = 0; i < model.row_count(); ++i) {
    const auto& row = model.rows()[i];
    if (row.relation != Relation::LessEq) g.push_back({row.coeffs, row.rhs, i, 1});
    if (row.relation != Relation::GreaterEq) {
      SparseRow neg = row.coeffs;
      for (auto& [j, a] : neg) a = -a;
      g.push_back({std::move(neg), -row.rhs, i, -1});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (model.lower(j)) g.push_back({{{j, Rational(1)}}, *model.lower(j), SIZE_MAX, 1});
    if (model.upper(j)) g.push_back({{{j, Rational(-1)}}, -*model.upper(j), SIZE_MAX, -1});
  }

  std::vector<Rational> rhs(n);
  std::vector<int> sigma(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    rhs[j] = sense * model.costs()[j];
    if (rhs[j] < 0) {
      sigma[j] = -1;
      rhs[j] = -rhs[j];
    }
  }
  StandardFormSimplex engine(rhs, options);
  for (const auto& row : g) {
    SparseRow col;
    col.reserve(row.coeffs.size());
    for (const auto& [j, a] : row.coeffs) col.emplace_back(j, sigma[j] * a);
    engine.add_column(col, -row.h);
  }
  LpSolution sol;
  auto status = engine.solve();
  sol.pivots = engine.pivots();
  if (status == LpStatus::Infeasible) return std::nullopt;
  if (status == LpStatus::Unbounded) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  auto y = engine.duals();
  sol.primal.resize(n);
  for (std::size_t j = 0; j < n; ++j) sol.primal[j] = -sigma[j] * y[j];
  sol.value = sense * (-engine.value());
  auto u = engine.primal();
  sol.dual.assign(model.row_count(), Rational(0));
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k].origin != SIZE_MAX && u[k] != 0) sol.dual[g[k].origin] += g[k].sign * u[k];
  }
  for (auto& d : sol.dual) d *= sense;
  return sol;
}

}  // namespace

LpSolution simplex_solve(const LpModel& model, const SimplexOptions& options) {
  Formulation f = options.formulation;
  if (f == Formulation::Auto) {
    std::size_t direct_rows = model.row_count();
    for (std::size_t j = 0; j < model.var_count(); ++j) {
      if (model.lower(j) && model.upper(j)) ++direct_rows;
    }
    f = model.var_count() < direct_rows ? Formulation::Dualized : Formulation::Direct;
  }
  LpSolution sol;
  bool solved = false;
  if (f == Formulation::Dualized) {
    auto dualized = solve_dualized(model, options);
    if (dualized) {
      sol = std::move(*dualized);
      solved = true;
    }
  }
  if (!solved) sol = solve_direct(model, options);
  if (sol.status == LpStatus::Optimal && !certify_optimality(model, sol)) {
    throw std::logic_error("simplex produced a solution that fails the exact optimality check");
  }
  return sol;
}

bool certify_optimality(const LpModel& model, const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal) return false;
  const std::size_t n = model.var_count();
  if (sol.primal.size() != n || sol.dual.size() != model.row_count()) return false;
  if (!model.is_feasible(sol.primal)) return false;
  if (model.objective(sol.primal) != sol.value) return false;
  const Rational sense = is_max(model) ? -1 : 1;
  std::vector<Rational> reduced(n);
  for (std::size_t j = 0; j < n; ++j) reduced[j] = sense * model.costs()[j];
  Rational dual_value = 0;
  for (std::size_t i = 0; i < model.row_count(); ++i) {
    const auto& row = model.rows()[i];
    Rational y = sense * sol.dual[i];
    if (y == 0) continue;
    if (row.relation == Relation::GreaterEq && y < 0) return false;
    if (row.relation == Relation::LessEq && y > 0) return false;
    Rational lhs = 0;
    for (const auto& [j, a] : row.coeffs) {
      lhs += a * sol.primal[j];
      reduced[j] -= y * a;
    }
    if (lhs != row.rhs) return false;
    dual_value += y * row.rhs;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (reduced[j] > 0) {
      if (!model.lower(j) || sol.primal[j] != *model.lower(j)) return false;
      dual_value += reduced[j] * *model.lower(j);
    } else if (reduced[j] < 0) {
      if (!model.upper(j) || sol.primal[j] != *model.upper(j)) return false;
      dual_value += reduced[j] * *model.upper(j);
    }
  }
  return dual_value == sense * sol.value;
}

}  // namespace nsz::lp
