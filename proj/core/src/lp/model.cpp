#include "nsz/lp/model.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <map>

namespace nsz::lp {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

std::size_t LpModel::add_variable(std::string label, Rational cost, std::optional<Rational> lower,
                                  std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) throw StructuralError("variable '" + label + "' has lower > upper");
  cost_.push_back(std::move(cost));
  lower_.push_back(std::move(lower));
  upper_.push_back(std::move(upper));
  labels_.push_back(std::move(label));
  return cost_.size() - 1;
}

std::size_t LpModel::add_row(SparseRow coeffs, Relation relation, Rational rhs, std::string label) {
  std::map<std::size_t, Rational> merged;
  for (auto& [j, a] : coeffs) {
    if (j >= cost_.size()) throw StructuralError("row references an unknown variable");
    merged[j] += a;
  }
  LpRow row;
  for (auto& [j, a] : merged) {
    if (a != 0) row.coeffs.emplace_back(j, std::move(a));
  }
  row.relation = relation;
  row.rhs = std::move(rhs);
  row.label = std::move(label);
  rows_.push_back(std::move(row));
  return rows_.size() - 1;
}

Rational LpModel::objective(const std::vector<Rational>& x) const {
  if (x.size() != cost_.size()) throw StructuralError("point has the wrong dimension");
  Rational v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) v += cost_[j] * x[j];
  return v;
}

bool LpModel::is_feasible(const std::vector<Rational>& x) const {
  if (x.size() != cost_.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lower_[j] && x[j] < *lower_[j]) return false;
    if (upper_[j] && x[j] > *upper_[j]) return false;
  }
  for (const auto& row : rows_) {
    Rational lhs = 0;
    for (const auto& [j, a] : row.coeffs) lhs += a * x[j];
    switch (row.relation) {
      case Relation::LessEq:
        if (lhs > row.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace nsz::lp
