#include "nsz/lp/support.hpp"

#include "nsz/errors.hpp"

#include <algorithm>

namespace nsz::lp {

Support Support::of(std::size_t var_count, std::vector<PackedAssignment> points, std::string description) {
  if (var_count > kMaxPackedVars) throw ParameterError("supports hold at most 64 variables");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (var_count < kMaxPackedVars) {
    for (auto x : points) {
      if (x >> var_count) throw StructuralError("support point has bits beyond the variable count");
    }
  }
  return Support{var_count, std::move(points), std::move(description)};
}

Support Support::full(const AxiomSystem& sys) {
  return of(sys.var_count(), assignments_full(sys.var_count()), "full");
}

Support Support::php_restricted(int n) {
  return of(static_cast<std::size_t>(n * (n - 1)), assignments_one_hole_per_pigeon(n), "restricted");
}

Support Support::ord_no_minimum(int n) {
  return of(static_cast<std::size_t>(n * (n - 1) / 2), assignments_no_minimum(n), "restricted");
}

std::optional<std::size_t> Support::index_of(PackedAssignment x) const {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

void DualFunctional::set(PackedAssignment x, const Rational& value) {
  if (var_count_ < kMaxPackedVars && (x >> var_count_)) throw StructuralError("assignment outside the variable range");
  if (value == 0) {
    values_.erase(x);
  } else {
    values_[x] = value;
  }
}

Rational DualFunctional::at(PackedAssignment x) const {
  auto it = values_.find(x);
  return it == values_.end() ? Rational(0) : it->second;
}

std::vector<PackedAssignment> DualFunctional::support() const {
  std::vector<PackedAssignment> out;
  out.reserve(values_.size());
  for (const auto& [x, v] : values_) out.push_back(x);
  return out;
}

Rational DualFunctional::total() const {
  Rational s = 0;
  for (const auto& [x, v] : values_) s += v;
  return s;
}

Rational DualFunctional::apply(const PackedMonomial& m) const {
  Rational s = 0;
  for (const auto& [x, v] : values_) {
    if (m.eval(x)) s += v;
  }
  return s;
}

Rational DualFunctional::apply(const Monomial& m) const {
  if (m.span() > var_count_) throw StructuralError("monomial outside the functional's variables");
  return apply(pack(m));
}

Rational DualFunctional::apply(const Polynomial& p) const {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) s += c * apply(m);
  return s;
}

DualFunctional& DualFunctional::operator*=(const Rational& lambda) {
  if (lambda == 0) {
    values_.clear();
    return *this;
  }
  for (auto& [x, v] : values_) v *= lambda;
  return *this;
}

}  // namespace nsz::lp
