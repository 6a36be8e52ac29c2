#pragma once

// Finite assignment supports and dual functionals D: support -> Q, viewed
// as linear maps on polynomials via D(f) = sum_x D(x) f(x).

#include "nsz/algebra.hpp"
#include "nsz/systems.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nsz::lp {

struct Support {
  std::size_t var_count = 0;
  std::vector<PackedAssignment> points;  // sorted, distinct
  std::string description;

  static Support of(std::size_t var_count, std::vector<PackedAssignment> points, std::string description);
  /// Every assignment of the system (N <= 30).
  static Support full(const AxiomSystem& sys);
  /// One-hole-per-pigeon assignments of PHP(n).
  static Support php_restricted(int n);
  /// Tournaments of ORD(n) without a minimum element.
  static Support ord_no_minimum(int n);

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(PackedAssignment x) const;
};

class DualFunctional {
 public:
  explicit DualFunctional(std::size_t var_count = 0) : var_count_(var_count) {}

  void set(PackedAssignment x, const Rational& value);
  [[nodiscard]] Rational at(PackedAssignment x) const;
  [[nodiscard]] std::size_t var_count() const noexcept { return var_count_; }
  [[nodiscard]] const std::map<PackedAssignment, Rational>& values() const noexcept { return values_; }
  [[nodiscard]] std::vector<PackedAssignment> support() const;

  /// D(1).
  [[nodiscard]] Rational total() const;
  [[nodiscard]] Rational apply(const Monomial& m) const;
  [[nodiscard]] Rational apply(const PackedMonomial& m) const;
  [[nodiscard]] Rational apply(const Polynomial& p) const;
  DualFunctional& operator*=(const Rational& lambda);

 private:
  std::size_t var_count_;
  std::map<PackedAssignment, Rational> values_;  // nonzero entries only
};

}  // namespace nsz::lp
