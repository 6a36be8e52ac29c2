#pragma once

// Variable symmetries of PHP and ORD. A group element maps variable v to
// target[v] and optionally negates it, so the image assignment has
// y[target[v]] = x[v] xor flip[v]. Weakenings map to weakenings and
// W(x) = (gW)(gx).

#include "nsz/algebra.hpp"
#include "nsz/systems.hpp"

#include <cstdint>
#include <vector>

namespace nsz {

struct SignedPermutation {
  std::vector<VarId> target;
  std::vector<std::uint8_t> flip;

  static SignedPermutation identity(std::size_t var_count);
  [[nodiscard]] PackedAssignment apply(PackedAssignment x) const;
  [[nodiscard]] Monomial apply(const Monomial& m) const;
  [[nodiscard]] PackedMonomial apply(const PackedMonomial& m) const;
  /// (a * b)(x) = a(b(x)).
  friend SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Orbit decomposition of a finite point set closed under a group.
struct OrbitPartition {
  std::vector<std::uint32_t> label;            // per point, orbit index
  std::vector<std::size_t> representative;     // per orbit, lowest point index
  std::vector<std::size_t> size;               // per orbit
  [[nodiscard]] std::size_t orbit_count() const { return representative.size(); }
};

class SymmetryGroup {
 public:
  static SymmetryGroup trivial(std::size_t var_count);
  /// S_n on pigeons times S_{n-1} on holes.
  static SymmetryGroup php(int n);
  /// S_n relabelling ORD elements.
  static SymmetryGroup ord(int n);
  /// Full symmetry group of a family system.
  static SymmetryGroup of(const AxiomSystem& sys);

  [[nodiscard]] std::size_t var_count() const noexcept { return var_count_; }
  [[nodiscard]] const std::vector<SignedPermutation>& generators() const noexcept { return generators_; }
  [[nodiscard]] const Integer& order() const noexcept { return order_; }

  /// Every group element, by closure over the generators; throws
  /// ParameterError if the order exceeds `limit`.
  [[nodiscard]] std::vector<SignedPermutation> elements(std::size_t limit = 1'000'000) const;

  /// Orbits of `points` (sorted ascending); throws StructuralError if the
  /// set is not closed under the group.
  [[nodiscard]] OrbitPartition orbits(const std::vector<PackedAssignment>& points) const;

  /// One axiom index per orbit of the system's axioms (lowest index).
  [[nodiscard]] std::vector<std::size_t> axiom_representatives(const AxiomSystem& sys) const;

 private:
  std::size_t var_count_ = 0;
  std::vector<SignedPermutation> generators_;
  Integer order_ = 1;
};

}  // namespace nsz
