#pragma once

// Symmetry-reduced TCS programs and separation oracles for constraint
// generation.
//
// With D constant on the orbits o of a symmetry group acting on the support,
// the dual becomes  max sum_o s_o d_o  s.t.  |sum_o a_{W,o} d_o| <= 1, where
// s_o is the orbit size and a_{W,o} = #{x in o : W(x) = 1}. Averaging any
// optimal D over the group shows nothing is lost.

#include "nsz/lp/tcs_models.hpp"
#include "nsz/symmetry.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace nsz::lp {

struct ReducedColumn {
  TcsItem item;
  std::vector<std::int64_t> counts;  // a_{W,o} per orbit
};

class ReducedProblem {
 public:
  ReducedProblem(std::shared_ptr<const AxiomSystem> system, Support support, SymmetryGroup group, ProofSystem proof);

  [[nodiscard]] const AxiomSystem& system() const { return *system_; }
  [[nodiscard]] const std::shared_ptr<const AxiomSystem>& system_ptr() const { return system_; }
  [[nodiscard]] const Support& support() const noexcept { return support_; }
  [[nodiscard]] const SymmetryGroup& group() const noexcept { return group_; }
  [[nodiscard]] const OrbitPartition& orbits() const noexcept { return orbits_; }
  [[nodiscard]] ProofSystem proof() const noexcept { return proof_; }
  /// One representative per orbit of axioms under the group.
  [[nodiscard]] const std::vector<std::size_t>& axiom_representatives() const noexcept { return axiom_reps_; }

  [[nodiscard]] std::vector<std::int64_t> counts(const PackedMonomial& m) const;
  [[nodiscard]] ReducedColumn make_column(const TcsItem& item) const;
  /// Point monomial of each orbit representative, charged to an axiom it
  /// violates; together they make the reduced primal feasible.
  [[nodiscard]] std::vector<ReducedColumn> seed_columns() const;

 private:
  std::shared_ptr<const AxiomSystem> system_;
  Support support_;
  SymmetryGroup group_;
  OrbitPartition orbits_;
  ProofSystem proof_;
  std::vector<std::size_t> axiom_reps_;
};

class SeparationOracle {
 public:
  virtual ~SeparationOracle() = default;
  /// Up to max_columns columns whose dual rows d violates; an empty result
  /// certifies that d is feasible for every row.
  virtual std::vector<ReducedColumn> separate(const ReducedProblem& problem, const std::vector<Rational>& d,
                                              std::size_t max_columns) = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

/// Any axiom system with few free variables per axiom: a ternary zeta
/// transform over the free variables of each representative axiom yields
/// D(W) for every weakening at once. Resolution-like rows use the same
/// transform over all variables.
class CubeOracle final : public SeparationOracle {
 public:
  std::vector<ReducedColumn> separate(const ReducedProblem& problem, const std::vector<Rational>& d,
                                      std::size_t max_columns) override;
  [[nodiscard]] std::string name() const override { return "cube"; }
};

/// PHP over one-hole-per-pigeon assignments: W only matters through its
/// H-sets, and a per-pigeon subset-sum transform (radix n-1 to 2^(n-1))
/// yields D(W) for every H-set tuple of a hole axiom at once.
class PhpHoleSetOracle final : public SeparationOracle {
 public:
  std::vector<ReducedColumn> separate(const ReducedProblem& problem, const std::vector<Rational>& d,
                                      std::size_t max_columns) override;
  [[nodiscard]] std::string name() const override { return "php-holesets"; }
};

/// Never reports a violation.
class NullOracle final : public SeparationOracle {
 public:
  std::vector<ReducedColumn> separate(const ReducedProblem&, const std::vector<Rational>&, std::size_t) override {
    return {};
  }
  [[nodiscard]] std::string name() const override { return "null"; }
};

std::unique_ptr<SeparationOracle> default_oracle(const ReducedProblem& problem);

/// Subset-sum transform for one PHP hole axiom over one-hole-per-pigeon
/// assignments: entry t is the sum of value(x) over assignments sending
/// `first` and `second` to `hole` and every other pigeon into its H-set.
/// The other pigeons are taken in increasing order, the k-th one's mask
/// being digit k (least significant first) in radix 2^(n-1).
std::vector<Int128> holeset_sums(int n, int first, int second, int hole,
                                 const std::function<Int128(PackedAssignment)>& value);
HoleSets holesets_from_index(int n, int first, int second, int hole, std::size_t index);

}  // namespace nsz::lp
