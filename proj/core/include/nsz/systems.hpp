#pragma once

// Axiom systems for the pigeonhole and ordering principles, weakening
// enumeration and the assignment supports used by the linear programs.
//
// Indices are 0-based in code. Variable and axiom names are 1-based, so
// pigeon 0 / hole 0 prints as x[1,1].

#include "nsz/algebra.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nsz {

enum class Family { Php, Ord, Custom };
enum class AxiomKind { PigeonTotal, HoleCollision, NonMinimality, Transitivity, Custom };

std::string to_string(Family family);
Family parse_family(std::string_view text);

struct Axiom {
  std::string label;
  Monomial monomial;
  AxiomKind kind = AxiomKind::Custom;
  /// pigeon: {i}; hole: {i1, i2, j}; nonmin: {i}; trans: the cycle a->b->c->a.
  std::vector<int> elements;
};

class AxiomSystem {
 public:
  AxiomSystem(Family family, int n, std::vector<std::string> var_names, std::vector<Axiom> axioms);

  [[nodiscard]] Family family() const noexcept { return family_; }
  /// Family parameter; 0 for custom systems.
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t var_count() const noexcept { return var_names_.size(); }
  [[nodiscard]] const std::vector<std::string>& var_names() const noexcept { return var_names_; }
  [[nodiscard]] const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
  [[nodiscard]] const Axiom& axiom(std::size_t index) const { return axioms_.at(index); }

  [[nodiscard]] std::optional<std::size_t> find_label(std::string_view label) const;
  [[nodiscard]] std::optional<std::size_t> find_monomial(const Monomial& m) const;
  /// Packed axiom monomials, in axiom order (requires var_count <= 64).
  [[nodiscard]] const std::vector<PackedMonomial>& packed_axioms() const;
  /// "php(4)", "ord(6)" or "custom".
  [[nodiscard]] std::string name() const;

 private:
  Family family_;
  int n_;
  std::vector<std::string> var_names_;
  std::vector<Axiom> axioms_;
  std::map<std::string, std::size_t, std::less<>> by_label_;
  std::map<Monomial, std::size_t> by_monomial_;
  std::vector<PackedMonomial> packed_;
};

AxiomSystem build_php(int n);
AxiomSystem build_ord(int n);
/// Rebuilds a family system from its tag; custom systems cannot be rebuilt.
AxiomSystem build_family(Family family, int n);

namespace php {
/// Variable x[i,j]: pigeon i, hole j, row-major.
inline VarId var(int n, int pigeon, int hole) { return static_cast<VarId>(pigeon * (n - 1) + hole); }
std::size_t pigeon_axiom(int n, int pigeon);
std::size_t hole_axiom(int n, int i1, int i2, int hole);
}  // namespace php

namespace ord {
/// Variable x[i,j] for i < j.
VarId var(int n, int i, int j);
/// Literal "i precedes j" for i != j: positive x[i,j] when i < j, else the
/// negation of x[j,i].
Monomial precedes(int n, int i, int j);
std::size_t nonmin_axiom(int n, int i);
/// Transitivity axiom whose 3-cycle is a->b->c->a (any rotation).
std::size_t transitivity_axiom(int n, int a, int b, int c);
/// Whether element i precedes element j under assignment x.
bool precedes(int n, PackedAssignment x, int i, int j);
bool has_minimum(int n, PackedAssignment x);
}  // namespace ord

struct Weakening {
  std::size_t axiom_index = 0;
  Monomial multiplier;
  Monomial product;
};

/// Every weakening of one axiom: multipliers range over the 3^(N-k) literal
/// patterns on the variables the axiom does not mention, in lexicographic
/// order with variable 0's state most significant (absent < positive < negative).
void for_each_weakening(const AxiomSystem& sys, std::size_t axiom_index,
                        const std::function<void(const Weakening&)>& visit);
/// Same order, packed products only. Requires var_count <= 64.
void for_each_weakening_packed(const AxiomSystem& sys, std::size_t axiom_index,
                               const std::function<void(const PackedMonomial&)>& visit);
/// 3^(N-k), or nullopt when it overflows 64 bits.
std::optional<std::uint64_t> weakening_count(const AxiomSystem& sys, std::size_t axiom_index);

// Assignment supports, sorted ascending by packed code.
std::vector<PackedAssignment> assignments_full(std::size_t var_count);
std::vector<PackedAssignment> assignments_one_hole_per_pigeon(int n);
std::vector<PackedAssignment> assignments_no_minimum(int n);
std::vector<PackedAssignment> assignments_with_minimum(int n);

/// A hole-axiom weakening seen through its effect on one-hole-per-pigeon
/// assignments: W(x) = 1 iff every pigeon i sits in a hole of masks[i].
struct HoleSets {
  int n = 0;
  int first = 0;
  int second = 1;
  int hole = 0;
  /// Bit h set when hole h is allowed; entries for `first` and `second`
  /// are forced to {hole} by the axiom.
  std::vector<std::uint32_t> masks;

  [[nodiscard]] std::uint32_t full_mask() const { return (std::uint32_t{1} << (n - 1)) - 1; }
  /// Evaluates on the assignment sending pigeon i to holes[i].
  [[nodiscard]] bool eval(const std::vector<int>& holes) const;
  friend bool operator==(const HoleSets&, const HoleSets&) = default;
};

/// Builds H-sets with every non-axiom pigeon unrestricted.
HoleSets make_holesets(int n, int first, int second, int hole);
/// Canonical weakening: x-bar[i,h] for each pigeon i outside the axiom pair
/// and each hole h not allowed for it.
Weakening holesets_to_weakening(const AxiomSystem& php_sys, const HoleSets& h);
/// Extracts H-sets from a hole-axiom weakening of a PHP system.
HoleSets holesets_of(const AxiomSystem& php_sys, const Weakening& w);

/// Hole of each pigeon for a one-hole-per-pigeon assignment; throws
/// StructuralError otherwise.
std::vector<int> decode_php_assignment(int n, PackedAssignment x);
PackedAssignment encode_php_assignment(int n, const std::vector<int>& holes);

}  // namespace nsz
