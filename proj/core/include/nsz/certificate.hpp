#pragma once

// Proof certificates checked pointwise over {0,1}^N:
//   sum_W c_W W(x) + sum_j g_j(x)^2 + sum_r t_r r(x) = target
// Nullstellensatz proofs use target +1 with entries only; sum-of-squares
// proofs add squares and use target -1; resolution-like proofs add
// nonnegative monomial terms t_r and use target -1.

#include "nsz/algebra.hpp"
#include "nsz/systems.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace nsz {

struct WeakeningKey {
  std::size_t axiom_index = 0;
  Monomial product;
  friend bool operator==(const WeakeningKey&, const WeakeningKey&) = default;
  friend auto operator<=>(const WeakeningKey&, const WeakeningKey&) = default;
};

class ProofCertificate {
 public:
  using Entries = std::map<WeakeningKey, Rational>;

  ProofCertificate(std::shared_ptr<const AxiomSystem> system, Rational target);

  [[nodiscard]] const AxiomSystem& system() const { return *system_; }
  [[nodiscard]] const std::shared_ptr<const AxiomSystem>& system_ptr() const { return system_; }
  [[nodiscard]] const Rational& target() const noexcept { return target_; }
  [[nodiscard]] const Entries& entries() const noexcept { return entries_; }
  [[nodiscard]] const std::vector<Polynomial>& squares() const noexcept { return squares_; }
  [[nodiscard]] const std::map<Monomial, Rational>& monomial_terms() const noexcept { return monomial_terms_; }

  /// Adds coeff * axiom * multiplier. ZERO products are dropped; entries
  /// whose coefficients cancel disappear.
  void add(std::size_t axiom_index, const Monomial& multiplier, const Rational& coeff);
  /// Same with the product given directly; the axiom must divide it.
  void add_product(std::size_t axiom_index, const Monomial& product, const Rational& coeff);
  void erase(const WeakeningKey& key);
  void add_square(Polynomial g);
  /// Nonnegative multiple of a monomial (resolution-like proofs).
  void add_monomial_term(const Monomial& r, const Rational& coeff);

  /// Multiplier of an entry: product with the axiom literals removed.
  [[nodiscard]] Monomial multiplier(const WeakeningKey& key) const;

  /// sum |c_W| + sum T(g_j)^2 + sum t_r.
  [[nodiscard]] Rational total_coefficient_size() const;

 private:
  std::shared_ptr<const AxiomSystem> system_;
  Rational target_;
  Entries entries_;
  std::vector<Polynomial> squares_;
  std::map<Monomial, Rational> monomial_terms_;
};

struct VerifyResult {
  bool ok = false;
  /// Lowest failing assignment (by packed code, or by index in the given
  /// point list) when not ok.
  std::optional<PackedAssignment> witness;
  std::uint64_t points_checked = 0;
};

/// Checks the identity on all 2^N assignments (N <= 40).
VerifyResult verify_certificate(const ProofCertificate& cert, unsigned threads = 0);
/// Checks the identity on the listed assignments only.
VerifyResult verify_certificate_on(const ProofCertificate& cert, const std::vector<PackedAssignment>& points,
                                   unsigned threads = 0);
/// Left-hand side of the identity at one assignment.
Rational certificate_value(const ProofCertificate& cert, PackedAssignment x);

/// Worker count used when `threads` is 0.
unsigned default_threads();

}  // namespace nsz
