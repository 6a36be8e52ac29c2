#pragma once

// One entry point for "minimum total coefficient size of PHP(n) / ORD(n)
// over a support", dispatching to the plain primal or dual LP or to
// symmetric column generation.

#include "nsz/lp/congen.hpp"
#include "nsz/lp/tcs_models.hpp"

#include <optional>
#include <string>

namespace nsz::lp {

enum class SupportMode {
  Full,        // every assignment
  Restricted,  // PHP: one hole per pigeon; ORD: no minimum element
};

enum class TcsMethod {
  Auto,                // column generation for family systems
  Primal,              // plain primal LP over distinct weakenings
  Dual,                // plain dual LP
  ColumnGeneration,
};

std::string to_string(SupportMode mode);
std::string to_string(TcsMethod method);
SupportMode parse_support_mode(std::string_view text);
TcsMethod parse_tcs_method(std::string_view text);
ProofSystem parse_proof_system(std::string_view text);

Support make_support(const AxiomSystem& sys, SupportMode mode);

struct TcsRequest {
  Family family = Family::Php;
  int n = 3;
  SupportMode mode = SupportMode::Full;
  ProofSystem proof = ProofSystem::Nullstellensatz;
  TcsMethod method = TcsMethod::Auto;
  SimplexOptions simplex;
  std::size_t columns_per_round = 50;
  bool want_certificate = true;
  /// Column generation only expands certificates over groups this small.
  std::size_t certificate_group_limit = 20'000;
};

struct TcsResult {
  std::shared_ptr<const AxiomSystem> system;
  Support support;
  Rational value = 0;
  DualFunctional dual;
  std::optional<ProofCertificate> certificate;
  TcsMethod method = TcsMethod::Auto;
  std::size_t pivots = 0;
  std::size_t rounds = 0;  // column generation rounds, 1 for plain LPs
  std::size_t lp_rows = 0;
  std::size_t lp_columns = 0;
};

/// Throws TimeoutError past the simplex deadline and StructuralError if the
/// program is infeasible.
TcsResult solve_tcs(const TcsRequest& request);

}  // namespace nsz::lp
