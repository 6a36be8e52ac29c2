#pragma once

// The total-coefficient-size linear programs over a finite support.
//
// Primal: min sum_W (p_W + m_W)  s.t.  sum_W (p_W - m_W) W(x) = 1  for x in support.
// Dual:   max sum_x D(x)         s.t.  -1 <= sum_x W(x) D(x) <= 1  for every W.
// The resolution-like variant adds a column -r (cost 1) per monomial r in the
// primal and the row sum_x r(x) D(x) >= -1 in the dual.
//
// Weakenings with identical value patterns on the support give identical
// columns (rows), so only the first in enumeration order is kept; weakenings
// vanishing on the whole support are dropped.

#include "nsz/certificate.hpp"
#include "nsz/lp/model.hpp"
#include "nsz/lp/support.hpp"
#include "nsz/systems.hpp"

#include <memory>
#include <vector>

namespace nsz::lp {

enum class ProofSystem { Nullstellensatz, ResolutionLike };

std::string to_string(ProofSystem proof);

struct TcsItem {
  enum class Kind { Weakening, Monomial };
  Kind kind = Kind::Weakening;
  std::size_t axiom_index = 0;  // weakenings only
  Monomial product;
};

struct TcsModel {
  LpModel model;
  Support support;
  ProofSystem proof = ProofSystem::Nullstellensatz;
  std::vector<TcsItem> items;
  /// Primal: first column of each item (weakenings own p then m, monomials
  /// one column). Dual: first row of each item (weakenings own <= 1 then
  /// >= -1, monomials one row).
  std::vector<std::size_t> first_index;
};

/// Weakenings (and, for the resolution-like system, monomials) with
/// distinct nonzero patterns on the support. Throws ParameterError if the
/// enumeration would exceed `work_limit` evaluations.
std::vector<TcsItem> distinct_items(const AxiomSystem& sys, const Support& support, ProofSystem proof,
                                    std::uint64_t work_limit = 2'000'000'000);

TcsModel build_primal_tcs(const AxiomSystem& sys, const Support& support,
                          ProofSystem proof = ProofSystem::Nullstellensatz);
TcsModel build_dual_tcs(const AxiomSystem& sys, const Support& support);
TcsModel build_dual_resolution_like(const AxiomSystem& sys, const Support& support);

/// Certificate read from a primal optimum: c_W = p_W - m_W.
ProofCertificate certificate_from_primal(std::shared_ptr<const AxiomSystem> sys, const TcsModel& tcs,
                                         const LpSolution& solution);
/// Certificate read from the row duals of a dual optimum.
ProofCertificate certificate_from_dual(std::shared_ptr<const AxiomSystem> sys, const TcsModel& tcs,
                                       const LpSolution& solution);
/// D from a dual optimum (its primal variables).
DualFunctional functional_from_dual(const TcsModel& tcs, const LpSolution& solution);
/// D from a primal optimum (its row duals).
DualFunctional functional_from_primal(const TcsModel& tcs, const LpSolution& solution);

struct WeakDualityReport {
  bool holds = false;
  /// The certificate identity holds on the functional's support.
  bool certificate_valid_on_support = false;
  /// max over the certificate's weakenings of |D(W)|.
  Rational max_abs_dw = 0;
  Rational dual_value = 0;
  Rational primal_tcs = 0;
};

/// D(1) = sum_W c_W D(W) <= sum_W |c_W| max|D(W)|. Reports both sides and
/// whether D(1) <= TCS, given that D is feasible on the certificate's
/// weakenings and the certificate is valid where D is supported.
WeakDualityReport weak_duality_check(const ProofCertificate& cert, const DualFunctional& d,
                                     const AxiomSystem& sys);

}  // namespace nsz::lp
