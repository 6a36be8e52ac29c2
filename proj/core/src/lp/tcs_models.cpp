#include "nsz/lp/tcs_models.hpp"

#include "nsz/errors.hpp"

#include <unordered_set>

namespace nsz::lp {

std::string to_string(ProofSystem proof) {
  return proof == ProofSystem::Nullstellensatz ? "nullstellensatz" : "resolution-like";
}

namespace {

std::string pattern_of(const PackedMonomial& m, const Support& support) {
  std::string bits((support.size() + 7) / 8, '\0');
  bool any = false;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (m.eval(support.points[i])) {
      bits[i / 8] = static_cast<char>(bits[i / 8] | (1 << (i % 8)));
      any = true;
    }
  }
  return any ? bits : std::string();
}

std::vector<std::pair<std::size_t, Rational>> column_of(const Monomial& m, const Support& support, int sign) {
  std::vector<std::pair<std::size_t, Rational>> col;
  PackedMonomial p = pack(m);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (p.eval(support.points[i])) col.emplace_back(i, Rational(sign));
  }
  return col;
}

std::string point_label(PackedAssignment x, std::size_t var_count) { return "D[" + format_bits(x, var_count) + "]"; }

std::string item_label(const AxiomSystem& sys, const TcsItem& item) {
  if (item.kind == TcsItem::Kind::Monomial) return "r[" + format_monomial(item.product) + "]";
  return sys.axiom(item.axiom_index).label + "*[" +
         format_monomial(item.product.quotient(sys.axiom(item.axiom_index).monomial)) + "]";
}

}  // namespace

std::vector<TcsItem> distinct_items(const AxiomSystem& sys, const Support& support, ProofSystem proof,
                                    std::uint64_t work_limit) {
  if (support.var_count != sys.var_count()) throw StructuralError("support does not match the system");
  std::uint64_t work = 0;
  for (std::size_t a = 0; a < sys.axioms().size(); ++a) {
    auto count = weakening_count(sys, a);
    if (!count || *count > work_limit) throw ParameterError("too many weakenings to enumerate");
    work += *count * std::max<std::uint64_t>(support.size(), 1);
    if (work > work_limit) throw ParameterError("weakening enumeration exceeds the work limit; use constraint generation");
  }
  std::unordered_set<std::string> seen;
  std::vector<TcsItem> items;
  for (std::size_t a = 0; a < sys.axioms().size(); ++a) {
    for_each_weakening_packed(sys, a, [&](const PackedMonomial& p) {
      auto key = pattern_of(p, support);
      if (key.empty() || !seen.insert(std::move(key)).second) return;
      items.push_back({TcsItem::Kind::Weakening, a, unpack(p)});
    });
  }
  if (proof == ProofSystem::ResolutionLike) {
    const std::size_t n = sys.var_count();
    if (n > 16) throw ParameterError("monomial enumeration is limited to 16 variables");
    std::unordered_set<std::string> seen_mono;
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < n; ++v) total *= 3;
    for (std::uint64_t t = 0; t < total; ++t) {
      PackedMonomial p;
      std::uint64_t rest = t;
      for (std::size_t v = 0; v < n; ++v) {
        auto digit = rest % 3;
        rest /= 3;
        if (digit == 1) p.pos |= std::uint64_t{1} << v;
        if (digit == 2) p.neg |= std::uint64_t{1} << v;
      }
      auto key = pattern_of(p, support);
      if (key.empty() || !seen_mono.insert(std::move(key)).second) continue;
      items.push_back({TcsItem::Kind::Monomial, 0, unpack(p)});
    }
  }
  return items;
}

TcsModel build_primal_tcs(const AxiomSystem& sys, const Support& support, ProofSystem proof) {
  TcsModel tcs{LpModel(Sense::Minimize), support, proof, distinct_items(sys, support, proof), {}};
  auto& model = tcs.model;
  std::vector<SparseRow> rows(support.size());
  for (const auto& item : tcs.items) {
    std::string label = item_label(sys, item);
    if (item.kind == TcsItem::Kind::Weakening) {
      std::size_t p = model.add_variable(label + "+", 1);
      std::size_t m = model.add_variable(label + "-", 1);
      tcs.first_index.push_back(p);
      for (auto& [i, a] : column_of(item.product, support, 1)) {
        rows[i].emplace_back(p, a);
        rows[i].emplace_back(m, -a);
      }
    } else {
      std::size_t q = model.add_variable(label, 1);
      tcs.first_index.push_back(q);
      for (auto& [i, a] : column_of(item.product, support, -1)) rows[i].emplace_back(q, a);
    }
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    model.add_row(std::move(rows[i]), Relation::Equal, 1, point_label(support.points[i], support.var_count));
  }
  return tcs;
}

namespace {

TcsModel build_dual(const AxiomSystem& sys, const Support& support, ProofSystem proof) {
  TcsModel tcs{LpModel(Sense::Maximize), support, proof, distinct_items(sys, support, proof), {}};
  auto& model = tcs.model;
  for (std::size_t i = 0; i < support.size(); ++i) {
    model.add_free_variable(point_label(support.points[i], support.var_count), 1);
  }
  for (const auto& item : tcs.items) {
    auto col = column_of(item.product, support, 1);
    std::string label = item_label(sys, item);
    if (item.kind == TcsItem::Kind::Weakening) {
      tcs.first_index.push_back(model.add_row(col, Relation::LessEq, 1, label));
      model.add_row(std::move(col), Relation::GreaterEq, -1, label);
    } else {
      tcs.first_index.push_back(model.add_row(std::move(col), Relation::GreaterEq, -1, label));
    }
  }
  return tcs;
}

}  // namespace

TcsModel build_dual_tcs(const AxiomSystem& sys, const Support& support) {
  return build_dual(sys, support, ProofSystem::Nullstellensatz);
}

TcsModel build_dual_resolution_like(const AxiomSystem& sys, const Support& support) {
  return build_dual(sys, support, ProofSystem::ResolutionLike);
}

namespace {

Rational target_of(ProofSystem proof) { return proof == ProofSystem::Nullstellensatz ? 1 : -1; }

// Weakening coefficients c_W and monomial weights t_r with
// sum c_W W + sum t_r (-r) = 1; the resolution-like certificate negates.
ProofCertificate assemble(std::shared_ptr<const AxiomSystem> sys, const TcsModel& tcs,
                          const std::vector<Rational>& coeff) {
  ProofCertificate cert(std::move(sys), target_of(tcs.proof));
  const Rational sign = tcs.proof == ProofSystem::Nullstellensatz ? 1 : -1;
  for (std::size_t k = 0; k < tcs.items.size(); ++k) {
    const auto& item = tcs.items[k];
    if (coeff[k] == 0) continue;
    if (item.kind == TcsItem::Kind::Weakening) {
      cert.add_product(item.axiom_index, item.product, sign * coeff[k]);
    } else {
      cert.add_monomial_term(item.product, coeff[k]);
    }
  }
  return cert;
}

}  // namespace

ProofCertificate certificate_from_primal(std::shared_ptr<const AxiomSystem> sys, const TcsModel& tcs,
                                         const LpSolution& solution) {
  if (tcs.model.sense() != Sense::Minimize) throw StructuralError("not a primal TCS model");
  if (solution.status != LpStatus::Optimal) throw StructuralError("certificate needs an optimal solution");
  std::vector<Rational> coeff(tcs.items.size());
  for (std::size_t k = 0; k < tcs.items.size(); ++k) {
    std::size_t j = tcs.first_index[k];
    coeff[k] = tcs.items[k].kind == TcsItem::Kind::Weakening ? Rational(solution.primal[j] - solution.primal[j + 1])
                                                              : solution.primal[j];
  }
  return assemble(std::move(sys), tcs, coeff);
}

ProofCertificate certificate_from_dual(std::shared_ptr<const AxiomSystem> sys, const TcsModel& tcs,
                                       const LpSolution& solution) {
  if (tcs.model.sense() != Sense::Maximize) throw StructuralError("not a dual TCS model");
  if (solution.status != LpStatus::Optimal) throw StructuralError("certificate needs an optimal solution");
  std::vector<Rational> coeff(tcs.items.size());
  for (std::size_t k = 0; k < tcs.items.size(); ++k) {
    std::size_t r = tcs.first_index[k];
    if (tcs.items[k].kind == TcsItem::Kind::Weakening) {
      coeff[k] = solution.dual[r] + solution.dual[r + 1];
    } else {
      coeff[k] = -solution.dual[r];
    }
  }
  return assemble(std::move(sys), tcs, coeff);
}

DualFunctional functional_from_dual(const TcsModel& tcs, const LpSolution& solution) {
  DualFunctional d(tcs.support.var_count);
  for (std::size_t i = 0; i < tcs.support.size(); ++i) d.set(tcs.support.points[i], solution.primal.at(i));
  return d;
}

DualFunctional functional_from_primal(const TcsModel& tcs, const LpSolution& solution) {
  DualFunctional d(tcs.support.var_count);
  for (std::size_t i = 0; i < tcs.support.size(); ++i) d.set(tcs.support.points[i], solution.dual.at(i));
  return d;
}

WeakDualityReport weak_duality_check(const ProofCertificate& cert, const DualFunctional& d, const AxiomSystem& sys) {
  if (cert.system().var_count() != sys.var_count() || d.var_count() != sys.var_count()) {
    throw StructuralError("certificate, functional and system disagree on the variables");
  }
  WeakDualityReport rep;
  rep.dual_value = d.total();
  rep.primal_tcs = cert.total_coefficient_size();
  for (const auto& [key, c] : cert.entries()) {
    Rational v = abs(d.apply(key.product));
    if (v > rep.max_abs_dw) rep.max_abs_dw = v;
  }
  rep.certificate_valid_on_support = verify_certificate_on(cert, d.support(), 1).ok;
  rep.holds = rep.dual_value <= rep.primal_tcs;
  return rep;
}

}  // namespace nsz::lp
