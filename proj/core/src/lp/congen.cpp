#include "nsz/lp/congen.hpp"

#include "nsz/errors.hpp"

#include <set>

namespace nsz::lp {

namespace {

SparseRow to_sparse(const std::vector<std::int64_t>& counts, std::int64_t sign) {
  SparseRow row;
  for (std::size_t o = 0; o < counts.size(); ++o) {
    if (counts[o] != 0) row.emplace_back(o, Rational(sign * counts[o]));
  }
  return row;
}

}  // namespace

CongenResult solve_with_constraint_generation(const ReducedProblem& problem, SeparationOracle& oracle,
                                              const CongenOptions& options, std::vector<ReducedColumn> initial) {
  const OrbitPartition& orbits = problem.orbits();
  std::vector<Rational> rhs;
  rhs.reserve(orbits.orbit_count());
  for (auto s : orbits.size) rhs.emplace_back(static_cast<long>(s));
  StandardFormSimplex engine(std::move(rhs), options.simplex);

  CongenResult result;
  std::vector<std::size_t> first_engine_column;
  std::set<std::pair<TcsItem::Kind, std::vector<std::int64_t>>> seen;
  auto append = [&](ReducedColumn col) {
    if (!seen.emplace(col.item.kind, col.counts).second) return false;
    if (col.item.kind == TcsItem::Kind::Weakening) {
      first_engine_column.push_back(engine.add_column(to_sparse(col.counts, 1), 1));
      engine.add_column(to_sparse(col.counts, -1), 1);
    } else {
      first_engine_column.push_back(engine.add_column(to_sparse(col.counts, -1), 1));
    }
    result.columns.push_back(std::move(col));
    return true;
  };

  if (initial.empty()) initial = problem.seed_columns();
  for (auto& col : initial) append(std::move(col));

  for (;;) {
    if (result.rounds >= options.max_rounds) throw ParameterError("column generation exceeded its round limit");
    ++result.rounds;
    LpStatus status = engine.solve();
    result.pivots = engine.pivots();
    if (status != LpStatus::Optimal) {
      result.status = status;
      return result;
    }
    std::vector<Rational> d = engine.duals();
    std::size_t added = 0;
    for (auto& col : oracle.separate(problem, d, options.max_columns_per_round)) {
      if (append(std::move(col))) ++added;
    }
    if (added == 0) {
      result.status = LpStatus::Optimal;
      result.value = engine.value();
      result.orbit_values = std::move(d);
      break;
    }
  }

  std::vector<Rational> x = engine.primal();
  result.weights.reserve(result.columns.size());
  for (std::size_t k = 0; k < result.columns.size(); ++k) {
    std::size_t j = first_engine_column[k];
    result.weights.push_back(result.columns[k].item.kind == TcsItem::Kind::Weakening ? Rational(x[j] - x[j + 1])
                                                                                      : x[j]);
  }
  return result;
}

DualFunctional expand_functional(const ReducedProblem& problem, const CongenResult& result) {
  if (result.status != LpStatus::Optimal) throw StructuralError("functional needs an optimal result");
  DualFunctional d(problem.support().var_count);
  const auto& points = problem.support().points;
  for (std::size_t i = 0; i < points.size(); ++i) d.set(points[i], result.orbit_values[problem.orbits().label[i]]);
  return d;
}

ProofCertificate expand_certificate(const ReducedProblem& problem, const CongenResult& result,
                                    std::size_t element_limit) {
  if (result.status != LpStatus::Optimal) throw StructuralError("certificate needs an optimal result");
  const AxiomSystem& sys = problem.system();
  const bool nullstellensatz = problem.proof() == ProofSystem::Nullstellensatz;
  ProofCertificate cert(problem.system_ptr(), nullstellensatz ? Rational(1) : Rational(-1));
  std::vector<SignedPermutation> elements = problem.group().elements(element_limit);
  const Rational share = Rational(1) / Rational(static_cast<long>(elements.size()));
  const Rational sign = nullstellensatz ? 1 : -1;
  for (std::size_t k = 0; k < result.columns.size(); ++k) {
    if (result.weights[k] == 0) continue;
    const TcsItem& item = result.columns[k].item;
    const Rational c = result.weights[k] * share;
    for (const auto& g : elements) {
      Monomial product = g.apply(item.product);
      if (item.kind == TcsItem::Kind::Monomial) {
        cert.add_monomial_term(product, c);
        continue;
      }
      auto axiom = sys.find_monomial(g.apply(sys.axiom(item.axiom_index).monomial));
      if (!axiom) throw StructuralError("group does not preserve the axioms");
      cert.add_product(*axiom, product, sign * c);
    }
  }
  return cert;
}

}  // namespace nsz::lp
