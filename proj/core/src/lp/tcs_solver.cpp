#include "nsz/lp/tcs_solver.hpp"

#include "nsz/errors.hpp"

namespace nsz::lp {

std::string to_string(SupportMode mode) { return mode == SupportMode::Full ? "full" : "restricted"; }

std::string to_string(TcsMethod method) {
  switch (method) {
    case TcsMethod::Auto: return "auto";
    case TcsMethod::Primal: return "primal";
    case TcsMethod::Dual: return "dual";
    case TcsMethod::ColumnGeneration: return "congen";
  }
  return "auto";
}

SupportMode parse_support_mode(std::string_view text) {
  if (text == "full") return SupportMode::Full;
  if (text == "restricted") return SupportMode::Restricted;
  throw ParameterError("unknown support mode '" + std::string(text) + "'");
}

TcsMethod parse_tcs_method(std::string_view text) {
  for (auto m : {TcsMethod::Auto, TcsMethod::Primal, TcsMethod::Dual, TcsMethod::ColumnGeneration}) {
    if (text == to_string(m)) return m;
  }
  throw ParameterError("unknown method '" + std::string(text) + "'");
}

ProofSystem parse_proof_system(std::string_view text) {
  for (auto p : {ProofSystem::Nullstellensatz, ProofSystem::ResolutionLike}) {
    if (text == to_string(p)) return p;
  }
  throw ParameterError("unknown proof system '" + std::string(text) + "'");
}

Support make_support(const AxiomSystem& sys, SupportMode mode) {
  if (mode == SupportMode::Full) return Support::full(sys);
  switch (sys.family()) {
    case Family::Php: return Support::php_restricted(sys.n());
    case Family::Ord: return Support::ord_no_minimum(sys.n());
    case Family::Custom: break;
  }
  throw ParameterError("restricted supports exist for PHP and ORD only");
}

namespace {

TcsResult solve_plain(const TcsRequest& request, std::shared_ptr<const AxiomSystem> sys, Support support) {
  TcsResult out;
  out.method = request.method;
  out.rounds = 1;
  const bool primal = request.method == TcsMethod::Primal;
  TcsModel tcs = primal ? build_primal_tcs(*sys, support, request.proof)
                 : request.proof == ProofSystem::Nullstellensatz ? build_dual_tcs(*sys, support)
                                                                 : build_dual_resolution_like(*sys, support);
  LpSolution sol = simplex_solve(tcs.model, request.simplex);
  if (sol.status != LpStatus::Optimal) {
    throw StructuralError("TCS program is " + to_string(sol.status) + " for " + sys->name());
  }
  out.value = sol.value;
  out.pivots = sol.pivots;
  out.lp_rows = tcs.model.row_count();
  out.lp_columns = tcs.model.var_count();
  out.dual = primal ? functional_from_primal(tcs, sol) : functional_from_dual(tcs, sol);
  if (request.want_certificate) {
    out.certificate = primal ? certificate_from_primal(sys, tcs, sol) : certificate_from_dual(sys, tcs, sol);
  }
  out.system = std::move(sys);
  out.support = std::move(support);
  return out;
}

TcsResult solve_congen(const TcsRequest& request, std::shared_ptr<const AxiomSystem> sys, Support support) {
  ReducedProblem problem(sys, support, SymmetryGroup::of(*sys), request.proof);
  auto oracle = default_oracle(problem);
  CongenOptions options;
  options.simplex = request.simplex;
  options.max_columns_per_round = request.columns_per_round;
  CongenResult res = solve_with_constraint_generation(problem, *oracle, options);
  if (res.status != LpStatus::Optimal) {
    throw StructuralError("TCS program is " + to_string(res.status) + " for " + sys->name());
  }
  TcsResult out;
  out.method = TcsMethod::ColumnGeneration;
  out.value = res.value;
  out.pivots = res.pivots;
  out.rounds = res.rounds;
  out.lp_rows = problem.orbits().orbit_count();
  out.lp_columns = res.columns.size();
  out.dual = expand_functional(problem, res);
  if (request.want_certificate) out.certificate = expand_certificate(problem, res, request.certificate_group_limit);
  out.system = std::move(sys);
  out.support = std::move(support);
  return out;
}

}  // namespace

TcsResult solve_tcs(const TcsRequest& request) {
  auto sys = std::make_shared<const AxiomSystem>(build_family(request.family, request.n));
  Support support = make_support(*sys, request.mode);
  if (request.method == TcsMethod::Auto || request.method == TcsMethod::ColumnGeneration) {
    return solve_congen(request, std::move(sys), std::move(support));
  }
  return solve_plain(request, std::move(sys), std::move(support));
}

}  // namespace nsz::lp
