#pragma once

// Column generation on the symmetry-reduced primal (equivalently, row
// generation on the reduced dual). Each round solves the restricted LP,
// hands the orbit duals d to the oracle and appends the violated columns it
// returns; the loop stops when the oracle certifies d feasible, at which
// point the restricted optimum is optimal for the full program.

#include "nsz/lp/oracles.hpp"
#include "nsz/lp/simplex.hpp"

namespace nsz::lp {

struct CongenOptions {
  SimplexOptions simplex;
  std::size_t max_columns_per_round = 50;
  std::size_t max_rounds = 100'000;
};

struct CongenResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  /// Optimal D value on each orbit.
  std::vector<Rational> orbit_values;
  std::vector<ReducedColumn> columns;
  /// Per column: p - m for weakenings, the weight of -r for monomials.
  std::vector<Rational> weights;
  std::size_t rounds = 0;
  std::size_t pivots = 0;
};

/// Starts from `initial`, or from the problem's seed columns when empty.
/// Throws TimeoutError past the deadline and ParameterError when
/// max_rounds is exhausted.
CongenResult solve_with_constraint_generation(const ReducedProblem& problem, SeparationOracle& oracle,
                                              const CongenOptions& options = {},
                                              std::vector<ReducedColumn> initial = {});

/// D(x) = d of x's orbit.
DualFunctional expand_functional(const ReducedProblem& problem, const CongenResult& result);

/// Averages each column over the whole group: c_{gW} += w_W / |G|. Throws
/// ParameterError if the group has more than `element_limit` elements.
ProofCertificate expand_certificate(const ReducedProblem& problem, const CongenResult& result,
                                    std::size_t element_limit = 1'000'000);

}  // namespace nsz::lp
