#pragma once

// Explicit certificates for ORD(n): the recursive 0/1 Nullstellensatz proof
// with 2^n - n weakenings, the transform that turns a proof valid only on
// tournaments without a minimum into a full proof, and the sum-of-squares
// proof built from the prefix-minimum monomials F and T.
//
// Elements are 0-based in code; labels print them 1-based.

#include "nsz/certificate.hpp"

#include <memory>
#include <vector>

namespace nsz::ord_proofs {

/// Nonminimality axioms with coefficient 1 plus 2^n - 2n transitivity
/// weakenings with coefficient 1. 3 <= n <= 11.
ProofCertificate build_ord_proof(int n);

/// Orientation graph of a monomial: an edge a -> b for each literal saying
/// a precedes b.
std::vector<std::pair<int, int>> orientation_edges(int n, const Monomial& m);
/// A transitivity weakening is nice when its graph has exactly n edges and
/// every element is reachable from the smallest element of the axiom's
/// triple.
bool is_nice_transitivity(const AxiomSystem& sys, const WeakeningKey& key);
/// Every transitivity entry with a nonzero coefficient is nice.
bool check_nice_transitivity(const ProofCertificate& cert);

struct PartitionReport {
  bool ok = false;
  /// First assignment where the number of nonzero entries equal to 1 is not
  /// exactly one.
  std::optional<PackedAssignment> witness;
  std::uint64_t points_checked = 0;
};
/// Exactly one nonzero-coefficient entry is 1 at every assignment.
PartitionReport check_partition(const ProofCertificate& cert, unsigned threads = 0);

/// C' = C - sum_i C_i + sum_i A_i with C_i(A_i W) = sum over W' with
/// A_i W' = A_i W of C(W'), charged to the nonminimality axiom A_i.
/// Throws VerificationError when the input fails on some tournament without
/// a minimum, and ParameterError for non-Nullstellensatz input.
ProofCertificate restrict_to_no_min(const ProofCertificate& partial);

/// F_jm: j precedes every other element of the prefix {0..m-1}.
Monomial prefix_first(int n, int j, int m);
/// T_jmk for a prefix of size m (1 <= m <= n-1), distinct j, k < m: F_jm,
/// m precedes j, k precedes m, m precedes every i < k other than j.
Monomial prefix_link(int n, int j, int m, int k);
/// The square g_m = F_{m,m+1} - sum_{j<m} F_jm F_{m,m+1}, for a prefix of size m.
Polynomial sos_square(int n, int m);
/// -1 = sum_m (g_m^2 - sum T_jmk) - sum_j F_jn with nonminimality axioms F_jn.
/// Squares that cancel to zero are omitted.
ProofCertificate build_sos_ord_proof(int n);
/// F_jm = F_{j,m+1} + sum_k T_jmk + F_jm F_{m,m+1} at one assignment.
bool building_block_holds(int n, int j, int m, PackedAssignment x);
/// The identity above on every assignment, for every 1 <= m <= n-1, j < m.
bool check_building_block(int n);

/// sum |c| + sum T(g)^2.
Rational sos_total_coefficient_size(const ProofCertificate& cert);

}  // namespace nsz::ord_proofs
