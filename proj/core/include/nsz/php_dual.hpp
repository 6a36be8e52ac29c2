#pragma once

// The explicit PHP(n) dual functional
//   D = sum over S != [n] of c_|S| J_S,
//   c_s = (-1)^(n-1-s) (n-1-s)! / (n-1)^(n-1-s),
// where J_S(x) = 1 when the pigeons of S sit in pairwise distinct holes.
// D lives on one-hole-per-pigeon assignments; E(.) is the uniform
// expectation over those (n-1)^n assignments.

#include "nsz/algebra.hpp"
#include "nsz/lp/support.hpp"
#include "nsz/systems.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nsz::php_dual {

/// Hole of each pigeon, 0-based.
using Holes = std::vector<int>;

/// Visits all (n-1)^n one-hole-per-pigeon assignments, last pigeon fastest.
void for_each_restricted(int n, const std::function<void(const Holes&)>& visit);
/// (n-1)^n.
Integer restricted_count(int n);

/// c_S for |S| = size.
Rational coefficient(int n, int size);
/// J_S(x), S given as a bit set of pigeons; throws ParameterError if S = [n].
bool j_eval(int n, std::uint32_t pigeons, const Holes& x);
/// D(x) via hole occupancies: sum_s c_s e_s(occupancy counts).
Rational d_eval(int n, const Holes& x);
/// D(x) by summing c_S J_S over all 2^n - 1 proper subsets.
Rational d_eval_subsets(int n, const Holes& x);
/// D on a packed PHP(n) assignment; 0 off the one-hole-per-pigeon set.
Rational d_eval(int n, PackedAssignment x);
/// D(x) (n-1)^(n-1), always an integer.
Integer scaled_d(int n, const Holes& x);
/// D as a finitely supported functional (unnormalized sums).
lp::DualFunctional functional(int n);

Rational exp_j_closed(int n, int size);
Rational exp_d_closed(int n);
Rational exp_d_brute(int n);

/// E(D p) by summation.
Rational exp_dp(int n, const Polynomial& p);
/// E(J_S p) by summation.
Rational exp_jp(int n, std::uint32_t pigeons, const Polynomial& p);

/// E(DW) for a hole-axiom weakening given by its H-sets, by direct summation.
Rational exp_dw(int n, const HoleSets& h);
/// Complements the H-sets of the pigeons in `pigeons` (axiom pigeons ignored).
HoleSets flip(const HoleSets& h, std::uint32_t pigeons);
/// E(D W^{-1,0,1}): on assignments sending both axiom pigeons to the axiom
/// hole, (-1)^(number of other pigeons outside their H-set); 0 elsewhere.
Rational exp_dw_signed(int n, const HoleSets& h);

struct Extremal {
  Rational max_abs;
  HoleSets witness;
};
/// max over all weakenings of |E(DW)| with one maximizing H-set tuple, by a
/// subset-sum transform over the H-sets of the axiom x[1,1] x[2,1]; every
/// other hole axiom is its image under a pigeon/hole permutation and pigeon
/// axiom weakenings vanish on the support. 3 <= n <= 6.
Extremal max_abs_exp_dw(int n);
/// E(D) / max |E(DW)|.
Rational dual_value(int n);
/// Extremal candidate: axiom x[1,1] x[2,1]; odd n gives every other pigeon
/// holes 2..(n+1)/2; even n gives pigeons 3..n/2+1 holes 2..n/2 and the rest
/// holes n/2+1..n-1 (1-based).
HoleSets conjectured_extremal_weakening(int n);

Rational norm_d_squared_closed(int n);
Rational norm_d_squared_brute(int n);
/// Terms of the alternating sum in the closed form of E(D^2), largest first
/// (c = n-1 down to 0).
std::vector<Rational> norm_series_terms(int n);
/// n! / (n-1)^(n-1).
Rational norm_d_squared_bound(int n);

/// a sqrt(b) with a, b >= 0 rational.
struct RootValue {
  Rational a;
  Rational b;
  [[nodiscard]] Rational squared() const { return a * a * b; }
  /// Rounded half up at `places` decimals, exactly.
  [[nodiscard]] std::string decimal(unsigned places) const;
  [[nodiscard]] double approx() const;
  /// Exact comparison with a nonnegative rational.
  [[nodiscard]] bool at_most(const Rational& value) const;
};
/// 2^(n-2) (n-1) / sqrt(n) * sqrt((n-1)! / (n-1)^(n-1)).
RootValue php_lower_bound(int n);
/// E(D) (n-1) 2^(n-2) / sqrt(E(D^2)), the bound before the rough norm estimate.
RootValue norm_based_bound(int n);

// Value of D on products of x-bar[i,1] used for the resolution-like system.
/// prod_i x-bar[i,1].
Monomial no_pigeon_in_first_hole(int n);
/// -(n-2)!/(n-1)^(n-1) (1 - (-1)^(n-1)/(n-1)^(n-2)), as printed.
Rational resolution_failure_closed(int n);
/// -(n-2)!/(n-1)^(n-1) (1 - 1/(n-1)^(n-2)), what summation gives for all n.
Rational resolution_failure_corrected(int n);
/// E(D prod_i x-bar[i,1]) by summation.
Rational resolution_failure_brute(int n);

struct FailureObservations {
  Rational others_avoid_first_hole;        // prod_{i>=2} x-bar[i,1]
  Rational first_in_rest_avoid;            // x[1,1] prod_{i>=3} x-bar[i,1]
  Rational first_two_in_rest_avoid;        // x[1,1] x[2,1] prod_{i>=3} x-bar[i,1]
};
/// The three intermediate values as printed: 0, (n-2)!/(n-1)^(n-1) and
/// (-1)^(n-2) (n-2)!/(n-1)^(2n-3).
FailureObservations failure_observations_closed(int n);
FailureObservations failure_observations_brute(int n);
/// The monomials behind the three observations.
std::vector<Monomial> failure_observation_monomials(int n);

}  // namespace nsz::php_dual
