#pragma once

// Seeded random objects for the expectation-law checks.

#include "nsz/algebra.hpp"
#include "nsz/systems.hpp"

#include <cstdint>
#include <random>

namespace nsz::cli {

using Rng = std::mt19937_64;

/// Random hole axiom with independent uniformly random H-sets.
HoleSets random_holesets(int n, Rng& rng);
/// Random subset of the pigeons outside the axiom pair, as a bit set.
std::uint32_t random_other_pigeons(const HoleSets& h, Rng& rng);
/// A few monomials over the variables of every pigeon except `skip`, with
/// small rational coefficients.
Polynomial random_polynomial_ignoring(int n, int skip, Rng& rng);

}  // namespace nsz::cli
