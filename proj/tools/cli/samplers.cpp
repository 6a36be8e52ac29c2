#include "samplers.hpp"

namespace nsz::cli {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

HoleSets random_holesets(int n, Rng& rng) {
  int first = uniform(rng, 0, n - 1);
  int second = uniform(rng, 0, n - 2);
  if (second >= first) ++second;
  HoleSets h = make_holesets(n, std::min(first, second), std::max(first, second), uniform(rng, 0, n - 2));
  for (int i = 0; i < n; ++i) {
    if (i == h.first || i == h.second) continue;
    h.masks[i] = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(h.full_mask())));
  }
  return h;
}

std::uint32_t random_other_pigeons(const HoleSets& h, Rng& rng) {
  std::uint32_t s = 0;
  for (int i = 0; i < h.n; ++i) {
    if (i != h.first && i != h.second && uniform(rng, 0, 1) == 1) s |= 1u << i;
  }
  return s;
}

Polynomial random_polynomial_ignoring(int n, int skip, Rng& rng) {
  Polynomial p;
  int terms = uniform(rng, 1, 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<VarId> pos;
    std::vector<VarId> neg;
    int degree = uniform(rng, 0, 3);
    for (int d = 0; d < degree; ++d) {
      int pigeon = uniform(rng, 0, n - 2);
      if (pigeon >= skip) ++pigeon;
      VarId v = php::var(n, pigeon, uniform(rng, 0, n - 2));
      (uniform(rng, 0, 1) == 1 ? pos : neg).push_back(v);
    }
    p.add_term(Monomial::from_literals(pos, neg), make_rational(uniform(rng, -5, 5), uniform(rng, 1, 4)));
  }
  return p;
}

}  // namespace nsz::cli
