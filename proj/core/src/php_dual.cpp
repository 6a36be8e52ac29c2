#include "nsz/php_dual.hpp"

#include "nsz/errors.hpp"
#include "nsz/lp/oracles.hpp"

#include <bit>
#include <cmath>

namespace nsz::php_dual {

namespace {

void check_n(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw ParameterError("n = " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Integer pow_int(long base, int exponent) { return power(Integer(base), static_cast<unsigned>(exponent)); }

// Elementary symmetric polynomials e_0..e_n of the hole occupancies.
std::vector<Integer> elementary(int n, const Holes& x) {
  std::vector<long> occupancy(static_cast<std::size_t>(n - 1), 0);
  for (int h : x) ++occupancy.at(static_cast<std::size_t>(h));
  std::vector<Integer> e(static_cast<std::size_t>(n) + 1, 0);
  e[0] = 1;
  for (long m : occupancy) {
    if (m == 0) continue;
    for (std::size_t s = e.size() - 1; s >= 1; --s) e[s] += e[s - 1] * m;
  }
  return e;
}

void check_holes(int n, const Holes& x) {
  if (x.size() != static_cast<std::size_t>(n)) throw StructuralError("one hole per pigeon expected");
  for (int h : x) {
    if (h < 0 || h >= n - 1) throw StructuralError("hole index out of range");
  }
}

Rational normalize(const Rational& sum, int n) { return sum / Rational(restricted_count(n)); }

Rational exp_where(int n, const std::function<Rational(const Holes&)>& weight) {
  Rational sum = 0;
  for_each_restricted(n, [&](const Holes& x) {
    Rational w = weight(x);
    if (w != 0) sum += w * d_eval(n, x);
  });
  return normalize(sum, n);
}

Rational exp_monomial(int n, const Monomial& m) {
  PackedMonomial p = pack(m);
  return exp_where(n, [&](const Holes& x) { return Rational(p.eval(encode_php_assignment(n, x)) ? 1 : 0); });
}

}  // namespace

void for_each_restricted(int n, const std::function<void(const Holes&)>& visit) {
  check_n(n, 2, 12);
  Holes x(static_cast<std::size_t>(n), 0);
  for (;;) {
    visit(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == n - 2) x[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

Integer restricted_count(int n) { return pow_int(n - 1, n); }

Rational coefficient(int n, int size) {
  check_n(n, 2, 64);
  if (size < 0 || size >= n) throw ParameterError("coefficient defined for 0 <= |S| <= n-1");
  const int k = n - 1 - size;
  Rational c(factorial(static_cast<unsigned>(k)), pow_int(n - 1, k));
  c.canonicalize();
  return k % 2 == 0 ? c : Rational(-c);
}

bool j_eval(int n, std::uint32_t pigeons, const Holes& x) {
  check_holes(n, x);
  if (std::popcount(pigeons) >= n) throw ParameterError("J_S needs S to be a proper subset of the pigeons");
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    if (!((pigeons >> i) & 1U)) continue;
    std::uint32_t bit = std::uint32_t{1} << x[static_cast<std::size_t>(i)];
    if (used & bit) return false;
    used |= bit;
  }
  return true;
}

Integer scaled_d(int n, const Holes& x) {
  check_holes(n, x);
  std::vector<Integer> e = elementary(n, x);
  Integer total = 0;
  for (int s = 0; s <= n - 1; ++s) {
    const int k = n - 1 - s;
    Integer term = factorial(static_cast<unsigned>(k)) * pow_int(n - 1, s) * e[static_cast<std::size_t>(s)];
    total += k % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

Rational d_eval(int n, const Holes& x) {
  Rational r(scaled_d(n, x), pow_int(n - 1, n - 1));
  r.canonicalize();
  return r;
}

Rational d_eval_subsets(int n, const Holes& x) {
  check_holes(n, x);
  Rational total = 0;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (j_eval(n, s, x)) total += coefficient(n, std::popcount(s));
  }
  return total;
}

Rational d_eval(int n, PackedAssignment x) {
  try {
    return d_eval(n, decode_php_assignment(n, x));
  } catch (const StructuralError&) {
    return 0;
  }
}

lp::DualFunctional functional(int n) {
  const auto var_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
  lp::DualFunctional d(var_count);
  for_each_restricted(n, [&](const Holes& x) { d.set(encode_php_assignment(n, x), d_eval(n, x)); });
  return d;
}

Rational exp_j_closed(int n, int size) {
  Integer num = 1;
  for (int k = 1; k <= size; ++k) num *= n - k;
  Rational r(num, pow_int(n - 1, size));
  r.canonicalize();
  return r;
}

Rational exp_d_closed(int n) {
  check_n(n, 2, 64);
  Rational r(factorial(static_cast<unsigned>(n - 2)), pow_int(n - 1, n - 2));
  r.canonicalize();
  return r;
}

Rational exp_d_brute(int n) {
  check_n(n, 2, 8);
  return exp_where(n, [](const Holes&) { return Rational(1); });
}

Rational exp_dp(int n, const Polynomial& p) {
  std::vector<std::pair<PackedMonomial, Rational>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(pack(m), c);
  return exp_where(n, [&](const Holes& x) {
    PackedAssignment code = encode_php_assignment(n, x);
    Rational v = 0;
    for (const auto& [m, c] : terms) {
      if (m.eval(code)) v += c;
    }
    return v;
  });
}

Rational exp_jp(int n, std::uint32_t pigeons, const Polynomial& p) {
  Rational sum = 0;
  std::vector<std::pair<PackedMonomial, Rational>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(pack(m), c);
  for_each_restricted(n, [&](const Holes& x) {
    if (!j_eval(n, pigeons, x)) return;
    PackedAssignment code = encode_php_assignment(n, x);
    for (const auto& [m, c] : terms) {
      if (m.eval(code)) sum += c;
    }
  });
  return normalize(sum, n);
}

Rational exp_dw(int n, const HoleSets& h) {
  if (h.n != n) throw ParameterError("H-sets belong to a different n");
  return exp_where(n, [&](const Holes& x) { return Rational(h.eval(x) ? 1 : 0); });
}

HoleSets flip(const HoleSets& h, std::uint32_t pigeons) {
  HoleSets out = h;
  for (int i = 0; i < h.n; ++i) {
    if (i == h.first || i == h.second || !((pigeons >> i) & 1U)) continue;
    out.masks[static_cast<std::size_t>(i)] = ~h.masks[static_cast<std::size_t>(i)] & h.full_mask();
  }
  return out;
}

Rational exp_dw_signed(int n, const HoleSets& h) {
  return exp_where(n, [&](const Holes& x) {
    if (x[static_cast<std::size_t>(h.first)] != h.hole || x[static_cast<std::size_t>(h.second)] != h.hole) {
      return Rational(0);
    }
    int outside = 0;
    for (int i = 0; i < n; ++i) {
      if (i == h.first || i == h.second) continue;
      if (!((h.masks[static_cast<std::size_t>(i)] >> x[static_cast<std::size_t>(i)]) & 1U)) ++outside;
    }
    return Rational(outside % 2 == 0 ? 1 : -1);
  });
}

Extremal max_abs_exp_dw(int n) {
  check_n(n, 3, 6);
  auto value = [n](PackedAssignment x) { return to_int128(scaled_d(n, decode_php_assignment(n, x))); };
  std::vector<Int128> sums = lp::holeset_sums(n, 0, 1, 0, value);
  std::size_t best = 0;
  Int128 best_abs = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    Int128 a = sums[i] < 0 ? -sums[i] : sums[i];
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  Extremal out;
  out.max_abs = Rational(from_int128(best_abs), pow_int(n - 1, n - 1) * restricted_count(n));
  out.max_abs.canonicalize();
  out.witness = lp::holesets_from_index(n, 0, 1, 0, best);
  return out;
}

Rational dual_value(int n) { return exp_d_closed(n) / max_abs_exp_dw(n).max_abs; }

HoleSets conjectured_extremal_weakening(int n) {
  check_n(n, 3, 32);
  HoleSets h = make_holesets(n, 0, 1, 0);
  auto range = [](int lo, int hi) {
    std::uint32_t m = 0;
    for (int j = lo; j <= hi; ++j) m |= std::uint32_t{1} << j;
    return m;
  };
  for (int i = 2; i < n; ++i) {
    std::uint32_t mask = 0;
    if (n % 2 == 1) {
      mask = range(1, (n - 1) / 2);
    } else {
      mask = i <= n / 2 ? range(1, n / 2 - 1) : range(n / 2, n - 2);
    }
    h.masks[static_cast<std::size_t>(i)] = mask;
  }
  return h;
}

std::vector<Rational> norm_series_terms(int n) {
  check_n(n, 2, 64);
  std::vector<Rational> terms;
  for (int c = n - 1; c >= 0; --c) {
    Rational t(1, 1);
    t /= Rational((n - c) * pow_int(n - 1, n - 1 - c) * factorial(static_cast<unsigned>(c)));
    terms.push_back((n - 1 - c) % 2 == 0 ? t : Rational(-t));
  }
  return terms;
}

Rational norm_d_squared_closed(int n) {
  Rational sum = 0;
  for (const auto& t : norm_series_terms(n)) sum += t;
  return exp_d_closed(n) * Rational(factorial(static_cast<unsigned>(n))) * sum;
}

Rational norm_d_squared_brute(int n) {
  check_n(n, 2, 8);
  Rational sum = 0;
  for_each_restricted(n, [&](const Holes& x) {
    Rational d = d_eval(n, x);
    sum += d * d;
  });
  return normalize(sum, n);
}

Rational norm_d_squared_bound(int n) {
  Rational r(factorial(static_cast<unsigned>(n)), pow_int(n - 1, n - 1));
  r.canonicalize();
  return r;
}

std::string RootValue::decimal(unsigned places) const {
  if (a < 0 || b < 0) throw ParameterError("root value needs a, b >= 0");
  Rational q = squared() * Rational(power(Integer(10), 2 * places));
  Integer floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Integer k = isqrt(floor_q);
  Integer twice = 2 * k + 1;
  if (Rational(twice * twice) <= 4 * q) k += 1;
  Rational scaled(k, power(Integer(10), places));
  return to_decimal(scaled, places);
}

double RootValue::approx() const { return a.get_d() * std::sqrt(b.get_d()); }

bool RootValue::at_most(const Rational& value) const { return value >= 0 && squared() <= value * value; }

RootValue php_lower_bound(int n) {
  check_n(n, 2, 64);
  RootValue r;
  r.a = Rational(pow_int(2, n - 2) * (n - 1));
  r.b = Rational(factorial(static_cast<unsigned>(n - 1)), n * pow_int(n - 1, n - 1));
  r.b.canonicalize();
  return r;
}

RootValue norm_based_bound(int n) {
  RootValue r;
  r.a = exp_d_closed(n) * Rational((n - 1) * pow_int(2, n - 2));
  r.b = 1 / norm_d_squared_closed(n);
  return r;
}

Monomial no_pigeon_in_first_hole(int n) {
  std::vector<VarId> neg;
  for (int i = 0; i < n; ++i) neg.push_back(php::var(n, i, 0));
  return Monomial::from_literals({}, std::move(neg));
}

Rational resolution_failure_closed(int n) {
  check_n(n, 3, 64);
  Rational base(factorial(static_cast<unsigned>(n - 2)), pow_int(n - 1, n - 1));
  base.canonicalize();
  Rational tail(1, 1);
  tail /= Rational(pow_int(n - 1, n - 2));
  if ((n - 1) % 2 == 1) tail = -tail;
  return -base * (1 - tail);
}

Rational resolution_failure_corrected(int n) {
  check_n(n, 3, 64);
  Rational base(factorial(static_cast<unsigned>(n - 2)), pow_int(n - 1, n - 1));
  base.canonicalize();
  return -base * (1 - 1 / Rational(pow_int(n - 1, n - 2)));
}

Rational resolution_failure_brute(int n) {
  check_n(n, 3, 8);
  return exp_monomial(n, no_pigeon_in_first_hole(n));
}

std::vector<Monomial> failure_observation_monomials(int n) {
  check_n(n, 3, 64);
  std::vector<VarId> rest;
  for (int i = 2; i < n; ++i) rest.push_back(php::var(n, i, 0));
  std::vector<VarId> first_rest = rest;
  first_rest.push_back(php::var(n, 1, 0));
  return {
      Monomial::from_literals({}, first_rest),
      Monomial::from_literals({php::var(n, 0, 0)}, rest),
      Monomial::from_literals({php::var(n, 0, 0), php::var(n, 1, 0)}, rest),
  };
}

FailureObservations failure_observations_closed(int n) {
  check_n(n, 3, 64);
  FailureObservations o;
  o.others_avoid_first_hole = 0;
  o.first_in_rest_avoid = Rational(factorial(static_cast<unsigned>(n - 2)), pow_int(n - 1, n - 1));
  o.first_in_rest_avoid.canonicalize();
  Rational third(factorial(static_cast<unsigned>(n - 2)), pow_int(n - 1, 2 * n - 3));
  third.canonicalize();
  o.first_two_in_rest_avoid = (n - 2) % 2 == 0 ? third : Rational(-third);
  return o;
}

FailureObservations failure_observations_brute(int n) {
  check_n(n, 3, 8);
  auto m = failure_observation_monomials(n);
  return FailureObservations{exp_monomial(n, m[0]), exp_monomial(n, m[1]), exp_monomial(n, m[2])};
}

}  // namespace nsz::php_dual
