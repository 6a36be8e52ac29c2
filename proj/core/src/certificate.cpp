#include "nsz/certificate.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace nsz {

ProofCertificate::ProofCertificate(std::shared_ptr<const AxiomSystem> system, Rational target)
    : system_(std::move(system)), target_(std::move(target)) {
  if (!system_) throw StructuralError("certificate needs an axiom system");
}

void ProofCertificate::add(std::size_t axiom_index, const Monomial& multiplier, const Rational& coeff) {
  const auto& axiom = system_->axiom(axiom_index);
  if (multiplier.span() > system_->var_count()) throw StructuralError("multiplier mentions an unknown variable");
  add_product(axiom_index, mono_mul(axiom.monomial, multiplier), coeff);
}

void ProofCertificate::add_product(std::size_t axiom_index, const Monomial& product, const Rational& coeff) {
  const auto& axiom = system_->axiom(axiom_index);
  if (product.is_zero() || coeff == 0) return;
  if (!axiom.monomial.divides(product)) {
    throw StructuralError("product " + format_monomial(product) + " is not a weakening of " + axiom.label);
  }
  if (product.span() > system_->var_count()) throw StructuralError("product mentions an unknown variable");
  WeakeningKey key{axiom_index, product};
  auto [it, inserted] = entries_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
  }
}

void ProofCertificate::erase(const WeakeningKey& key) { entries_.erase(key); }

void ProofCertificate::add_square(Polynomial g) {
  for (const auto& [m, c] : g.terms()) {
    if (m.span() > system_->var_count()) throw StructuralError("square mentions an unknown variable");
  }
  squares_.push_back(std::move(g));
}

void ProofCertificate::add_monomial_term(const Monomial& r, const Rational& coeff) {
  if (coeff < 0) throw StructuralError("monomial terms need nonnegative coefficients");
  if (r.is_zero() || coeff == 0) return;
  if (r.span() > system_->var_count()) throw StructuralError("monomial term mentions an unknown variable");
  monomial_terms_[r] += coeff;
}

Monomial ProofCertificate::multiplier(const WeakeningKey& key) const {
  return key.product.quotient(system_->axiom(key.axiom_index).monomial);
}

Rational ProofCertificate::total_coefficient_size() const {
  Rational total = 0;
  for (const auto& [key, c] : entries_) total += abs(c);
  for (const auto& g : squares_) {
    Rational t = nsz::total_coefficient_size(g);
    total += t * t;
  }
  for (const auto& [r, c] : monomial_terms_) total += c;
  return total;
}

unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

Integer lcm_den(const Integer& acc, const Rational& c) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), c.get_den().get_mpz_t());
  return out;
}

// Integer-scaled form of the identity: every term is multiplied by L.
struct ScaledIdentity {
  std::vector<std::pair<PackedMonomial, Int128>> linear;
  struct Square {
    std::vector<std::pair<PackedMonomial, Int128>> terms;
    Int128 weight;  // L / L_g^2
  };
  std::vector<Square> squares;
  Int128 target = 0;

  [[nodiscard]] Int128 eval(PackedAssignment x) const {
    Int128 sum = 0;
    for (const auto& [m, c] : linear) {
      if (m.eval(x)) sum += c;
    }
    for (const auto& sq : squares) {
      Int128 g = 0;
      for (const auto& [m, c] : sq.terms) {
        if (m.eval(x)) g += c;
      }
      sum += sq.weight * g * g;
    }
    return sum;
  }
};

std::optional<ScaledIdentity> scale_identity(const ProofCertificate& cert) {
  Integer l = cert.target().get_den();
  for (const auto& [key, c] : cert.entries()) l = lcm_den(l, c);
  for (const auto& [r, c] : cert.monomial_terms()) l = lcm_den(l, c);
  std::vector<Integer> lg;
  for (const auto& g : cert.squares()) {
    Integer d = 1;
    for (const auto& [m, c] : g.terms()) d = lcm_den(d, c);
    lg.push_back(d);
    Integer sq = d * d;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), sq.get_mpz_t());
  }

  // Bound every partial sum before committing to 128-bit arithmetic.
  Integer bound = abs(Integer(cert.target() * l));
  ScaledIdentity id;
  auto scaled = [&](const Rational& c, const Integer& factor) {
    Rational v = c * factor;
    return Integer(v.get_num());
  };
  const auto& sys = cert.system();
  for (const auto& [key, c] : cert.entries()) {
    Integer v = scaled(c, l);
    bound += abs(v);
    id.linear.emplace_back(pack(key.product), 0);
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 100) return std::nullopt;
    id.linear.back().second = to_int128(v);
  }
  for (const auto& [r, c] : cert.monomial_terms()) {
    Integer v = scaled(c, l);
    bound += abs(v);
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 100) return std::nullopt;
    id.linear.emplace_back(pack(r), to_int128(v));
  }
  for (std::size_t k = 0; k < cert.squares().size(); ++k) {
    ScaledIdentity::Square sq;
    Integer weight = l / (lg[k] * lg[k]);
    Integer gsum = 0;
    for (const auto& [m, c] : cert.squares()[k].terms()) {
      Integer v = scaled(c, lg[k]);
      gsum += abs(v);
      if (mpz_sizeinbase(v.get_mpz_t(), 2) > 60) return std::nullopt;
      sq.terms.emplace_back(pack(m), to_int128(v));
    }
    bound += weight * gsum * gsum;
    if (mpz_sizeinbase(weight.get_mpz_t(), 2) > 100) return std::nullopt;
    sq.weight = to_int128(weight);
    id.squares.push_back(std::move(sq));
  }
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 120) return std::nullopt;
  id.target = to_int128(Integer(cert.target() * l));
  (void)sys;
  return id;
}

// Runs check(i) for i in [0, count) over worker threads and returns the
// lowest failing index, if any.
template <typename Check>
std::optional<std::uint64_t> lowest_failure(std::uint64_t count, unsigned threads, Check&& check) {
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count / 4096, 1)));
  std::atomic<std::uint64_t> best{UINT64_MAX};
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if ((i & 1023U) == 0 && i >= best.load(std::memory_order_relaxed)) return;
      if (!check(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (threads <= 1) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t b = std::min<std::uint64_t>(count, t * chunk);
      std::uint64_t e = std::min<std::uint64_t>(count, b + chunk);
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  if (best.load() == UINT64_MAX) return std::nullopt;
  return best.load();
}

template <typename PointAt>
VerifyResult verify_points(const ProofCertificate& cert, std::uint64_t count, PointAt&& point_at, unsigned threads) {
  VerifyResult res;
  auto scaled = scale_identity(cert);
  std::optional<std::uint64_t> fail;
  if (scaled) {
    fail = lowest_failure(count, threads, [&](std::uint64_t i) { return scaled->eval(point_at(i)) == scaled->target; });
  } else {
    fail = lowest_failure(count, threads,
                          [&](std::uint64_t i) { return certificate_value(cert, point_at(i)) == cert.target(); });
  }
  res.ok = !fail.has_value();
  res.points_checked = fail ? *fail + 1 : count;
  if (fail) res.witness = point_at(*fail);
  return res;
}

}  // namespace

Rational certificate_value(const ProofCertificate& cert, PackedAssignment x) {
  Rational sum = 0;
  for (const auto& [key, c] : cert.entries()) {
    if (pack(key.product).eval(x)) sum += c;
  }
  for (const auto& [r, c] : cert.monomial_terms()) {
    if (pack(r).eval(x)) sum += c;
  }
  for (const auto& g : cert.squares()) {
    Rational v = 0;
    for (const auto& [m, c] : g.terms()) {
      if (pack(m).eval(x)) v += c;
    }
    sum += v * v;
  }
  return sum;
}

VerifyResult verify_certificate(const ProofCertificate& cert, unsigned threads) {
  std::size_t n = cert.system().var_count();
  if (n > 40) throw ParameterError("exhaustive verification is limited to 40 variables");
  std::uint64_t count = std::uint64_t{1} << n;
  return verify_points(cert, count, [](std::uint64_t i) { return static_cast<PackedAssignment>(i); }, threads);
}

VerifyResult verify_certificate_on(const ProofCertificate& cert, const std::vector<PackedAssignment>& points,
                                   unsigned threads) {
  if (cert.system().var_count() > kMaxPackedVars) throw ParameterError("system too large for packed verification");
  return verify_points(cert, points.size(), [&](std::uint64_t i) { return points[i]; }, threads);
}

}  // namespace nsz
