#include "nsz/ord_proofs.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace nsz::ord_proofs {

namespace {

using Edge = std::pair<int, int>;

// A transitivity weakening as the 3-cycle of its axiom plus the extra
// "a precedes b" edges of its multiplier.
struct Weak {
  int a, b, c;
  std::vector<Edge> extra;
};

std::vector<Weak> base_case() { return {Weak{0, 1, 2, {}}, Weak{2, 1, 0, {}}}; }

// Transitivity weakenings of the n-element proof, built up from n = 3.
std::vector<Weak> transitivity_set(int n) {
  std::vector<Weak> set = base_case();
  for (int k = 3; k < n; ++k) {
    // From k elements {0..k-1} to k+1 elements; the new element is k.
    std::vector<Weak> next;
    next.reserve(2 * set.size() + 2 * static_cast<std::size_t>(k - 1));
    for (const auto& w : set) {
      Weak lower = w;
      lower.extra.emplace_back(0, k);
      next.push_back(std::move(lower));
    }
    for (const auto& w : set) {
      Weak upper{w.a + 1, w.b + 1, w.c + 1, {}};
      for (auto [p, q] : w.extra) upper.extra.emplace_back(p + 1, q + 1);
      upper.extra.emplace_back(k, 0);
      next.push_back(std::move(upper));
    }
    // i is the minimum among the middle elements 1..k-1.
    for (int i = 1; i < k; ++i) {
      std::vector<Edge> extra;
      for (int j = 1; j < k; ++j) {
        if (j != i) extra.emplace_back(i, j);
      }
      next.push_back(Weak{0, i, k, extra});
      next.push_back(Weak{k, i, 0, extra});
    }
    set = std::move(next);
  }
  return set;
}

Monomial edges_monomial(int n, const std::vector<Edge>& edges) {
  Monomial m;
  for (auto [p, q] : edges) m = mono_mul(m, ord::precedes(n, p, q));
  return m;
}

void require_ord(const AxiomSystem& sys) {
  if (sys.family() != Family::Ord) throw ParameterError("an ORD system is required");
}

}  // namespace

ProofCertificate build_ord_proof(int n) {
  auto sys = std::make_shared<const AxiomSystem>(build_ord(n));
  ProofCertificate cert(sys, 1);
  for (int i = 0; i < n; ++i) cert.add_product(ord::nonmin_axiom(n, i), sys->axiom(ord::nonmin_axiom(n, i)).monomial, 1);
  for (const auto& w : transitivity_set(n)) {
    std::size_t axiom = ord::transitivity_axiom(n, w.a, w.b, w.c);
    Monomial product = mono_mul(sys->axiom(axiom).monomial, edges_monomial(n, w.extra));
    if (product.is_zero()) throw std::logic_error("recursive ORD weakening collapsed to zero");
    cert.add_product(axiom, product, 1);
  }
  return cert;
}

std::vector<std::pair<int, int>> orientation_edges(int n, const Monomial& m) {
  if (m.is_zero()) throw StructuralError("ZERO has no orientation graph");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      VarId v = ord::var(n, a, b);
      if (m.contains(v, true)) edges.emplace_back(a, b);
      if (m.contains(v, false)) edges.emplace_back(b, a);
    }
  }
  return edges;
}

bool is_nice_transitivity(const AxiomSystem& sys, const WeakeningKey& key) {
  require_ord(sys);
  const Axiom& axiom = sys.axiom(key.axiom_index);
  if (axiom.kind != AxiomKind::Transitivity) return false;
  const int n = sys.n();
  auto edges = orientation_edges(n, key.product);
  if (edges.size() != static_cast<std::size_t>(n)) return false;
  const int root = *std::min_element(axiom.elements.begin(), axiom.elements.end());
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (auto [p, q] : edges) out[static_cast<std::size_t>(p)].push_back(q);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : out[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

bool check_nice_transitivity(const ProofCertificate& cert) {
  const AxiomSystem& sys = cert.system();
  require_ord(sys);
  for (const auto& [key, c] : cert.entries()) {
    if (c == 0 || sys.axiom(key.axiom_index).kind != AxiomKind::Transitivity) continue;
    if (!is_nice_transitivity(sys, key)) return false;
  }
  return true;
}

PartitionReport check_partition(const ProofCertificate& cert, unsigned threads) {
  const std::size_t vars = cert.system().var_count();
  if (vars > 40) throw ParameterError("partition check limited to 40 variables");
  std::vector<PackedMonomial> entries;
  for (const auto& [key, c] : cert.entries()) {
    if (c != 0) entries.push_back(pack(key.product));
  }
  const std::uint64_t total = std::uint64_t{1} << vars;
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total / 4096 + 1)));
  std::atomic<std::uint64_t> first_failure{total};
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t x = lo; x < hi && x < first_failure.load(std::memory_order_relaxed); ++x) {
      int hits = 0;
      for (const auto& m : entries) {
        if (m.eval(x) && ++hits > 1) break;
      }
      if (hits != 1) {
        std::uint64_t cur = first_failure.load();
        while (x < cur && !first_failure.compare_exchange_weak(cur, x)) {
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = t * chunk;
    if (lo >= total) break;
    pool.emplace_back(work, lo, std::min(total, lo + chunk));
  }
  for (auto& th : pool) th.join();
  PartitionReport report;
  report.points_checked = total;
  report.ok = first_failure.load() == total;
  if (!report.ok) report.witness = first_failure.load();
  return report;
}

ProofCertificate restrict_to_no_min(const ProofCertificate& partial) {
  const AxiomSystem& sys = partial.system();
  require_ord(sys);
  if (partial.target() != 1 || !partial.squares().empty() || !partial.monomial_terms().empty()) {
    throw ParameterError("restriction applies to Nullstellensatz certificates with target 1");
  }
  const int n = sys.n();
  VerifyResult pre = verify_certificate_on(partial, assignments_no_minimum(n));
  if (!pre.ok) {
    throw VerificationError("input fails on a tournament without a minimum at " +
                                format_bits(*pre.witness, sys.var_count()),
                            *pre.witness);
  }
  ProofCertificate out = partial;
  for (int i = 0; i < n; ++i) {
    const std::size_t ai = ord::nonmin_axiom(n, i);
    const Monomial& a = sys.axiom(ai).monomial;
    // C_i, merged over weakenings with equal products A_i W.
    std::map<Monomial, Rational> ci;
    for (const auto& [key, c] : partial.entries()) {
      Monomial product = mono_mul(a, key.product);
      if (!product.is_zero()) ci[product] += c;
    }
    for (const auto& [product, c] : ci) out.add_product(ai, product, -c);
    out.add_product(ai, a, 1);
  }
  return out;
}

Monomial prefix_first(int n, int j, int m) {
  if (m < 1 || m > n || j < 0 || j >= m) throw ParameterError("F_jm needs 0 <= j < m <= n");
  Monomial f;
  for (int i = 0; i < m; ++i) {
    if (i != j) f = mono_mul(f, ord::precedes(n, j, i));
  }
  return f;
}

Monomial prefix_link(int n, int j, int m, int k) {
  if (m < 1 || m > n - 1 || j < 0 || k < 0 || j >= m || k >= m || j == k) {
    throw ParameterError("T_jmk needs 1 <= m <= n-1 and distinct j, k < m");
  }
  Monomial t = mono_mul(prefix_first(n, j, m), ord::precedes(n, m, j));
  t = mono_mul(t, ord::precedes(n, k, m));
  for (int i = 0; i < k; ++i) {
    if (i != j) t = mono_mul(t, ord::precedes(n, m, i));
  }
  return t;
}

Polynomial sos_square(int n, int m) {
  if (m < 1 || m > n - 1) throw ParameterError("square index needs 1 <= m <= n-1");
  const Monomial head = prefix_first(n, m, m + 1);
  Polynomial g = Polynomial::term(head);
  for (int j = 0; j < m; ++j) g.add_term(mono_mul(prefix_first(n, j, m), head), -1);
  return g;
}

ProofCertificate build_sos_ord_proof(int n) {
  auto sys = std::make_shared<const AxiomSystem>(build_ord(n));
  ProofCertificate cert(sys, -1);
  for (int m = 1; m <= n - 1; ++m) {
    Polynomial g = sos_square(n, m);
    if (!g.is_zero()) cert.add_square(std::move(g));
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        cert.add_product(ord::transitivity_axiom(n, m, j, k), prefix_link(n, j, m, k), -1);
      }
    }
  }
  for (int j = 0; j < n; ++j) cert.add_product(ord::nonmin_axiom(n, j), prefix_first(n, j, n), -1);
  return cert;
}

bool building_block_holds(int n, int j, int m, PackedAssignment x) {
  auto v = [x](const Monomial& mono) { return pack(mono).eval(x) ? 1 : 0; };
  const Monomial fjm = prefix_first(n, j, m);
  int rhs = v(prefix_first(n, j, m + 1)) + v(mono_mul(fjm, prefix_first(n, m, m + 1)));
  for (int k = 0; k < m; ++k) {
    if (k != j) rhs += v(prefix_link(n, j, m, k));
  }
  return v(fjm) == rhs;
}

bool check_building_block(int n) {
  if (n < 3 || n > 8) throw ParameterError("building block check supports 3 <= n <= 8");
  const std::size_t vars = static_cast<std::size_t>(n * (n - 1) / 2);
  for (int m = 1; m <= n - 1; ++m) {
    for (int j = 0; j < m; ++j) {
      // Packed once per (j, m): F_jm, F_{j,m+1}, F_jm F_{m,m+1} and the links.
      PackedMonomial f = pack(prefix_first(n, j, m));
      PackedMonomial f_next = pack(prefix_first(n, j, m + 1));
      PackedMonomial f_both = pack(mono_mul(prefix_first(n, j, m), prefix_first(n, m, m + 1)));
      std::vector<PackedMonomial> links;
      for (int k = 0; k < m; ++k) {
        if (k != j) links.push_back(pack(prefix_link(n, j, m, k)));
      }
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << vars); ++x) {
        int rhs = f_next.eval(x) + f_both.eval(x);
        for (const auto& t : links) rhs += t.eval(x);
        if (static_cast<int>(f.eval(x)) != rhs) return false;
      }
    }
  }
  return true;
}

Rational sos_total_coefficient_size(const ProofCertificate& cert) { return cert.total_coefficient_size(); }

}  // namespace nsz::ord_proofs
