#include "nsz/symmetry.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nsz {

SignedPermutation SignedPermutation::identity(std::size_t var_count) {
  SignedPermutation p;
  p.target.resize(var_count);
  std::iota(p.target.begin(), p.target.end(), VarId{0});
  p.flip.assign(var_count, 0);
  return p;
}

PackedAssignment SignedPermutation::apply(PackedAssignment x) const {
  PackedAssignment y = 0;
  for (std::size_t v = 0; v < target.size(); ++v) {
    PackedAssignment bit = ((x >> v) & 1U) ^ flip[v];
    y |= bit << target[v];
  }
  return y;
}

Monomial SignedPermutation::apply(const Monomial& m) const {
  if (m.is_zero()) return m;
  std::vector<VarId> pos;
  std::vector<VarId> neg;
  auto place = [&](VarId v, bool positive) {
    if (v >= target.size()) throw StructuralError("monomial variable outside the permutation domain");
    bool out = positive != (flip[v] != 0);
    (out ? pos : neg).push_back(target[v]);
  };
  for (VarId v : m.positives()) place(v, true);
  for (VarId v : m.negatives()) place(v, false);
  return Monomial::from_literals(std::move(pos), std::move(neg));
}

PackedMonomial SignedPermutation::apply(const PackedMonomial& m) const {
  if (m.zero) return m;
  PackedMonomial out;
  for (std::size_t v = 0; v < target.size(); ++v) {
    bool p = (m.pos >> v) & 1U;
    bool q = (m.neg >> v) & 1U;
    if (flip[v]) std::swap(p, q);
    if (p) out.pos |= std::uint64_t{1} << target[v];
    if (q) out.neg |= std::uint64_t{1} << target[v];
  }
  return out;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation c;
  c.target.resize(b.target.size());
  c.flip.resize(b.target.size());
  for (std::size_t v = 0; v < b.target.size(); ++v) {
    c.target[v] = a.target[b.target[v]];
    c.flip[v] = static_cast<std::uint8_t>(b.flip[v] ^ a.flip[b.target[v]]);
  }
  return c;
}

SymmetryGroup SymmetryGroup::trivial(std::size_t var_count) {
  SymmetryGroup g;
  g.var_count_ = var_count;
  return g;
}

SymmetryGroup SymmetryGroup::php(int n) {
  if (n < 2) throw ParameterError("PHP needs n >= 2");
  SymmetryGroup g;
  g.var_count_ = static_cast<std::size_t>(n * (n - 1));
  auto perm = [&](auto pigeon_map, auto hole_map) {
    SignedPermutation p = SignedPermutation::identity(g.var_count_);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n - 1; ++j) p.target[php::var(n, i, j)] = php::var(n, pigeon_map(i), hole_map(j));
    }
    return p;
  };
  auto id = [](int v) { return v; };
  for (int a = 0; a + 1 < n; ++a) {
    auto swap_ab = [a](int v) { return v == a ? a + 1 : v == a + 1 ? a : v; };
    g.generators_.push_back(perm(swap_ab, id));
  }
  for (int a = 0; a + 1 < n - 1; ++a) {
    auto swap_ab = [a](int v) { return v == a ? a + 1 : v == a + 1 ? a : v; };
    g.generators_.push_back(perm(id, swap_ab));
  }
  g.order_ = factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - 1));
  return g;
}

SymmetryGroup SymmetryGroup::ord(int n) {
  if (n < 3) throw ParameterError("ORD needs n >= 3");
  SymmetryGroup g;
  g.var_count_ = static_cast<std::size_t>(n * (n - 1) / 2);
  for (int a = 0; a + 1 < n; ++a) {
    auto sigma = [a](int v) { return v == a ? a + 1 : v == a + 1 ? a : v; };
    SignedPermutation p = SignedPermutation::identity(g.var_count_);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int si = sigma(i);
        int sj = sigma(j);
        VarId v = ord::var(n, i, j);
        if (si < sj) {
          p.target[v] = ord::var(n, si, sj);
        } else {
          p.target[v] = ord::var(n, sj, si);
          p.flip[v] = 1;
        }
      }
    }
    g.generators_.push_back(std::move(p));
  }
  g.order_ = factorial(static_cast<unsigned>(n));
  return g;
}

SymmetryGroup SymmetryGroup::of(const AxiomSystem& sys) {
  switch (sys.family()) {
    case Family::Php: return php(sys.n());
    case Family::Ord: return ord(sys.n());
    case Family::Custom: break;
  }
  return trivial(sys.var_count());
}

std::vector<SignedPermutation> SymmetryGroup::elements(std::size_t limit) const {
  if (order_ > Integer(static_cast<unsigned long>(limit))) {
    throw ParameterError("group order " + order_.get_str() + " exceeds the element limit");
  }
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> out;
  auto id = SignedPermutation::identity(var_count_);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& gen : generators_) {
      auto next = compose(gen, out[head]);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

}  // namespace

OrbitPartition SymmetryGroup::orbits(const std::vector<PackedAssignment>& points) const {
  if (!std::is_sorted(points.begin(), points.end())) throw StructuralError("orbit points must be sorted");
  UnionFind uf(points.size());
  for (const auto& gen : generators_) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      PackedAssignment y = gen.apply(points[i]);
      auto it = std::lower_bound(points.begin(), points.end(), y);
      if (it == points.end() || *it != y) throw StructuralError("support is not closed under the symmetry group");
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(it - points.begin()));
    }
  }
  OrbitPartition part;
  part.label.resize(points.size());
  std::vector<std::int64_t> root_label(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto r = uf.find(static_cast<std::uint32_t>(i));
    if (root_label[r] < 0) {
      root_label[r] = static_cast<std::int64_t>(part.representative.size());
      part.representative.push_back(i);
      part.size.push_back(0);
    }
    part.label[i] = static_cast<std::uint32_t>(root_label[r]);
    ++part.size[part.label[i]];
  }
  return part;
}

std::vector<std::size_t> SymmetryGroup::axiom_representatives(const AxiomSystem& sys) const {
  const auto& axioms = sys.axioms();
  UnionFind uf(axioms.size());
  for (const auto& gen : generators_) {
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      auto image = sys.find_monomial(gen.apply(axioms[i].monomial));
      if (!image) throw StructuralError("axiom set is not closed under the symmetry group");
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*image));
    }
  }
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (uf.find(static_cast<std::uint32_t>(i)) == i) reps.push_back(i);
  }
  return reps;
}

}  // namespace nsz
