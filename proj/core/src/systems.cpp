#include "nsz/systems.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <bit>

namespace nsz {

std::string to_string(Family family) {
  switch (family) {
    case Family::Php: return "php";
    case Family::Ord: return "ord";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view text) {
  if (text == "php") return Family::Php;
  if (text == "ord") return Family::Ord;
  if (text == "custom") return Family::Custom;
  throw FormatError("unknown family '" + std::string(text) + "'");
}

AxiomSystem::AxiomSystem(Family family, int n, std::vector<std::string> var_names, std::vector<Axiom> axioms)
    : family_(family), n_(n), var_names_(std::move(var_names)), axioms_(std::move(axioms)) {
  for (std::size_t i = 0; i < axioms_.size(); ++i) {
    const auto& a = axioms_[i];
    if (a.monomial.is_zero()) throw StructuralError("axiom '" + a.label + "' is the ZERO monomial");
    if (a.monomial.span() > var_names_.size()) {
      throw StructuralError("axiom '" + a.label + "' mentions an unknown variable");
    }
    if (!by_label_.emplace(a.label, i).second) throw StructuralError("duplicate axiom label '" + a.label + "'");
    by_monomial_.emplace(a.monomial, i);
  }
  if (var_names_.size() <= kMaxPackedVars) {
    packed_.reserve(axioms_.size());
    for (const auto& a : axioms_) packed_.push_back(pack(a.monomial));
  }
}

std::optional<std::size_t> AxiomSystem::find_label(std::string_view label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> AxiomSystem::find_monomial(const Monomial& m) const {
  auto it = by_monomial_.find(m);
  if (it == by_monomial_.end()) return std::nullopt;
  return it->second;
}

const std::vector<PackedMonomial>& AxiomSystem::packed_axioms() const {
  if (var_names_.size() > kMaxPackedVars) throw StructuralError("system too large for packed evaluation");
  return packed_;
}

std::string AxiomSystem::name() const {
  if (family_ == Family::Custom) return "custom";
  return to_string(family_) + "(" + std::to_string(n_) + ")";
}

namespace {

std::string pair_name(int i, int j) { return "x[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]"; }

}  // namespace

AxiomSystem build_php(int n) {
  if (n < 2) throw ParameterError("PHP needs n >= 2");
  if (n > 9) throw ParameterError("PHP systems are limited to n <= 9");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1; ++j) names.push_back(pair_name(i, j));
  }
  std::vector<Axiom> axioms;
  for (int i = 0; i < n; ++i) {
    std::vector<VarId> neg;
    for (int j = 0; j < n - 1; ++j) neg.push_back(php::var(n, i, j));
    axioms.push_back({"pigeon[" + std::to_string(i + 1) + "]", Monomial::from_literals({}, neg),
                      AxiomKind::PigeonTotal, {i}});
  }
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = i1 + 1; i2 < n; ++i2) {
      for (int j = 0; j < n - 1; ++j) {
        axioms.push_back({"hole[" + std::to_string(i1 + 1) + "," + std::to_string(i2 + 1) + ";" +
                              std::to_string(j + 1) + "]",
                          Monomial::from_literals({php::var(n, i1, j), php::var(n, i2, j)}, {}),
                          AxiomKind::HoleCollision, {i1, i2, j}});
      }
    }
  }
  return AxiomSystem(Family::Php, n, std::move(names), std::move(axioms));
}

namespace php {

std::size_t pigeon_axiom(int n, int pigeon) {
  if (pigeon < 0 || pigeon >= n) throw ParameterError("pigeon out of range");
  return static_cast<std::size_t>(pigeon);
}

std::size_t hole_axiom(int n, int i1, int i2, int hole) {
  if (i1 > i2) std::swap(i1, i2);
  if (i1 < 0 || i2 >= n || i1 == i2 || hole < 0 || hole >= n - 1) throw ParameterError("bad hole axiom index");
  // Pairs (a, b) with a < i1 contribute (n - 1 - a) pairs each.
  std::size_t pair = 0;
  for (int a = 0; a < i1; ++a) pair += static_cast<std::size_t>(n - 1 - a);
  pair += static_cast<std::size_t>(i2 - i1 - 1);
  return static_cast<std::size_t>(n) + pair * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(hole);
}

}  // namespace php

namespace ord {

VarId var(int n, int i, int j) {
  if (i >= j || i < 0 || j >= n) throw ParameterError("ord::var needs 0 <= i < j < n");
  return static_cast<VarId>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

Monomial precedes(int n, int i, int j) {
  if (i == j) throw ParameterError("an element does not precede itself");
  return i < j ? Monomial::literal(var(n, i, j), true) : Monomial::literal(var(n, j, i), false);
}

std::size_t nonmin_axiom(int n, int i) {
  if (i < 0 || i >= n) throw ParameterError("element out of range");
  return static_cast<std::size_t>(i);
}

std::size_t transitivity_axiom(int n, int a, int b, int c) {
  if (a == b || b == c || a == c || std::min({a, b, c}) < 0 || std::max({a, b, c}) >= n) {
    throw ParameterError("transitivity axiom needs three distinct elements");
  }
  // Rotate so the cycle starts at its smallest element.
  while (a > b || a > c) {
    int t = a;
    a = b;
    b = c;
    c = t;
  }
  bool forward = b < c;  // a->b->c->a with a < b < c
  int lo = a;
  int mid = std::min(b, c);
  int hi = std::max(b, c);
  std::size_t triple = 0;
  // Index of (lo, mid, hi) in lexicographic order of 3-subsets.
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        if (x == lo && y == mid && z == hi) {
          return static_cast<std::size_t>(n) + 2 * triple + (forward ? 0 : 1);
        }
        ++triple;
      }
    }
  }
  throw ParameterError("transitivity axiom not found");
}

bool precedes(int n, PackedAssignment x, int i, int j) {
  if (i < j) return (x >> var(n, i, j)) & 1U;
  return !((x >> var(n, j, i)) & 1U);
}

bool has_minimum(int n, PackedAssignment x) {
  for (int i = 0; i < n; ++i) {
    bool min = true;
    for (int j = 0; j < n && min; ++j) {
      if (j != i && !precedes(n, x, i, j)) min = false;
    }
    if (min) return true;
  }
  return false;
}

}  // namespace ord

AxiomSystem build_ord(int n) {
  if (n < 3) throw ParameterError("ORD needs n >= 3");
  if (n > 11) throw ParameterError("ORD systems are limited to n <= 11");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) names.push_back(pair_name(i, j));
  }
  auto cycle = [n](int a, int b, int c) {
    return mono_mul(mono_mul(ord::precedes(n, a, b), ord::precedes(n, b, c)), ord::precedes(n, c, a));
  };
  std::vector<Axiom> axioms;
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (int j = 0; j < n; ++j) {
      if (j != i) m = mono_mul(m, ord::precedes(n, i, j));
    }
    axioms.push_back({"nonmin[" + std::to_string(i + 1) + "]", m, AxiomKind::NonMinimality, {i}});
  }
  auto label = [](int a, int b, int c) {
    return "trans[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1) + "]";
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        axioms.push_back({label(a, b, c), cycle(a, b, c), AxiomKind::Transitivity, {a, b, c}});
        axioms.push_back({label(c, b, a), cycle(c, b, a), AxiomKind::Transitivity, {c, b, a}});
      }
    }
  }
  return AxiomSystem(Family::Ord, n, std::move(names), std::move(axioms));
}

AxiomSystem build_family(Family family, int n) {
  switch (family) {
    case Family::Php: return build_php(n);
    case Family::Ord: return build_ord(n);
    case Family::Custom: break;
  }
  throw ParameterError("custom systems cannot be rebuilt from a family tag");
}

namespace {

std::vector<VarId> free_variables(const AxiomSystem& sys, const Monomial& axiom) {
  std::vector<VarId> free;
  for (VarId v = 0; v < sys.var_count(); ++v) {
    if (!axiom.mentions(v)) free.push_back(v);
  }
  return free;
}

// Odometer over {absent, positive, negative}^k, last digit fastest.
template <typename Visit>
void odometer(std::size_t k, Visit&& visit) {
  std::vector<std::uint8_t> digits(k, 0);
  while (true) {
    visit(digits);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < 3) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

void for_each_weakening(const AxiomSystem& sys, std::size_t axiom_index,
                        const std::function<void(const Weakening&)>& visit) {
  const Monomial& axiom = sys.axiom(axiom_index).monomial;
  auto free = free_variables(sys, axiom);
  odometer(free.size(), [&](const std::vector<std::uint8_t>& digits) {
    std::vector<VarId> pos;
    std::vector<VarId> neg;
    for (std::size_t t = 0; t < digits.size(); ++t) {
      if (digits[t] == 1) pos.push_back(free[t]);
      if (digits[t] == 2) neg.push_back(free[t]);
    }
    Weakening w;
    w.axiom_index = axiom_index;
    w.multiplier = Monomial::from_literals(std::move(pos), std::move(neg));
    w.product = mono_mul(axiom, w.multiplier);
    visit(w);
  });
}

void for_each_weakening_packed(const AxiomSystem& sys, std::size_t axiom_index,
                               const std::function<void(const PackedMonomial&)>& visit) {
  const PackedMonomial base = sys.packed_axioms().at(axiom_index);
  auto free = free_variables(sys, sys.axiom(axiom_index).monomial);
  odometer(free.size(), [&](const std::vector<std::uint8_t>& digits) {
    PackedMonomial p = base;
    for (std::size_t t = 0; t < digits.size(); ++t) {
      if (digits[t] == 1) p.pos |= std::uint64_t{1} << free[t];
      if (digits[t] == 2) p.neg |= std::uint64_t{1} << free[t];
    }
    visit(p);
  });
}

std::optional<std::uint64_t> weakening_count(const AxiomSystem& sys, std::size_t axiom_index) {
  std::size_t k = sys.var_count() - sys.axiom(axiom_index).monomial.degree();
  std::uint64_t count = 1;
  for (std::size_t t = 0; t < k; ++t) {
    if (count > UINT64_MAX / 3) return std::nullopt;
    count *= 3;
  }
  return count;
}

std::vector<PackedAssignment> assignments_full(std::size_t var_count) {
  if (var_count > 30) throw ParameterError("full cube enumeration is limited to 30 variables");
  std::vector<PackedAssignment> out(std::size_t{1} << var_count);
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = x;
  return out;
}

std::vector<PackedAssignment> assignments_one_hole_per_pigeon(int n) {
  if (n < 2) throw ParameterError("PHP needs n >= 2");
  if (n > 9) throw ParameterError("restricted PHP support is limited to n <= 9");
  std::vector<PackedAssignment> out;
  std::vector<int> holes(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(encode_php_assignment(n, holes));
    int i = 0;
    while (i < n && ++holes[static_cast<std::size_t>(i)] == n - 1) holes[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<PackedAssignment> tournaments(int n, bool want_minimum) {
  if (n < 3) throw ParameterError("ORD needs n >= 3");
  std::size_t vars = static_cast<std::size_t>(n * (n - 1) / 2);
  if (vars > 30) throw ParameterError("tournament enumeration is limited to n <= 8");
  std::vector<PackedAssignment> out;
  for (PackedAssignment x = 0; x < (PackedAssignment{1} << vars); ++x) {
    if (ord::has_minimum(n, x) == want_minimum) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<PackedAssignment> assignments_no_minimum(int n) { return tournaments(n, false); }
std::vector<PackedAssignment> assignments_with_minimum(int n) { return tournaments(n, true); }

bool HoleSets::eval(const std::vector<int>& holes) const {
  for (int i = 0; i < n; ++i) {
    if (!((masks[static_cast<std::size_t>(i)] >> holes[static_cast<std::size_t>(i)]) & 1U)) return false;
  }
  return true;
}

HoleSets make_holesets(int n, int first, int second, int hole) {
  if (n < 2 || first == second || std::min(first, second) < 0 || std::max(first, second) >= n || hole < 0 ||
      hole >= n - 1) {
    throw ParameterError("bad hole axiom for H-sets");
  }
  HoleSets h;
  h.n = n;
  h.first = std::min(first, second);
  h.second = std::max(first, second);
  h.hole = hole;
  h.masks.assign(static_cast<std::size_t>(n), h.full_mask());
  h.masks[static_cast<std::size_t>(h.first)] = std::uint32_t{1} << hole;
  h.masks[static_cast<std::size_t>(h.second)] = std::uint32_t{1} << hole;
  return h;
}

Weakening holesets_to_weakening(const AxiomSystem& sys, const HoleSets& h) {
  if (sys.family() != Family::Php || sys.n() != h.n) throw StructuralError("H-sets do not match the PHP system");
  if (h.masks.size() != static_cast<std::size_t>(h.n)) throw StructuralError("H-sets need one mask per pigeon");
  const int n = h.n;
  Weakening w;
  w.axiom_index = php::hole_axiom(n, h.first, h.second, h.hole);
  std::vector<VarId> neg;
  for (int i = 0; i < n; ++i) {
    if (i == h.first || i == h.second) continue;
    for (int j = 0; j < n - 1; ++j) {
      if (!((h.masks[static_cast<std::size_t>(i)] >> j) & 1U)) neg.push_back(php::var(n, i, j));
    }
  }
  w.multiplier = Monomial::from_literals({}, std::move(neg));
  w.product = mono_mul(sys.axiom(w.axiom_index).monomial, w.multiplier);
  return w;
}

HoleSets holesets_of(const AxiomSystem& sys, const Weakening& w) {
  const Axiom& ax = sys.axiom(w.axiom_index);
  if (sys.family() != Family::Php || ax.kind != AxiomKind::HoleCollision) {
    throw StructuralError("H-sets are defined for PHP hole-axiom weakenings only");
  }
  const int n = sys.n();
  HoleSets h = make_holesets(n, ax.elements[0], ax.elements[1], ax.elements[2]);
  if (w.product.is_zero()) {
    std::fill(h.masks.begin(), h.masks.end(), 0U);
    return h;
  }
  for (int i = 0; i < n; ++i) {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (int j = 0; j < n - 1; ++j) {
      if (w.product.contains(php::var(n, i, j), true)) pos |= std::uint32_t{1} << j;
      if (w.product.contains(php::var(n, i, j), false)) neg |= std::uint32_t{1} << j;
    }
    std::uint32_t mask = 0;
    if (std::popcount(pos) == 1) {
      mask = pos & ~neg;
    } else if (pos == 0) {
      mask = h.full_mask() & ~neg;
    }
    h.masks[static_cast<std::size_t>(i)] = mask;
  }
  return h;
}

std::vector<int> decode_php_assignment(int n, PackedAssignment x) {
  std::vector<int> holes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint64_t row = (x >> (i * (n - 1))) & ((std::uint64_t{1} << (n - 1)) - 1);
    if (std::popcount(row) != 1) throw StructuralError("assignment does not send each pigeon to exactly one hole");
    holes[static_cast<std::size_t>(i)] = std::countr_zero(row);
  }
  if (x >> (n * (n - 1)) != 0) throw StructuralError("assignment has bits beyond the PHP variables");
  return holes;
}

PackedAssignment encode_php_assignment(int n, const std::vector<int>& holes) {
  PackedAssignment x = 0;
  for (int i = 0; i < n; ++i) x |= PackedAssignment{1} << php::var(n, i, holes[static_cast<std::size_t>(i)]);
  return x;
}

}  // namespace nsz
