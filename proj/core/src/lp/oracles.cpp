#include "nsz/lp/oracles.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace nsz::lp {

ReducedProblem::ReducedProblem(std::shared_ptr<const AxiomSystem> system, Support support, SymmetryGroup group,
                               ProofSystem proof)
    : system_(std::move(system)), support_(std::move(support)), group_(std::move(group)), proof_(proof) {
  if (!system_) throw ParameterError("reduced problem needs an axiom system");
  if (support_.var_count != system_->var_count() || group_.var_count() != system_->var_count()) {
    throw StructuralError("support, group and system disagree on the variable count");
  }
  orbits_ = group_.orbits(support_.points);
  axiom_reps_ = group_.axiom_representatives(*system_);
}

std::vector<std::int64_t> ReducedProblem::counts(const PackedMonomial& m) const {
  std::vector<std::int64_t> out(orbits_.orbit_count(), 0);
  if (m.zero) return out;
  for (std::size_t i = 0; i < support_.points.size(); ++i) {
    if (m.eval(support_.points[i])) ++out[orbits_.label[i]];
  }
  return out;
}

ReducedColumn ReducedProblem::make_column(const TcsItem& item) const {
  return ReducedColumn{item, counts(pack(item.product))};
}

std::vector<ReducedColumn> ReducedProblem::seed_columns() const {
  const auto& axioms = system_->packed_axioms();
  const std::size_t n = system_->var_count();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<ReducedColumn> out;
  for (std::size_t o = 0; o < orbits_.orbit_count(); ++o) {
    PackedAssignment x = support_.points[orbits_.representative[o]];
    auto it = std::find_if(axioms.begin(), axioms.end(), [&](const PackedMonomial& a) { return a.eval(x); });
    if (it == axioms.end()) {
      throw StructuralError("support point " + format_bits(x, n) + " satisfies every axiom");
    }
    TcsItem item{TcsItem::Kind::Weakening, static_cast<std::size_t>(it - axioms.begin()),
                 unpack(PackedMonomial{x & all, ~x & all, false})};
    out.push_back(make_column(item));
  }
  return out;
}

namespace {

// D scaled to integers: value[i] = d(orbit of point i) * scale.
struct ScaledValues {
  std::vector<Int128> value;
  Int128 scale = 1;
};

ScaledValues scale_values(const ReducedProblem& problem, const std::vector<Rational>& d) {
  if (d.size() != problem.orbits().orbit_count()) throw ParameterError("one value per orbit expected");
  Integer lcm = 1;
  for (const auto& v : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  Integer total = 0;
  std::vector<Integer> per_orbit;
  per_orbit.reserve(d.size());
  for (std::size_t o = 0; o < d.size(); ++o) {
    Integer s = d[o].get_num() * (lcm / d[o].get_den());
    total += abs(s) * problem.orbits().size[o];
    per_orbit.push_back(s);
  }
  if (mpz_sizeinbase(total.get_mpz_t(), 2) > 120 || mpz_sizeinbase(lcm.get_mpz_t(), 2) > 120) {
    throw ParameterError("dual values too large for the integer oracle");
  }
  ScaledValues out;
  out.scale = to_int128(lcm);
  std::vector<Int128> orbit_value;
  orbit_value.reserve(per_orbit.size());
  for (const auto& s : per_orbit) orbit_value.push_back(to_int128(s));
  out.value.reserve(problem.support().size());
  for (auto label : problem.orbits().label) out.value.push_back(orbit_value[label]);
  return out;
}

struct Candidate {
  Int128 magnitude = 0;
  Int128 value = 0;
  std::uint32_t source = 0;
  std::size_t index = 0;
};

// Items are built lazily: most violated cells never make it into the LP.
using ItemBuilder = std::function<TcsItem(std::size_t)>;

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

// Largest violations first, one per distinct signed value, distinct count
// vectors only.
std::vector<ReducedColumn> select(const ReducedProblem& problem, std::vector<Candidate> cands,
                                  const std::vector<ItemBuilder>& builders, std::size_t max_columns) {
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.magnitude > b.magnitude; });
  std::vector<ReducedColumn> out;
  std::set<Int128> values;
  std::set<std::vector<std::int64_t>> patterns;
  for (auto& c : cands) {
    if (out.size() >= max_columns) break;
    if (!values.insert(c.value).second) continue;
    ReducedColumn col = problem.make_column(builders[c.source](c.index));
    if (!patterns.insert(col.counts).second) continue;
    out.push_back(std::move(col));
  }
  return out;
}

constexpr std::size_t kMaxCubeCells = std::size_t{1} << 25;

// Ternary zeta transform: on entry cell(digits) holds the sum over points
// whose free-variable bits equal the digits (0/1); on exit a digit 2 means
// "variable absent" and sums both halves.
void ternary_zeta(std::vector<Int128>& g, std::size_t dims) {
  std::size_t stride = 1;
  for (std::size_t t = 0; t < dims; ++t) {
    for (std::size_t base = 0; base < g.size(); base += 3 * stride) {
      for (std::size_t k = 0; k < stride; ++k) {
        g[base + 2 * stride + k] = g[base + k] + g[base + stride + k];
      }
    }
    stride *= 3;
  }
}

std::size_t cube_cells(std::size_t dims) {
  std::size_t cells = 1;
  for (std::size_t t = 0; t < dims; ++t) {
    cells *= 3;
    if (cells > kMaxCubeCells) throw ParameterError("too many free variables for the cube oracle");
  }
  return cells;
}

Monomial monomial_from_digits(const std::vector<VarId>& vars, std::size_t index, const Monomial& base) {
  std::vector<VarId> pos = base.positives();
  std::vector<VarId> neg = base.negatives();
  for (VarId v : vars) {
    switch (index % 3) {
      case 0: neg.push_back(v); break;
      case 1: pos.push_back(v); break;
      default: break;
    }
    index /= 3;
  }
  return Monomial::from_literals(std::move(pos), std::move(neg));
}

}  // namespace

std::vector<ReducedColumn> CubeOracle::separate(const ReducedProblem& problem, const std::vector<Rational>& d,
                                                std::size_t max_columns) {
  const AxiomSystem& sys = problem.system();
  const auto& points = problem.support().points;
  ScaledValues sv = scale_values(problem, d);
  std::vector<Candidate> cands;
  std::vector<ItemBuilder> builders;

  auto scan = [&](const std::vector<VarId>& vars, const PackedMonomial& filter, const Monomial& base,
                  TcsItem::Kind kind, std::size_t axiom) {
    std::vector<Int128> g(cube_cells(vars.size()), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!filter.eval(points[i])) continue;
      std::size_t index = 0;
      std::size_t weight = 1;
      for (VarId v : vars) {
        index += ((points[i] >> v) & 1U) * weight;
        weight *= 3;
      }
      g[index] += sv.value[i];
    }
    ternary_zeta(g, vars.size());
    auto source = static_cast<std::uint32_t>(builders.size());
    builders.emplace_back([vars, base, kind, axiom](std::size_t idx) {
      return TcsItem{kind, axiom, monomial_from_digits(vars, idx, base)};
    });
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      bool violated = kind == TcsItem::Kind::Weakening ? abs128(g[idx]) > sv.scale : g[idx] < -sv.scale;
      if (violated) cands.push_back(Candidate{abs128(g[idx]), g[idx], source, idx});
    }
  };

  for (std::size_t a : problem.axiom_representatives()) {
    const Monomial& axiom = sys.axiom(a).monomial;
    std::vector<VarId> free;
    for (VarId v = 0; v < sys.var_count(); ++v) {
      if (!axiom.mentions(v)) free.push_back(v);
    }
    scan(free, sys.packed_axioms()[a], axiom, TcsItem::Kind::Weakening, a);
  }
  if (problem.proof() == ProofSystem::ResolutionLike) {
    std::vector<VarId> all(sys.var_count());
    std::iota(all.begin(), all.end(), VarId{0});
    scan(all, PackedMonomial{}, Monomial{}, TcsItem::Kind::Monomial, 0);
  }
  return select(problem, std::move(cands), builders, max_columns);
}

std::vector<Int128> holeset_sums(int n, int first, int second, int hole,
                                 const std::function<Int128(PackedAssignment)>& value) {
  if (n < 3 || n > 6) throw ParameterError("H-set transform supports 3 <= n <= 6");
  const std::size_t radix = static_cast<std::size_t>(n - 1);
  const std::size_t masks = std::size_t{1} << radix;
  std::vector<int> others;
  for (int i = 0; i < n; ++i) {
    if (i != first && i != second) others.push_back(i);
  }
  const std::size_t p = others.size();

  std::size_t cells = 1;
  for (std::size_t k = 0; k < p; ++k) cells *= radix;
  std::vector<Int128> cur(cells, 0);
  std::vector<int> holes(static_cast<std::size_t>(n), hole);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = 0; k < p; ++k) {
      holes[static_cast<std::size_t>(others[k])] = static_cast<int>(rest % radix);
      rest /= radix;
    }
    cur[idx] = value(encode_php_assignment(n, holes));
  }

  std::size_t inner = 1;
  std::size_t outer = cells / radix;
  for (std::size_t k = 0; k < p; ++k) {
    std::vector<Int128> next(inner * masks * outer, 0);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t h = 1; h < masks; ++h) {
        std::size_t lower = h & (h - 1);
        auto bit = static_cast<std::size_t>(std::countr_zero(h));
        Int128* dst = &next[(o * masks + h) * inner];
        const Int128* prev = &next[(o * masks + lower) * inner];
        const Int128* src = &cur[(o * radix + bit) * inner];
        for (std::size_t i = 0; i < inner; ++i) dst[i] = prev[i] + src[i];
      }
    }
    cur = std::move(next);
    inner *= masks;
    if (k + 1 < p) outer /= radix;
  }
  return cur;
}

HoleSets holesets_from_index(int n, int first, int second, int hole, std::size_t index) {
  HoleSets h = make_holesets(n, first, second, hole);
  const std::size_t radix = static_cast<std::size_t>(n - 1);
  const std::size_t mask = (std::size_t{1} << radix) - 1;
  for (int i = 0; i < n; ++i) {
    if (i == first || i == second) continue;
    h.masks[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index & mask);
    index >>= radix;
  }
  return h;
}

std::vector<ReducedColumn> PhpHoleSetOracle::separate(const ReducedProblem& problem, const std::vector<Rational>& d,
                                                      std::size_t max_columns) {
  const AxiomSystem& sys = problem.system();
  if (sys.family() != Family::Php) throw ParameterError("H-set oracle needs a PHP system");
  if (problem.proof() != ProofSystem::Nullstellensatz) {
    throw ParameterError("H-set oracle covers Nullstellensatz rows only");
  }
  const int n = sys.n();
  ScaledValues sv = scale_values(problem, d);
  const Support& support = problem.support();
  auto value = [&](PackedAssignment x) -> Int128 {
    auto i = support.index_of(x);
    if (!i) throw StructuralError("support is not the one-hole-per-pigeon set");
    return sv.value[*i];
  };
  std::vector<Candidate> cands;
  std::vector<ItemBuilder> builders;
  for (std::size_t a : problem.axiom_representatives()) {
    const Axiom& ax = sys.axiom(a);
    if (ax.kind != AxiomKind::HoleCollision) continue;
    const int i1 = ax.elements[0];
    const int i2 = ax.elements[1];
    const int j = ax.elements[2];
    std::vector<Int128> sums = holeset_sums(n, i1, i2, j, value);
    auto source = static_cast<std::uint32_t>(builders.size());
    builders.emplace_back([&sys, n, i1, i2, j, a](std::size_t idx) {
      Weakening w = holesets_to_weakening(sys, holesets_from_index(n, i1, i2, j, idx));
      return TcsItem{TcsItem::Kind::Weakening, a, w.product};
    });
    for (std::size_t idx = 0; idx < sums.size(); ++idx) {
      if (abs128(sums[idx]) > sv.scale) cands.push_back(Candidate{abs128(sums[idx]), sums[idx], source, idx});
    }
  }
  return select(problem, std::move(cands), builders, max_columns);
}

std::unique_ptr<SeparationOracle> default_oracle(const ReducedProblem& problem) {
  const AxiomSystem& sys = problem.system();
  if (sys.family() == Family::Php && problem.proof() == ProofSystem::Nullstellensatz && sys.n() >= 3 &&
      sys.n() <= 6) {
    const auto& pts = problem.support().points;
    bool restricted = std::all_of(pts.begin(), pts.end(), [&](PackedAssignment x) {
      try {
        (void)decode_php_assignment(sys.n(), x);
        return true;
      } catch (const StructuralError&) {
        return false;
      }
    });
    if (restricted) return std::make_unique<PhpHoleSetOracle>();
  }
  return std::make_unique<CubeOracle>();
}

}  // namespace nsz::lp
