#include "nsz/errors.hpp"
#include "nsz/systems.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nsz;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST(Systems, PhpShape) {
  for (int n = 3; n <= 6; ++n) {
    auto sys = build_php(n);
    EXPECT_EQ(sys.var_count(), static_cast<std::size_t>(n * (n - 1)));
    EXPECT_EQ(sys.axioms().size(), n + (n - 1) * choose(n, 2));
    EXPECT_EQ(sys.name(), "php(" + std::to_string(n) + ")");
  }
  auto sys = build_php(3);
  EXPECT_EQ(sys.var_names()[php::var(3, 1, 0)], "x[2,1]");
  const auto& hole = sys.axiom(php::hole_axiom(3, 0, 2, 1));
  EXPECT_EQ(hole.monomial, Monomial::from_literals({php::var(3, 0, 1), php::var(3, 2, 1)}, {}));
  const auto& pigeon = sys.axiom(php::pigeon_axiom(3, 2));
  EXPECT_EQ(pigeon.monomial, Monomial::from_literals({}, {php::var(3, 2, 0), php::var(3, 2, 1)}));
}

TEST(Systems, OrdShape) {
  for (int n = 3; n <= 6; ++n) {
    auto sys = build_ord(n);
    EXPECT_EQ(sys.var_count(), choose(n, 2));
    EXPECT_EQ(sys.axioms().size(), n + 2 * choose(n, 3));
  }
}

TEST(Systems, OrdPrecedesIsAntisymmetric) {
  const int n = 5;
  for (PackedAssignment x = 0; x < 1024; x += 7) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_NE(ord::precedes(n, x, i, j), ord::precedes(n, x, j, i));
        EXPECT_EQ(pack(ord::precedes(n, i, j)).eval(x), ord::precedes(n, x, i, j));
      }
    }
  }
}

TEST(Systems, EveryAssignmentViolatesSomeAxiom) {
  for (auto* build : {&build_php, &build_ord}) {
    auto sys = build(4);
    const auto& packed = sys.packed_axioms();
    for (PackedAssignment x : assignments_full(sys.var_count())) {
      bool violated = false;
      for (const auto& a : packed) violated = violated || a.eval(x);
      ASSERT_TRUE(violated) << sys.name() << " " << format_bits(x, sys.var_count());
    }
  }
}

TEST(Systems, SupportSizes) {
  for (int n = 3; n <= 5; ++n) {
    EXPECT_EQ(assignments_one_hole_per_pigeon(n).size(), ipow(n - 1, n));
    auto total = std::uint64_t{1} << choose(n, 2);
    auto with_min = std::uint64_t(n) << choose(n - 1, 2);
    EXPECT_EQ(assignments_with_minimum(n).size(), with_min);
    EXPECT_EQ(assignments_no_minimum(n).size(), total - with_min);
  }
}

TEST(Systems, WeakeningEnumerationMatchesCount) {
  auto sys = build_php(3);
  for (std::size_t a = 0; a < sys.axioms().size(); ++a) {
    std::uint64_t seen = 0;
    for_each_weakening(sys, a, [&](const Weakening& w) {
      ++seen;
      EXPECT_TRUE(sys.axiom(a).monomial.divides(w.product));
      EXPECT_EQ(mono_mul(sys.axiom(a).monomial, w.multiplier), w.product);
    });
    EXPECT_EQ(seen, *weakening_count(sys, a));
    std::uint64_t packed = 0;
    for_each_weakening_packed(sys, a, [&](const PackedMonomial&) { ++packed; });
    EXPECT_EQ(packed, seen);
  }
}

TEST(Systems, HoleSetsRoundTrip) {
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 5; ++n) {
    auto sys = build_php(n);
    for (int t = 0; t < 50; ++t) {
      HoleSets h = make_holesets(n, 0, 2, static_cast<int>(rng() % (n - 1)));
      for (int i = 0; i < n; ++i) {
        if (i != 0 && i != 2) h.masks[i] = static_cast<std::uint32_t>(rng() & h.full_mask());
      }
      auto w = holesets_to_weakening(sys, h);
      EXPECT_EQ(holesets_of(sys, w), h);
      auto pw = pack(w.product);
      for (PackedAssignment x : assignments_one_hole_per_pigeon(n)) {
        ASSERT_EQ(pw.eval(x), h.eval(decode_php_assignment(n, x)));
      }
    }
  }
}

TEST(Systems, PhpAssignmentCodec) {
  std::vector<int> holes{2, 0, 1, 1};
  auto x = encode_php_assignment(4, holes);
  EXPECT_EQ(decode_php_assignment(4, x), holes);
  EXPECT_THROW(decode_php_assignment(4, 0), StructuralError);
}

TEST(Systems, FamilyParsing) {
  EXPECT_EQ(parse_family("php"), Family::Php);
  EXPECT_EQ(parse_family("ord"), Family::Ord);
  EXPECT_EQ(to_string(Family::Ord), "ord");
  EXPECT_THROW(build_php(1), ParameterError);
  EXPECT_THROW(build_ord(2), ParameterError);
  EXPECT_THROW(parse_family("tseitin"), FormatError);
}
