#include "nsz/errors.hpp"
#include "nsz/symmetry.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace nsz;

TEST(Symmetry, GroupOrders) {
  EXPECT_EQ(SymmetryGroup::php(3).order(), 12);
  EXPECT_EQ(SymmetryGroup::php(4).order(), 144);
  EXPECT_EQ(SymmetryGroup::ord(5).order(), 120);
  EXPECT_EQ(SymmetryGroup::php(3).elements().size(), 12u);
  EXPECT_EQ(SymmetryGroup::ord(4).elements().size(), 24u);
}

TEST(Symmetry, ElementsAreDistinctAndClosed) {
  auto g = SymmetryGroup::ord(4);
  auto elems = g.elements();
  std::set<SignedPermutation> set(elems.begin(), elems.end());
  EXPECT_EQ(set.size(), elems.size());
  for (const auto& a : elems) {
    for (const auto& b : g.generators()) EXPECT_TRUE(set.contains(compose(a, b)));
  }
}

TEST(Symmetry, WeakeningValuesAreInvariant) {
  std::mt19937_64 rng(23);
  for (auto* build : {&build_php, &build_ord}) {
    auto sys = build(4);
    auto elems = SymmetryGroup::of(sys).elements();
    for (int t = 0; t < 100; ++t) {
      const auto& g = elems[rng() % elems.size()];
      std::size_t a = rng() % sys.axioms().size();
      auto m = sys.axiom(a).monomial;
      auto gm = g.apply(m);
      ASSERT_TRUE(sys.find_monomial(gm).has_value()) << "axiom image is not an axiom";
      PackedAssignment x = rng() & ((PackedAssignment{1} << sys.var_count()) - 1);
      EXPECT_EQ(pack(m).eval(x), pack(gm).eval(g.apply(x)));
      EXPECT_EQ(g.apply(pack(m)), pack(gm));
    }
  }
}

TEST(Symmetry, OrbitsPartitionTheSupport) {
  auto sys = build_ord(5);
  auto pts = assignments_no_minimum(5);
  auto orbits = SymmetryGroup::ord(5).orbits(pts);
  std::size_t total = 0;
  for (auto s : orbits.size) total += s;
  EXPECT_EQ(total, pts.size());
  for (std::size_t o = 0; o < orbits.orbit_count(); ++o) {
    EXPECT_EQ(120 % orbits.size[o], 0u);
  }
  // 12 tournaments on 5 vertices up to isomorphism; the 4 with a source are
  // the tournaments on 4 vertices.
  EXPECT_EQ(orbits.orbit_count(), 8u);
  std::set<std::uint32_t> labels(orbits.label.begin(), orbits.label.end());
  EXPECT_EQ(labels.size(), orbits.orbit_count());
}

TEST(Symmetry, AxiomRepresentatives) {
  EXPECT_EQ(SymmetryGroup::php(4).axiom_representatives(build_php(4)).size(), 2u);
  EXPECT_EQ(SymmetryGroup::ord(4).axiom_representatives(build_ord(4)).size(), 2u);
  EXPECT_EQ(SymmetryGroup::trivial(6).axiom_representatives(build_php(3)).size(), 9u);
}

TEST(Symmetry, NotClosedSetIsRejected) {
  std::vector<PackedAssignment> pts{0b000001};
  EXPECT_THROW(SymmetryGroup::php(3).orbits(pts), StructuralError);
}
