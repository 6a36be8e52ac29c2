#include "nsz/errors.hpp"
#include "nsz/lp/simplex.hpp"
#include "nsz/lp/tcs_solver.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nsz;
using namespace nsz::lp;

namespace {

TcsResult solve(Family family, int n, SupportMode mode, TcsMethod method,
                ProofSystem proof = ProofSystem::Nullstellensatz) {
  TcsRequest r;
  r.family = family;
  r.n = n;
  r.mode = mode;
  r.method = method;
  r.proof = proof;
  return solve_tcs(r);
}

// Largest |D(W)| over every weakening, by plain enumeration.
Rational max_abs_dw(const AxiomSystem& sys, const DualFunctional& d) {
  Rational best = 0;
  for (std::size_t a = 0; a < sys.axioms().size(); ++a) {
    for_each_weakening_packed(sys, a, [&](const PackedMonomial& w) {
      Rational v = abs(d.apply(w));
      if (v > best) best = v;
    });
  }
  return best;
}

}  // namespace

TEST(TcsModels, PlainPrimalAndDualAgreeOnSmallSystems) {
  for (auto family : {Family::Php, Family::Ord}) {
    for (auto mode : {SupportMode::Full, SupportMode::Restricted}) {
      auto p = solve(family, 3, mode, TcsMethod::Primal);
      auto d = solve(family, 3, mode, TcsMethod::Dual);
      EXPECT_EQ(p.value, d.value) << to_string(family) << " " << to_string(mode);
      ASSERT_TRUE(p.certificate.has_value());
      EXPECT_EQ(p.certificate->total_coefficient_size(), p.value);
    }
  }
}

TEST(TcsModels, PrimalCertificateIsValidWhereItShouldBe) {
  auto full = solve(Family::Php, 3, SupportMode::Full, TcsMethod::Primal);
  EXPECT_TRUE(verify_certificate(*full.certificate).ok);
  auto restricted = solve(Family::Ord, 4, SupportMode::Restricted, TcsMethod::Primal);
  EXPECT_TRUE(verify_certificate_on(*restricted.certificate, assignments_no_minimum(4)).ok);
}

TEST(TcsModels, DualFunctionalIsFeasibleAndAttainsTheValue) {
  for (auto family : {Family::Php, Family::Ord}) {
    auto r = solve(family, 3, SupportMode::Full, TcsMethod::Dual);
    EXPECT_EQ(r.dual.total(), r.value);
    EXPECT_LE(max_abs_dw(*r.system, r.dual), 1);
  }
}

TEST(TcsModels, WeakDualityBetweenIndependentSolves) {
  auto p = solve(Family::Ord, 4, SupportMode::Full, TcsMethod::Primal);
  auto d = solve(Family::Ord, 4, SupportMode::Full, TcsMethod::Dual);
  auto report = weak_duality_check(*p.certificate, d.dual, *p.system);
  EXPECT_TRUE(report.holds);
  EXPECT_TRUE(report.certificate_valid_on_support);
  EXPECT_EQ(report.dual_value, report.primal_tcs);
}

TEST(TcsModels, ResolutionLikeNeverExceedsNullstellensatz) {
  for (auto mode : {SupportMode::Full, SupportMode::Restricted}) {
    auto ns = solve(Family::Php, 3, mode, TcsMethod::Dual);
    auto rl = solve(Family::Php, 3, mode, TcsMethod::Dual, ProofSystem::ResolutionLike);
    EXPECT_LE(rl.value, ns.value);
    auto rlp = solve(Family::Php, 3, mode, TcsMethod::Primal, ProofSystem::ResolutionLike);
    EXPECT_EQ(rlp.value, rl.value);
    ASSERT_TRUE(rlp.certificate.has_value());
    EXPECT_EQ(rlp.certificate->target(), -1);
  }
}

TEST(TcsModels, DistinctItemsDropDuplicates) {
  auto sys = build_php(3);
  auto support = Support::php_restricted(3);
  auto items = distinct_items(sys, support, ProofSystem::Nullstellensatz);
  std::set<std::vector<bool>> patterns;
  for (const auto& it : items) {
    std::vector<bool> pattern;
    auto pm = pack(it.product);
    for (auto x : support.points) pattern.push_back(pm.eval(x));
    EXPECT_TRUE(patterns.insert(pattern).second);
    EXPECT_TRUE(std::find(pattern.begin(), pattern.end(), true) != pattern.end());
  }
}

TEST(ColumnGeneration, AgreesWithPlainLp) {
  struct Case {
    Family family;
    int n;
    SupportMode mode;
  };
  for (auto c : {Case{Family::Php, 3, SupportMode::Full}, Case{Family::Php, 4, SupportMode::Restricted},
                 Case{Family::Ord, 4, SupportMode::Full}, Case{Family::Ord, 4, SupportMode::Restricted}}) {
    auto plain = solve(c.family, c.n, c.mode, TcsMethod::Dual);
    auto cg = solve(c.family, c.n, c.mode, TcsMethod::ColumnGeneration);
    EXPECT_EQ(plain.value, cg.value) << to_string(c.family) << c.n << " " << to_string(c.mode);
    EXPECT_EQ(cg.dual.total(), cg.value);
    EXPECT_LE(max_abs_dw(*cg.system, cg.dual), 1);
    ASSERT_TRUE(cg.certificate.has_value());
    EXPECT_EQ(cg.certificate->total_coefficient_size(), cg.value);
    EXPECT_TRUE(verify_certificate_on(*cg.certificate, cg.support.points).ok);
  }
}

TEST(ColumnGeneration, NullOracleStopsAtTheSeedRelaxation) {
  auto sys = std::make_shared<const AxiomSystem>(build_php(4));
  ReducedProblem problem(sys, Support::php_restricted(4), SymmetryGroup::php(4), ProofSystem::Nullstellensatz);
  NullOracle none;
  auto relaxed = solve_with_constraint_generation(problem, none);
  EXPECT_EQ(relaxed.rounds, 1u);

  // Independent value of the seed-only program.
  StandardFormSimplex s([&] {
    std::vector<Rational> b;
    for (auto size : problem.orbits().size) b.emplace_back(static_cast<long>(size));
    return b;
  }());
  for (const auto& col : problem.seed_columns()) {
    SparseRow plus;
    SparseRow minus;
    for (std::size_t o = 0; o < col.counts.size(); ++o) {
      if (col.counts[o] != 0) {
        plus.emplace_back(o, col.counts[o]);
        minus.emplace_back(o, -col.counts[o]);
      }
    }
    s.add_column(plus, 1);
    s.add_column(minus, 1);
  }
  ASSERT_EQ(s.solve(), LpStatus::Optimal);
  EXPECT_EQ(relaxed.value, s.value());

  auto full = solve_with_constraint_generation(problem, *default_oracle(problem));
  EXPECT_GE(relaxed.value, full.value);
  EXPECT_EQ(full.value, 27);
}

TEST(ColumnGeneration, OraclesFindExactlyTheViolatedRows) {
  std::mt19937_64 rng(37);
  auto sys = std::make_shared<const AxiomSystem>(build_ord(4));
  ReducedProblem problem(sys, Support::full(*sys), SymmetryGroup::ord(4), ProofSystem::Nullstellensatz);
  CubeOracle cube;
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> d;
    for (std::size_t o = 0; o < problem.orbits().orbit_count(); ++o) {
      d.push_back(make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 12)));
    }
    // Brute force over every weakening of every axiom.
    bool violated = false;
    for (std::size_t a = 0; a < sys->axioms().size(); ++a) {
      for_each_weakening_packed(*sys, a, [&](const PackedMonomial& w) {
        auto counts = problem.counts(w);
        Rational g = 0;
        for (std::size_t o = 0; o < counts.size(); ++o) g += Rational(static_cast<long>(counts[o])) * d[o];
        if (abs(g) > 1) violated = true;
      });
    }
    auto cols = cube.separate(problem, d, 10);
    EXPECT_EQ(!cols.empty(), violated);
    for (const auto& c : cols) {
      Rational g = 0;
      for (std::size_t o = 0; o < c.counts.size(); ++o) g += Rational(static_cast<long>(c.counts[o])) * d[o];
      EXPECT_GT(abs(g), 1);
      EXPECT_EQ(c.counts, problem.make_column(c.item).counts);
    }
  }
}

TEST(ColumnGeneration, HoleSetSumsMatchDirectSummation) {
  std::mt19937_64 rng(41);
  for (int n = 3; n <= 5; ++n) {
    auto points = assignments_one_hole_per_pigeon(n);
    std::map<PackedAssignment, Int128> value;
    for (auto x : points) value[x] = static_cast<Int128>(static_cast<long>(rng() % 21) - 10);
    auto sums = holeset_sums(n, 0, 1, 0, [&](PackedAssignment x) { return value.at(x); });
    for (int t = 0; t < 40; ++t) {
      std::size_t index = rng() % sums.size();
      HoleSets h = holesets_from_index(n, 0, 1, 0, index);
      Int128 direct = 0;
      for (auto x : points) {
        if (h.eval(decode_php_assignment(n, x))) direct += value.at(x);
      }
      EXPECT_TRUE(direct == sums[index]) << "n=" << n << " index " << index;
    }
  }
}

TEST(TcsSolver, ParsersRejectUnknownNames) {
  EXPECT_EQ(parse_support_mode("restricted"), SupportMode::Restricted);
  EXPECT_EQ(parse_tcs_method("congen"), TcsMethod::ColumnGeneration);
  EXPECT_EQ(parse_proof_system("resolution-like"), ProofSystem::ResolutionLike);
  EXPECT_THROW(parse_support_mode("partial"), ParameterError);
  EXPECT_THROW(parse_tcs_method("interior"), ParameterError);
}
