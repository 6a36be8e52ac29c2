#include "cli/samplers.hpp"
#include "nsz/errors.hpp"
#include "nsz/php_dual.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace nsz;
namespace pd = nsz::php_dual;

namespace {

Rational uniform_mean(int n, const std::function<Rational(const pd::Holes&)>& f) {
  Rational sum = 0;
  pd::for_each_restricted(n, [&](const pd::Holes& x) { sum += f(x); });
  return sum / Rational(pd::restricted_count(n));
}

// Every H-set tuple of every hole axiom, straight from the definition.
Rational brute_max_abs_dw(int n) {
  Rational best = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int hole = 0; hole < n - 1; ++hole) {
        HoleSets h = make_holesets(n, a, b, hole);
        std::vector<int> others;
        for (int i = 0; i < n; ++i) {
          if (i != a && i != b) others.push_back(i);
        }
        const std::uint32_t radix = h.full_mask() + 1;
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < others.size(); ++k) total *= radix;
        for (std::uint64_t code = 0; code < total; ++code) {
          std::uint64_t c = code;
          for (int i : others) {
            h.masks[i] = static_cast<std::uint32_t>(c % radix);
            c /= radix;
          }
          best = std::max(best, abs(pd::exp_dw(n, h)));
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST(PhpDual, CoefficientsFollowTheSignedFactorialPattern) {
  EXPECT_EQ(pd::coefficient(3, 2), 1);
  EXPECT_EQ(pd::coefficient(3, 1), make_rational(-1, 2));
  EXPECT_EQ(pd::coefficient(3, 0), make_rational(1, 2));
  EXPECT_EQ(pd::coefficient(4, 0), make_rational(-6, 27));
}

TEST(PhpDual, OccupancyFormEqualsSubsetSum) {
  for (int n = 3; n <= 5; ++n) {
    pd::for_each_restricted(n, [&](const pd::Holes& x) {
      ASSERT_EQ(pd::d_eval(n, x), pd::d_eval_subsets(n, x));
      Rational scaled(pd::scaled_d(n, x));
      ASSERT_EQ(scaled, pd::d_eval(n, x) * Rational(power(Integer(n - 1), n - 1)));
    });
  }
}

TEST(PhpDual, PackedEvaluationVanishesOffSupport) {
  EXPECT_EQ(pd::d_eval(3, PackedAssignment{0}), 0);
  EXPECT_EQ(pd::d_eval(3, encode_php_assignment(3, {0, 1, 1})), pd::d_eval(3, pd::Holes{0, 1, 1}));
}

TEST(PhpDual, JRejectsTheFullPigeonSet) { EXPECT_THROW(pd::j_eval(3, 0b111, {0, 1, 0}), ParameterError); }

TEST(PhpDual, ExpectationOfJMatchesCounting) {
  for (int n = 3; n <= 6; ++n) {
    for (int s = 0; s < n; ++s) {
      std::uint32_t pigeons = (1u << s) - 1;
      Rational mean = uniform_mean(n, [&](const pd::Holes& x) { return Rational(pd::j_eval(n, pigeons, x) ? 1 : 0); });
      EXPECT_EQ(pd::exp_j_closed(n, s), mean) << "n=" << n << " s=" << s;
    }
  }
}

TEST(PhpDual, ExpectationClosedFormsMatchSummation) {
  const Rational expected[] = {make_rational(1, 2), make_rational(2, 9), make_rational(3, 32), make_rational(24, 625)};
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(pd::exp_d_brute(n), expected[n - 3]);
    EXPECT_EQ(pd::exp_d_closed(n), expected[n - 3]);
    Rational sq = uniform_mean(n, [&](const pd::Holes& x) -> Rational {
      Rational v = pd::d_eval(n, x);
      return v * v;
    });
    EXPECT_EQ(pd::norm_d_squared_brute(n), sq);
    EXPECT_EQ(pd::norm_d_squared_closed(n), sq);
    EXPECT_LE(sq, pd::norm_d_squared_bound(n));
    Rational series = 0;
    for (const auto& t : pd::norm_series_terms(n)) series += t;
    EXPECT_EQ(series * pd::exp_d_closed(n) * Rational(factorial(static_cast<unsigned>(n))), sq);
  }
}

TEST(PhpDual, TamperedCoefficientSignBreaksTheClosedForm) {
  // Flip the sign of c_{n-2} and recompute E(D) by summation.
  for (int n = 3; n <= 6; ++n) {
    Rational tampered = uniform_mean(n, [&](const pd::Holes& x) {
      Rational v = 0;
      for (std::uint32_t s = 0; s + 1 < (1u << n); ++s) {
        if (!pd::j_eval(n, s, x)) continue;
        Rational c = pd::coefficient(n, std::popcount(s));
        v += std::popcount(s) == n - 2 ? Rational(-c) : c;
      }
      return v;
    });
    EXPECT_NE(tampered, pd::exp_d_closed(n));
  }
}

TEST(PhpDual, FunctionalAgreesWithPointwiseValues) {
  auto d = pd::functional(4);
  EXPECT_EQ(d.total() / Rational(pd::restricted_count(4)), pd::exp_d_closed(4));
  for (const auto& [x, v] : d.values()) EXPECT_EQ(v, pd::d_eval(4, x));
}

TEST(PhpDual, ExtremalSearchMatchesExhaustiveEnumeration) {
  for (int n = 3; n <= 4; ++n) {
    auto ext = pd::max_abs_exp_dw(n);
    EXPECT_EQ(ext.max_abs, brute_max_abs_dw(n));
    EXPECT_EQ(abs(pd::exp_dw(n, ext.witness)), ext.max_abs);
  }
}

TEST(PhpDual, ConjecturedWeakeningAttainsTheMaximum) {
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(abs(pd::exp_dw(n, pd::conjectured_extremal_weakening(n))), pd::max_abs_exp_dw(n).max_abs) << n;
  }
}

TEST(PhpDual, ExpectationAgainstPolynomials) {
  auto sys = build_php(4);
  cli::Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    HoleSets h = cli::random_holesets(4, rng);
    auto w = holesets_to_weakening(sys, h);
    EXPECT_EQ(pd::exp_dp(4, Polynomial::term(w.product)), pd::exp_dw(4, h));
  }
}

class LemmaLaws : public ::testing::TestWithParam<int> {};

TEST_P(LemmaLaws, FlipUnrestrictedSignedAndOnePigeonIgnored) {
  const int n = GetParam();
  cli::Rng rng(1000 + static_cast<std::uint64_t>(n));
  const Rational scale(power(Integer(2), n - 2));
  for (int s = 0; s < 100; ++s) {
    HoleSets h = cli::random_holesets(n, rng);
    Rational base = pd::exp_dw(n, h);
    std::uint32_t flip = cli::random_other_pigeons(h, rng);
    Rational sign = std::popcount(flip) % 2 == 0 ? 1 : -1;
    ASSERT_EQ(pd::exp_dw(n, pd::flip(h, flip)), sign * base);
    ASSERT_EQ(pd::exp_dw_signed(n, h), scale * base);
    for (int i = 0; i < n; ++i) {
      if (i == h.first || i == h.second) continue;
      HoleSets open = h;
      open.masks[i] = open.full_mask();
      ASSERT_EQ(pd::exp_dw(n, open), 0);
    }
    int skip = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    Polynomial p = cli::random_polynomial_ignoring(n, skip, rng);
    ASSERT_EQ(pd::exp_dp(n, p), pd::exp_jp(n, ((1u << n) - 1) & ~(1u << skip), p));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, LemmaLaws, ::testing::Values(3, 4, 5, 6));

TEST(PhpDual, DualValuesAndBound) {
  EXPECT_EQ(pd::dual_value(3), 4);
  EXPECT_EQ(pd::dual_value(4), 18);
  EXPECT_EQ(pd::dual_value(5), 64);
  EXPECT_EQ(pd::dual_value(6), make_rational(18750, 89));
  const char* rounded[] = {"1.633", "2.828", "4.382", "6.400"};
  for (int n = 3; n <= 6; ++n) {
    auto b = pd::php_lower_bound(n);
    EXPECT_EQ(b.decimal(3), rounded[n - 3]);
    EXPECT_TRUE(b.at_most(pd::dual_value(n)));
    auto before_estimate = pd::norm_based_bound(n);
    EXPECT_LE(b.squared(), before_estimate.squared());
    EXPECT_TRUE(before_estimate.at_most(pd::dual_value(n)));
  }
}

TEST(PhpDual, RootValueRoundingIsExact) {
  pd::RootValue two{1, 2};
  EXPECT_EQ(two.decimal(3), "1.414");
  EXPECT_EQ(two.decimal(0), "1");
  pd::RootValue quarter{make_rational(1, 2), 1};
  EXPECT_EQ(quarter.decimal(0), "1");
  EXPECT_TRUE(two.at_most(make_rational(1415, 1000)));
  EXPECT_FALSE(two.at_most(make_rational(1414, 1000)));
}

TEST(PhpDual, ResolutionFailureSummation) {
  for (int n = 3; n <= 6; ++n) {
    Monomial m = pd::no_pigeon_in_first_hole(n);
    Rational direct = uniform_mean(n, [&](const pd::Holes& x) {
      bool all_avoid = std::none_of(x.begin(), x.end(), [](int h) { return h == 0; });
      return all_avoid ? pd::d_eval(n, x) : Rational(0);
    });
    EXPECT_EQ(pd::resolution_failure_brute(n), direct);
    EXPECT_EQ(pd::exp_dp(n, Polynomial::term(m)), direct);
    EXPECT_EQ(pd::resolution_failure_corrected(n), direct);
    EXPECT_EQ(pd::failure_observation_monomials(n).size(), 3u);
  }
  // The printed form and summation agree for odd n only.
  EXPECT_EQ(pd::resolution_failure_closed(3), pd::resolution_failure_brute(3));
  EXPECT_EQ(pd::resolution_failure_closed(5), pd::resolution_failure_brute(5));
}
