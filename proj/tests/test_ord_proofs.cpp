#include "nsz/errors.hpp"
#include "nsz/lp/tcs_solver.hpp"
#include "nsz/ord_proofs.hpp"

#include <gtest/gtest.h>

using namespace nsz;
namespace op = nsz::ord_proofs;

TEST(OrdProof, SizeValidityAndPartition) {
  for (int n = 3; n <= 6; ++n) {
    auto cert = op::build_ord_proof(n);
    EXPECT_EQ(cert.entries().size(), static_cast<std::size_t>((1 << n) - n));
    EXPECT_EQ(cert.total_coefficient_size(), (1 << n) - n);
    EXPECT_EQ(cert.target(), 1);
    auto v = verify_certificate(cert);
    EXPECT_TRUE(v.ok) << n;
    EXPECT_EQ(v.points_checked, std::uint64_t{1} << (n * (n - 1) / 2));
    EXPECT_TRUE(op::check_partition(cert).ok);
    EXPECT_TRUE(op::check_nice_transitivity(cert));
    for (const auto& [key, c] : cert.entries()) EXPECT_EQ(c, 1);
  }
}

TEST(OrdProof, EveryNonminimalityAxiomAppearsOnce) {
  auto cert = op::build_ord_proof(5);
  int nonmin = 0;
  for (const auto& [key, c] : cert.entries()) {
    if (cert.system().axiom(key.axiom_index).kind == AxiomKind::NonMinimality) {
      ++nonmin;
      EXPECT_TRUE(cert.multiplier(key).is_one());
    }
  }
  EXPECT_EQ(nonmin, 5);
}

TEST(OrdProof, DeletingAnEntryBreaksVerification) {
  auto cert = op::build_ord_proof(4);
  for (const auto& [key, c] : cert.entries()) {
    if (cert.system().axiom(key.axiom_index).kind != AxiomKind::Transitivity) continue;
    ProofCertificate broken = cert;
    broken.erase(key);
    auto v = verify_certificate(broken);
    ASSERT_FALSE(v.ok);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_NE(certificate_value(broken, *v.witness), 1);
    EXPECT_EQ(certificate_value(cert, *v.witness), 1);
    EXPECT_FALSE(op::check_partition(broken).ok);
  }
}

TEST(OrdProof, WitnessIsTheLowestFailingPoint) {
  auto cert = op::build_ord_proof(4);
  ProofCertificate broken = cert;
  broken.erase(cert.entries().rbegin()->first);
  auto v = verify_certificate(broken, 4);
  ASSERT_TRUE(v.witness.has_value());
  for (PackedAssignment x = 0; x < *v.witness; ++x) ASSERT_EQ(certificate_value(broken, x), 1);
}

TEST(OrdProof, NiceTransitivityRecognizesGraphs) {
  auto sys = build_ord(3);
  // The bare axiom has 3 edges on 3 elements, all reachable from the root.
  std::size_t t = ord::transitivity_axiom(3, 0, 1, 2);
  EXPECT_TRUE(op::is_nice_transitivity(sys, {t, sys.axiom(t).monomial}));
  auto edges = op::orientation_edges(3, sys.axiom(t).monomial);
  EXPECT_EQ(edges.size(), 3u);
}

TEST(RestrictionTransform, LiftsTheLpCertificate) {
  lp::TcsRequest req;
  req.family = Family::Ord;
  req.n = 4;
  req.mode = lp::SupportMode::Restricted;
  req.method = lp::TcsMethod::Primal;
  auto res = lp::solve_tcs(req);
  ASSERT_TRUE(res.certificate.has_value());
  const auto& partial = *res.certificate;
  EXPECT_EQ(partial.total_coefficient_size(), 8);
  EXPECT_FALSE(verify_certificate(partial).ok);
  auto full = op::restrict_to_no_min(partial);
  EXPECT_TRUE(verify_certificate(full).ok);
  EXPECT_LE(full.total_coefficient_size(), 5 * partial.total_coefficient_size() + 4);
}

TEST(RestrictionTransform, FullProofsStayValid) {
  auto cert = op::build_ord_proof(4);
  auto lifted = op::restrict_to_no_min(cert);
  EXPECT_TRUE(verify_certificate(lifted).ok);
}

TEST(RestrictionTransform, RejectsInputInvalidWithoutAMinimum) {
  auto cert = op::build_ord_proof(4);
  ProofCertificate broken = cert;
  for (const auto& [key, c] : cert.entries()) {
    if (cert.system().axiom(key.axiom_index).kind == AxiomKind::Transitivity) {
      broken.erase(key);
      break;
    }
  }
  try {
    op::restrict_to_no_min(broken);
    FAIL() << "expected VerificationError";
  } catch (const VerificationError& e) {
    EXPECT_FALSE(ord::has_minimum(4, e.witness()));
    EXPECT_NE(certificate_value(broken, e.witness()), 1);
  }
}

TEST(RestrictionTransform, RejectsSumOfSquaresInput) {
  EXPECT_THROW(op::restrict_to_no_min(op::build_sos_ord_proof(4)), ParameterError);
}

TEST(SosProof, IdentityAndBuildingBlock) {
  for (int n = 3; n <= 6; ++n) {
    auto cert = op::build_sos_ord_proof(n);
    EXPECT_EQ(cert.target(), -1);
    EXPECT_TRUE(verify_certificate(cert).ok) << n;
    EXPECT_TRUE(op::check_building_block(n)) << n;
    EXPECT_EQ(op::sos_total_coefficient_size(cert), cert.total_coefficient_size());
  }
}

TEST(SosProof, PrefixMonomialsAreIndicators) {
  const int n = 4;
  for (PackedAssignment x = 0; x < 64; ++x) {
    for (int m = 1; m <= n; ++m) {
      for (int j = 0; j < m; ++j) {
        bool first = true;
        for (int i = 0; i < m; ++i) {
          if (i != j && !ord::precedes(n, x, j, i)) first = false;
        }
        ASSERT_EQ(pack(op::prefix_first(n, j, m)).eval(x), first);
      }
    }
  }
}

TEST(SosProof, DroppingASquareBreaksTheIdentity) {
  auto cert = op::build_sos_ord_proof(4);
  ProofCertificate partial(cert.system_ptr(), cert.target());
  for (const auto& [key, c] : cert.entries()) partial.add_product(key.axiom_index, key.product, c);
  // The last square carries the 3-cycles on the first three elements.
  for (std::size_t i = 0; i + 1 < cert.squares().size(); ++i) partial.add_square(cert.squares()[i]);
  EXPECT_FALSE(verify_certificate(partial).ok);
}
