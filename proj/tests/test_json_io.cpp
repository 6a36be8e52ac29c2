#include "nsz/errors.hpp"
#include "nsz/json_io.hpp"
#include "nsz/ord_proofs.hpp"
#include "nsz/php_dual.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace nsz;

TEST(JsonIo, FamilySystemsRoundTrip) {
  for (auto sys : {build_php(4), build_ord(5)}) {
    auto back = json_io::system_from_json(json_io::system_to_json(sys));
    EXPECT_EQ(back->family(), sys.family());
    EXPECT_EQ(back->n(), sys.n());
    EXPECT_EQ(back->var_names(), sys.var_names());
    ASSERT_EQ(back->axioms().size(), sys.axioms().size());
    for (std::size_t i = 0; i < sys.axioms().size(); ++i) {
      EXPECT_EQ(back->axiom(i).label, sys.axiom(i).label);
      EXPECT_EQ(back->axiom(i).monomial, sys.axiom(i).monomial);
    }
  }
}

TEST(JsonIo, CustomSystemRoundTrip) {
  std::vector<Axiom> axioms{{"a", Monomial::literal(0, true), AxiomKind::Custom, {}}, {"b", Monomial::literal(0, false), AxiomKind::Custom, {}}};
  AxiomSystem sys(Family::Custom, 0, {"p"}, axioms);
  auto back = json_io::system_from_json(json_io::system_to_json(sys));
  EXPECT_EQ(back->family(), Family::Custom);
  EXPECT_EQ(back->axiom(1).monomial, Monomial::literal(0, false));
}

TEST(JsonIo, CertificatesRoundTrip) {
  for (const auto& cert : {ord_proofs::build_ord_proof(5), ord_proofs::build_sos_ord_proof(4)}) {
    auto text = json_io::certificate_to_json(cert);
    auto back = json_io::certificate_from_json(text);
    EXPECT_EQ(back.target(), cert.target());
    EXPECT_EQ(back.entries(), cert.entries());
    EXPECT_EQ(back.squares(), cert.squares());
    EXPECT_EQ(back.total_coefficient_size(), cert.total_coefficient_size());
    EXPECT_EQ(json_io::certificate_to_json(back), text);
    EXPECT_TRUE(verify_certificate(back).ok);
  }
}

TEST(JsonIo, FunctionalRoundTrip) {
  auto d = php_dual::functional(4);
  auto back = json_io::functional_from_json(json_io::functional_to_json(d));
  EXPECT_EQ(back.values(), d.values());
  EXPECT_EQ(back.var_count(), d.var_count());
}

TEST(JsonIo, LpResultRoundTrip) {
  json_io::LpResultRecord r;
  r.status = "optimal";
  r.value = make_rational(2737, 66);
  r.witness_path = "w.json";
  r.family = "php";
  r.n = 4;
  r.mode = "full";
  r.side = "dual";
  r.method = "congen";
  r.pivots = 1918;
  r.rounds = 9;
  auto text = json_io::lp_result_to_json(r);
  EXPECT_NE(text.find("\"decimal_10dp\": \"41.4696969697\""), std::string::npos);
  auto back = json_io::lp_result_from_json(text);
  EXPECT_EQ(back.value, r.value);
  EXPECT_EQ(back.method, r.method);
  EXPECT_EQ(back.pivots, r.pivots);
  EXPECT_EQ(back.witness_path, r.witness_path);
}

TEST(JsonIo, MalformedInputIsAFormatError) {
  EXPECT_THROW(json_io::certificate_from_json("{"), FormatError);
  EXPECT_THROW(json_io::certificate_from_json("{\"target\": \"+1\"}"), FormatError);
  EXPECT_THROW(json_io::functional_from_json("[]"), FormatError);
  EXPECT_THROW(json_io::read_file("/nonexistent/certificate.json"), FormatError);
}

TEST(JsonIo, EntryThatDoesNotFitTheSystemIsRejected) {
  auto text = json_io::certificate_to_json(ord_proofs::build_ord_proof(3));
  const std::string key = "\"multiplier\": \"";
  auto pos = text.find(key);
  ASSERT_NE(pos, std::string::npos);
  auto start = pos + key.size();
  text.replace(start, text.find('"', start) - start, "x99");
  EXPECT_THROW(json_io::certificate_from_json(text), StructuralError);
}

TEST(JsonIo, FilesRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "nsz_json_io_test.json";
  json_io::write_file(path.string(), "{\"a\": 1}\n");
  EXPECT_EQ(json_io::read_file(path.string()), "{\"a\": 1}\n");
  std::filesystem::remove(path);
}
