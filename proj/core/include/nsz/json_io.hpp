#pragma once

// JSON forms of systems, certificates, dual functionals and LP results.
// Rationals are "p/q" strings, monomials use format_monomial ("x3 !x7"),
// assignments are bit strings with variable 0 first.

#include "nsz/certificate.hpp"
#include "nsz/lp/support.hpp"
#include "nsz/lp/tcs_solver.hpp"

#include <memory>
#include <string>

namespace nsz::json_io {

std::string system_to_json(const AxiomSystem& sys);
/// PHP and ORD are rebuilt from {family, n}; custom systems need their
/// variables and axioms listed.
std::shared_ptr<const AxiomSystem> system_from_json(const std::string& text);

std::string certificate_to_json(const ProofCertificate& cert);
/// Throws FormatError on malformed input and StructuralError when an entry
/// does not fit the system.
ProofCertificate certificate_from_json(const std::string& text);

std::string functional_to_json(const lp::DualFunctional& d);
lp::DualFunctional functional_from_json(const std::string& text);

struct LpResultRecord {
  std::string status;
  Rational value = 0;
  std::string witness_path;
  std::string family;
  int n = 0;
  std::string mode;
  std::string side;
  std::string method;
  std::size_t pivots = 0;
  std::size_t rounds = 0;
};
std::string lp_result_to_json(const LpResultRecord& record);
LpResultRecord lp_result_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace nsz::json_io
