#pragma once

// Acceptance suite: eleven criteria, each a list of checks. Stretch checks
// run only at the full level and count as skipped, not failed, when they
// exceed the per-check budget.

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nsz::cli {

enum class AcceptanceLevel { Quick, Full };

std::string to_string(AcceptanceLevel level);
AcceptanceLevel parse_level(std::string_view text);

struct AcceptanceOptions {
  AcceptanceLevel level = AcceptanceLevel::Quick;
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
  std::chrono::seconds budget{600};
  /// Certificate valid on ORD(4) tournaments without a minimum; when unset
  /// it is produced by the restricted primal LP.
  std::optional<std::string> witness_path;
  /// Random weakenings per n for the expectation laws.
  int samples = 100;
};

struct CheckOutcome {
  std::string label;
  /// "pass", "fail", "skipped" or "not run".
  std::string status;
  std::string detail;
  bool stretch = false;
  double seconds = 0;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<CheckOutcome> checks;
  double seconds = 0;

  [[nodiscard]] bool passed() const;
  /// "criterion 3: PASS  value of D ...  [1.2 s]"
  [[nodiscard]] std::string summary_line() const;
};

std::vector<int> criterion_ids();
std::string criterion_title(int id);
/// Throws ParameterError for an unknown id.
CriterionReport run_criterion(int id, const AcceptanceOptions& options);
/// Runs every criterion, writing one summary line per criterion to `log`
/// as each finishes.
std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& options, std::ostream* log = nullptr);

std::string report_to_json(const std::vector<CriterionReport>& reports);

}  // namespace nsz::cli
