#pragma once

// Published reference values the tables and the acceptance run compare
// against, kept in one place. Each value is stored as printed.

#include "nsz/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nsz::cli {

struct Reference {
  enum class Kind {
    Exact,      // printed value is the exact rational
    Rounded,    // printed value is rounded half up to `places` decimals
    Repeating,  // printed as a repeating decimal, e.g. "41.4(69)"
  };
  Kind kind = Kind::Exact;
  std::string text;
  unsigned places = 0;

  /// Whether an exact value reproduces the printed one.
  [[nodiscard]] bool matches(const Rational& value) const;
  /// Same for a value known only through its decimal rounding.
  [[nodiscard]] bool matches_decimal(const std::string& rounded) const;
};

struct ReferenceEntry {
  std::string table;   // PHP_DUAL_OPTIMA, PHP_D_VALUES, ORD_OPTIMA, ORD_RESTRICTED
  std::string column;
  int n = 0;
  Reference value;
  std::string note;
};

const std::vector<ReferenceEntry>& reference_values();
std::optional<Reference> find_reference(const std::string& table, const std::string& column, int n);

}  // namespace nsz::cli
