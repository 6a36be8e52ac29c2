#include "constants.hpp"

namespace nsz::cli {

namespace {

Reference exact(std::string text) { return {Reference::Kind::Exact, std::move(text), 0}; }
Reference rounded(std::string text, unsigned places) { return {Reference::Kind::Rounded, std::move(text), places}; }
Reference repeating(std::string text) { return {Reference::Kind::Repeating, std::move(text), 0}; }

// "293.75" -> 1175/4.
Rational parse_decimal(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::string den = "1" + std::string(text.size() - dot - 1, '0');
  return parse_rational(digits + "/" + den);
}

}  // namespace

bool Reference::matches(const Rational& value) const {
  switch (kind) {
    case Kind::Exact: return value == parse_decimal(text);
    case Kind::Rounded: return to_decimal(value, places) == to_decimal(parse_decimal(text), places);
    case Kind::Repeating: return repeating_decimal(value) == text;
  }
  return false;
}

bool Reference::matches_decimal(const std::string& rounded_value) const {
  if (kind != Kind::Rounded) return false;
  return rounded_value == to_decimal(parse_decimal(text), places);
}

const std::vector<ReferenceEntry>& reference_values() {
  static const std::vector<ReferenceEntry> values = {
      {"PHP_DUAL_OPTIMA", "full", 3, exact("11"), "optimal dual value over all assignments"},
      {"PHP_DUAL_OPTIMA", "full", 4, repeating("41.4(69)"), "printed as a repeating decimal"},
      {"PHP_DUAL_OPTIMA", "restricted", 3, exact("6"), "one hole per pigeon"},
      {"PHP_DUAL_OPTIMA", "restricted", 4, exact("27"), "one hole per pigeon"},
      {"PHP_DUAL_OPTIMA", "restricted", 5, exact("100"), "one hole per pigeon"},
      {"PHP_DUAL_OPTIMA", "restricted", 6, exact("293.75"), "one hole per pigeon"},
      {"PHP_D_VALUES", "value_of_D", 3, rounded("4", 3), "E(D) / max |E(DW)|"},
      {"PHP_D_VALUES", "value_of_D", 4, rounded("18", 3), "E(D) / max |E(DW)|"},
      {"PHP_D_VALUES", "value_of_D", 5, rounded("64", 3), "E(D) / max |E(DW)|"},
      {"PHP_D_VALUES", "value_of_D", 6, rounded("210.674", 3), "E(D) / max |E(DW)|"},
      {"PHP_D_VALUES", "lower_bound", 3, rounded("1.633", 3), "closed-form bound"},
      {"PHP_D_VALUES", "lower_bound", 4, rounded("2.828", 3), "closed-form bound"},
      {"PHP_D_VALUES", "lower_bound", 5, rounded("4.382", 3), "closed-form bound"},
      {"PHP_D_VALUES", "lower_bound", 6, rounded("6.4", 3), "closed-form bound"},
      {"ORD_OPTIMA", "full", 3, exact("5"), "2^n - n"},
      {"ORD_OPTIMA", "full", 4, exact("12"), "2^n - n"},
      {"ORD_OPTIMA", "full", 5, exact("27"), "2^n - n"},
      {"ORD_OPTIMA", "full", 6, exact("52"), "below 2^n - n = 58"},
      {"ORD_RESTRICTED", "no_minimum", 3, exact("2"), "2 C(n,3)"},
      {"ORD_RESTRICTED", "no_minimum", 4, exact("8"), "2 C(n,3)"},
      {"ORD_RESTRICTED", "no_minimum", 5, exact("20"), "2 C(n,3)"},
      {"ORD_RESTRICTED", "no_minimum", 6, exact("40"), "2 C(n,3)"},
  };
  return values;
}

std::optional<Reference> find_reference(const std::string& table, const std::string& column, int n) {
  for (const auto& e : reference_values()) {
    if (e.table == table && e.column == column && e.n == n) return e.value;
  }
  return std::nullopt;
}

}  // namespace nsz::cli
