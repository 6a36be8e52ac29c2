#pragma once

// Reproduction of the four reference tables. Every cell keeps the exact
// value it was rendered from; rendering never prints timings so the output
// is byte-for-byte stable.

#include "nsz/rational.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace nsz::cli {

enum class TableId { PhpDualOptima, PhpDValues, OrdOptima, OrdRestricted };

std::string to_string(TableId id);
/// Accepts the upper-case ids, case-insensitively; throws ParameterError.
TableId parse_table_id(std::string_view text);
std::vector<TableId> all_tables();

struct TableSpec {
  TableId id = TableId::PhpDualOptima;
  int n_min = 3;
  int n_max = 6;
  /// Column subset; empty means every column of the table.
  std::vector<std::string> columns;
  std::chrono::seconds cell_budget{600};
  unsigned threads = 0;
};

/// Column names in display order.
std::vector<std::string> table_columns(TableId id);
/// Largest n each column supports.
int column_cap(TableId id, const std::string& column);
/// Throws ParameterError for an empty range, n < 3, or unknown columns.
void validate(const TableSpec& spec);

struct TableCell {
  int n = 0;
  std::string column;
  /// "ok", "skipped" (budget exceeded), "n/a" (beyond the column's cap) or "error".
  std::string status;
  std::string exact;    // "p/q", or "sqrt(p/q)" for the lower bound
  std::string decimal;  // 3 places, half up
  std::string reference;
  std::optional<bool> match;
  std::string detail;
  double seconds = 0;
};

struct TableResult {
  TableSpec spec;
  std::vector<std::string> columns;
  std::vector<TableCell> cells;  // row-major: n, then column

  [[nodiscard]] bool all_match() const;
};

TableResult reproduce_table(const TableSpec& spec);

std::string render_csv(const TableResult& table);
std::string render_markdown(const TableResult& table);
std::string render_json(const TableResult& table);

}  // namespace nsz::cli
