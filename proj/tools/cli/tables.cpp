#include "tables.hpp"

#include "constants.hpp"
#include "nsz/errors.hpp"
#include "nsz/lp/tcs_solver.hpp"
#include "nsz/php_dual.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <sstream>
#include <thread>

namespace nsz::cli {

namespace {

struct ColumnInfo {
  std::string name;
  int cap;
};

const std::vector<ColumnInfo>& columns_of(TableId id) {
  static const std::vector<ColumnInfo> php_dual = {{"full", 4}, {"restricted", 6}};
  static const std::vector<ColumnInfo> php_d = {{"E_D", 6}, {"max_abs_EDW", 6}, {"value_of_D", 6}, {"lower_bound", 6}};
  static const std::vector<ColumnInfo> ord_opt = {{"full", 6}};
  static const std::vector<ColumnInfo> ord_res = {{"no_minimum", 6}};
  switch (id) {
    case TableId::PhpDualOptima: return php_dual;
    case TableId::PhpDValues: return php_d;
    case TableId::OrdOptima: return ord_opt;
    case TableId::OrdRestricted: return ord_res;
  }
  return ord_res;
}

Rational lp_value(Family family, int n, lp::SupportMode mode, std::chrono::steady_clock::time_point deadline) {
  lp::TcsRequest req;
  req.family = family;
  req.n = n;
  req.mode = mode;
  req.want_certificate = false;
  req.simplex.deadline = deadline;
  return lp::solve_tcs(req).value;
}

void fill_rational(TableCell& cell, const Rational& v) {
  cell.exact = to_fraction(v);
  cell.decimal = to_decimal(v, 3);
}

void compute(TableId id, TableCell& cell, std::chrono::steady_clock::time_point deadline) {
  const int n = cell.n;
  const std::string& col = cell.column;
  switch (id) {
    case TableId::PhpDualOptima:
      fill_rational(cell, lp_value(Family::Php, n, col == "full" ? lp::SupportMode::Full : lp::SupportMode::Restricted,
                                   deadline));
      break;
    case TableId::PhpDValues:
      if (col == "E_D") {
        fill_rational(cell, php_dual::exp_d_closed(n));
      } else if (col == "max_abs_EDW") {
        fill_rational(cell, php_dual::max_abs_exp_dw(n).max_abs);
      } else if (col == "value_of_D") {
        fill_rational(cell, php_dual::dual_value(n));
      } else {
        auto bound = php_dual::php_lower_bound(n);
        cell.exact = "sqrt(" + to_fraction(bound.squared()) + ")";
        cell.decimal = bound.decimal(3);
      }
      break;
    case TableId::OrdOptima:
      fill_rational(cell, lp_value(Family::Ord, n, lp::SupportMode::Full, deadline));
      break;
    case TableId::OrdRestricted:
      fill_rational(cell, lp_value(Family::Ord, n, lp::SupportMode::Restricted, deadline));
      break;
  }
}

std::string match_text(const TableCell& c, const char* yes, const char* no) {
  if (!c.match) return "";
  return *c.match ? yes : no;
}

}  // namespace

std::string to_string(TableId id) {
  switch (id) {
    case TableId::PhpDualOptima: return "PHP_DUAL_OPTIMA";
    case TableId::PhpDValues: return "PHP_D_VALUES";
    case TableId::OrdOptima: return "ORD_OPTIMA";
    case TableId::OrdRestricted: return "ORD_RESTRICTED";
  }
  return "";
}

TableId parse_table_id(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (auto id : all_tables()) {
    if (to_string(id) == upper) return id;
  }
  throw ParameterError("unknown table '" + std::string(text) + "'");
}

std::vector<TableId> all_tables() {
  return {TableId::PhpDualOptima, TableId::PhpDValues, TableId::OrdOptima, TableId::OrdRestricted};
}

std::vector<std::string> table_columns(TableId id) {
  std::vector<std::string> out;
  for (const auto& c : columns_of(id)) out.push_back(c.name);
  return out;
}

int column_cap(TableId id, const std::string& column) {
  for (const auto& c : columns_of(id)) {
    if (c.name == column) return c.cap;
  }
  throw ParameterError("table " + to_string(id) + " has no column '" + column + "'");
}

void validate(const TableSpec& spec) {
  if (spec.n_min < 3) throw ParameterError("n must be at least 3");
  if (spec.n_max < spec.n_min) throw ParameterError("empty n range");
  auto cols = spec.columns.empty() ? table_columns(spec.id) : spec.columns;
  int cap = 0;
  for (const auto& c : cols) cap = std::max(cap, column_cap(spec.id, c));
  if (spec.n_max > cap) {
    throw ParameterError(to_string(spec.id) + " supports n <= " + std::to_string(cap));
  }
}

bool TableResult::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return !c.match || *c.match; });
}

TableResult reproduce_table(const TableSpec& spec) {
  validate(spec);
  TableResult result;
  result.spec = spec;
  result.columns = spec.columns.empty() ? table_columns(spec.id) : spec.columns;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    for (const auto& col : result.columns) {
      TableCell cell;
      cell.n = n;
      cell.column = col;
      cell.status = n <= column_cap(spec.id, col) ? "pending" : "n/a";
      result.cells.push_back(cell);
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.cells.size(); i = next++) {
      TableCell& cell = result.cells[i];
      if (cell.status == "n/a") continue;
      auto start = std::chrono::steady_clock::now();
      try {
        compute(spec.id, cell, start + spec.cell_budget);
        cell.status = "ok";
        if (auto ref = find_reference(to_string(spec.id), cell.column, cell.n)) {
          cell.reference = ref->text;
          cell.match = ref->kind == Reference::Kind::Rounded ? ref->matches_decimal(cell.decimal)
                                                             : ref->matches(parse_rational(cell.exact));
        }
      } catch (const TimeoutError& e) {
        cell.status = "skipped";
        cell.detail = e.what();
      } catch (const std::exception& e) {
        cell.status = "error";
        cell.detail = e.what();
      }
      cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, result.cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return result;
}

std::string render_csv(const TableResult& table) {
  std::ostringstream out;
  out << "table,n,column,status,exact,decimal,reference,match\n";
  for (const auto& c : table.cells) {
    out << to_string(table.spec.id) << ',' << c.n << ',' << c.column << ',' << c.status << ',' << c.exact << ','
        << c.decimal << ',' << c.reference << ',' << match_text(c, "yes", "no") << '\n';
  }
  return out.str();
}

std::string render_markdown(const TableResult& table) {
  std::ostringstream out;
  out << "### " << to_string(table.spec.id) << "\n\n| n |";
  for (const auto& col : table.columns) out << ' ' << col << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---|";
  out << '\n';
  std::size_t k = 0;
  for (int n = table.spec.n_min; n <= table.spec.n_max; ++n) {
    out << "| " << n << " |";
    for (std::size_t i = 0; i < table.columns.size(); ++i, ++k) {
      const auto& c = table.cells[k];
      out << ' ';
      if (c.status != "ok") {
        out << c.status;
      } else {
        out << c.decimal;
        if (c.exact != c.decimal) out << " (" << c.exact << ')';
        if (c.match) out << (*c.match ? " ok" : " MISMATCH, expected " + c.reference);
      }
      out << " |";
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const TableResult& table) {
  nlohmann::ordered_json j;
  j["table"] = to_string(table.spec.id);
  j["n_min"] = table.spec.n_min;
  j["n_max"] = table.spec.n_max;
  j["columns"] = table.columns;
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : table.cells) {
    nlohmann::ordered_json cell;
    cell["n"] = c.n;
    cell["column"] = c.column;
    cell["status"] = c.status;
    cell["exact"] = c.exact;
    cell["decimal"] = c.decimal;
    cell["reference"] = c.reference;
    cell["match"] = c.match ? nlohmann::ordered_json(*c.match) : nlohmann::ordered_json(nullptr);
    if (!c.detail.empty()) cell["detail"] = c.detail;
    j["cells"].push_back(cell);
  }
  return j.dump(2) + "\n";
}

}  // namespace nsz::cli
