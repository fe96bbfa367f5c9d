#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrgroup/numeric.hpp"

namespace rrgroup {

enum class Format { Table, Csv, Json };

/// Parses "table", "csv" or "json"; throws InputError otherwise.
Format parse_format(std::string_view name);

/// One table entry. `text` is what table and CSV output print; `kind`
/// decides how JSON encodes it. Big integers and rationals stay strings.
struct Cell {
  enum class Kind { Text, Integer, Real, Boolean };

  std::string text;
  Kind kind = Kind::Text;
};

Cell cell(std::string_view text);
Cell cell(const char* text);
Cell cell(std::int64_t value);
Cell cell(int value);
Cell cell(std::uint64_t value);
Cell cell(const BigInt& value);
Cell cell(const Rational& value);
Cell cell(double value);  ///< 12 significant digits
Cell cell(bool value);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Result of one cross-check.
struct Check {
  std::string name;
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> parameters;
  std::vector<Table> tables;
  std::vector<Check> checks;

  [[nodiscard]] bool all_passed() const;
  Table& table(std::string name, std::vector<std::string> columns);
  void check(std::string name, std::string subject, bool passed, std::string detail = {});
};

/// Table: aligned columns per table, then one PASS/FAIL line per check.
/// CSV: header and rows per table; with several tables each is preceded by
/// a `# name` line and checks become one more table.
/// JSON: one object; each table is an array of row objects.
void emit_report(std::ostream& out, const Report& report, Format format);

}  // namespace rrgroup
