#include "rrgroup/report.hpp"

#include <algorithm>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "rrgroup/errors.hpp"

namespace rrgroup {

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Integer:
      return std::stoll(c.text);
    case Cell::Kind::Real:
      return std::stod(c.text);
    case Cell::Kind::Boolean:
      return c.text == "true";
    case Cell::Kind::Text:
      break;
  }
  return c.text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void emit_csv_table(std::ostream& out, const std::vector<std::string>& columns,
                    const std::vector<std::vector<Cell>>& rows) {
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << csv_field(columns[k]);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(row[k].text);
    out << '\n';
  }
}

void emit_text_table(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t k = 0; k < t.columns.size(); ++k) width[k] = t.columns[k].size();
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) {
      width[k] = std::max(width[k], row[k].text.size());
    }
  }
  out << "== " << t.name << '\n';
  auto line = [&](auto text_at) {
    std::string s;
    for (std::size_t k = 0; k < width.size(); ++k) {
      if (k) s += "  ";
      s += fmt::format("{:>{}}", text_at(k), width[k]);
    }
    out << s << '\n';
  };
  line([&](std::size_t k) { return t.columns[k]; });
  for (const auto& row : t.rows) {
    line([&](std::size_t k) { return k < row.size() ? row[k].text : std::string(); });
  }
}

Table checks_table(const Report& r) {
  Table t{"checks", {"check", "subject", "result", "detail"}, {}};
  for (const auto& c : r.checks) {
    t.add({cell(c.name), cell(c.subject), cell(c.passed ? "PASS" : "FAIL"), cell(c.detail)});
  }
  return t;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InputError("unknown format '" + std::string(name) + "' (expected table, csv or json)");
}

Cell cell(std::string_view text) { return {std::string(text), Cell::Kind::Text}; }
Cell cell(const char* text) { return cell(std::string_view(text)); }
Cell cell(std::int64_t value) { return {std::to_string(value), Cell::Kind::Integer}; }
Cell cell(int value) { return cell(static_cast<std::int64_t>(value)); }
Cell cell(std::uint64_t value) { return {std::to_string(value), Cell::Kind::Integer}; }
Cell cell(const BigInt& value) { return {value.get_str(), Cell::Kind::Text}; }
Cell cell(const Rational& value) { return {to_string(value), Cell::Kind::Text}; }
Cell cell(double value) { return {fmt::format("{:.12g}", value), Cell::Kind::Real}; }
Cell cell(bool value) { return {value ? "true" : "false", Cell::Kind::Boolean}; }

void Table::add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(name), std::move(columns), {}});
  return tables.back();
}

void Report::check(std::string name, std::string subject, bool passed, std::string detail) {
  checks.push_back(Check{std::move(name), std::move(subject), passed, std::move(detail)});
}

void emit_report(std::ostream& out, const Report& report, Format format) {
  switch (format) {
    case Format::Table: {
      out << "# " << report.command;
      for (const auto& [key, value] : report.parameters) out << ' ' << key << '=' << value.text;
      out << '\n';
      for (const auto& t : report.tables) emit_text_table(out, t);
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ' ' << c.subject;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
      }
      if (!report.checks.empty()) {
        const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                          [](const Check& c) { return !c.passed; });
        out << fmt::format("{} checks, {} failed\n", report.checks.size(), failed);
      }
      break;
    }
    case Format::Csv: {
      const bool labelled = report.tables.size() + (report.checks.empty() ? 0 : 1) > 1;
      for (const auto& t : report.tables) {
        if (labelled) out << "# " << t.name << '\n';
        emit_csv_table(out, t.columns, t.rows);
      }
      if (!report.checks.empty()) {
        const auto t = checks_table(report);
        if (labelled) out << "# " << t.name << '\n';
        emit_csv_table(out, t.columns, t.rows);
      }
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["command"] = report.command;
      auto& params = doc["parameters"] = nlohmann::ordered_json::object();
      for (const auto& [key, value] : report.parameters) params[key] = to_json(value);
      auto& tables = doc["tables"] = nlohmann::ordered_json::object();
      for (const auto& t : report.tables) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
          nlohmann::ordered_json obj;
          for (std::size_t k = 0; k < row.size() && k < t.columns.size(); ++k) {
            obj[t.columns[k]] = to_json(row[k]);
          }
          rows.push_back(std::move(obj));
        }
        tables[t.name] = std::move(rows);
      }
      auto checks = nlohmann::ordered_json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"check", c.name}, {"subject", c.subject}, {"passed", c.passed}, {"detail", c.detail}});
      }
      doc["checks"] = std::move(checks);
      doc["ok"] = report.all_passed();
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace rrgroup
