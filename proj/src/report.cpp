#include "symfam/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symfam {

std::string to_string(Provenance tag) {
  switch (tag) {
    case Provenance::exact: return "exact";
    case Provenance::certified_bound: return "certified-bound";
    case Provenance::non_exhaustive: return "non-exhaustive";
    case Provenance::reference_constant: return "reference-constant";
  }
  throw std::logic_error("unhandled provenance tag");
}

std::string format_double(double value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

void ReportRecord::add(std::string field, std::string value, Provenance tag) {
  fields.emplace_back(std::move(field), ReportValue{std::move(value), tag});
}

void ReportRecord::add(std::string field, const mpz_class& value, Provenance tag) {
  add(std::move(field), value.get_str(), tag);
}

void ReportRecord::add(std::string field, const mpq_class& value, Provenance tag) {
  add(std::move(field), value.get_str(), tag);
}

void ReportRecord::add(std::string field, long value, Provenance tag) {
  add(std::move(field), std::to_string(value), tag);
}

void ReportRecord::add(std::string field, double value, Provenance tag) {
  add(std::move(field), format_double(value), tag);
}

void ReportRecord::add(std::string field, bool value, Provenance tag) {
  add(std::move(field), std::string(value ? "true" : "false"), tag);
}

std::string render_human(const CommandReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const ReportRecord& record : report.results) {
    out << record.name << ":\n";
    std::size_t width = 0;
    for (const auto& [field, _] : record.fields) width = std::max(width, field.size());
    for (const auto& [field, value] : record.fields) {
      out << "  " << field << std::string(width - field.size(), ' ') << " = " << value.text
          << "  [" << to_string(value.provenance) << "]\n";
    }
  }
  out << "runtime: " << format_double(report.runtime_seconds) << " s\n";
  return out.str();
}

std::string render_json(const CommandReport& report) {
  nlohmann::json doc;
  doc["schema"] = "symfam-report/1";
  doc["command"] = report.command;
  doc["runtime_seconds"] = report.runtime_seconds;
  nlohmann::json results = nlohmann::json::array();
  for (const ReportRecord& record : report.results) {
    nlohmann::json fields = nlohmann::json::array();
    for (const auto& [field, value] : record.fields) {
      fields.push_back({{"name", field},
                        {"provenance", to_string(value.provenance)},
                        {"value", value.text}});
    }
    results.push_back({{"fields", std::move(fields)}, {"name", record.name}});
  }
  doc["results"] = std::move(results);
  return doc.dump(2) + "\n";
}

std::string render_csv(const CsvTable& table) {
  std::ostringstream out;
  const auto emit_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  emit_row(table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::invalid_argument("csv row width differs from header");
    }
    emit_row(row);
  }
  return out.str();
}

}  // namespace symfam
