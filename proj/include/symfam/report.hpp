#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symfam {

// Every reported value carries exactly one provenance tag so downstream
// consumers can tell certified numbers from budget-limited ones.
enum class Provenance { exact, certified_bound, non_exhaustive, reference_constant };

std::string to_string(Provenance tag);

struct ReportValue {
  std::string text;
  Provenance provenance = Provenance::exact;
};

struct ReportRecord {
  std::string name;
  std::vector<std::pair<std::string, ReportValue>> fields;

  void add(std::string field, std::string value, Provenance tag);
  void add(std::string field, const mpz_class& value, Provenance tag);
  void add(std::string field, const mpq_class& value, Provenance tag);
  void add(std::string field, long value, Provenance tag);
  void add(std::string field, double value, Provenance tag);
  void add(std::string field, bool value, Provenance tag);
};

struct CommandReport {
  std::string command;
  std::vector<ReportRecord> results;
  double runtime_seconds = 0.0;
};

// Plain-text rendering for terminals: one record per block, aligned fields,
// provenance in brackets.
std::string render_human(const CommandReport& report);

// Structured rendering with a fixed field set, tagged "symfam-report/1".
std::string render_json(const CommandReport& report);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Header row then data rows, comma separated. Cells must not contain commas;
// the table carries integers and short tags only.
std::string render_csv(const CsvTable& table);

// Canonical decimal rendering used by every report surface.
std::string format_double(double value);

}  // namespace symfam
