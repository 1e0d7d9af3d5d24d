#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtfin/positivity.hpp"

namespace rtfin::cli {

struct WitnessRecord {
  int k = 0;
  int ratio_index = 0;
  std::string ratio_id;
  std::string ratio_text;
  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct DocumentedWitnessRecord {
  int k = 0;
  std::string ratio_id;
  std::string ratio_text;
  std::string sign;
  bool confirmed = false;
  friend bool operator==(const DocumentedWitnessRecord&, const DocumentedWitnessRecord&) = default;
};

/// One decision, flattened for output. Keys serialize in snake case.
struct ReportRecord {
  std::string command;
  int r = 0;
  std::optional<int> c;
  int p = 0;
  std::optional<int> g;
  int dimension = 0;
  std::string verdict;
  std::string provenance;
  std::optional<int> clause;
  std::string crosscheck;
  std::optional<WitnessRecord> witness;
  std::optional<DocumentedWitnessRecord> documented_witness;
  bool experimental = false;
  bool dimension_zero = false;
  std::vector<std::string> notes;
  std::optional<std::int64_t> timing_us;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_torus_record(int r, int c, int p, const FinitenessVerdict& v);
ReportRecord make_closed_record(int r, int p, int g, const FinitenessVerdict& v);

void to_json(nlohmann::json& j, const WitnessRecord& w);
void from_json(const nlohmann::json& j, WitnessRecord& w);
void to_json(nlohmann::json& j, const DocumentedWitnessRecord& w);
void from_json(const nlohmann::json& j, DocumentedWitnessRecord& w);
void to_json(nlohmann::json& j, const ReportRecord& rec);
void from_json(const nlohmann::json& j, ReportRecord& rec);

/// r, c, dimension, verdict, witness_k, witness_index, clause, crosscheck
std::string csv_header();
std::string to_csv_row(const ReportRecord& rec);
std::string to_text(const ReportRecord& rec);

}  // namespace rtfin::cli
