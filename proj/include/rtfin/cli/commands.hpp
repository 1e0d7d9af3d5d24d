#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rtfin/cli/records.hpp"
#include "rtfin/lattice.hpp"

namespace rtfin::cli {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& name);

struct RunConfig {
  std::string command;
  int r = 0;
  int c = 0;
  int p = 0;
  int g = 1;
  int r_max = 0;
  std::string c_policy = "all";  // all | clauses
  OutputFormat format = OutputFormat::Text;
  std::string out_path;
  int jobs = 0;
  std::uint64_t seed = kDefaultLatticeSeed;
  std::size_t samples = 1000;
  bool experimental_odd_p = false;
  bool timing = false;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ReportRecord run_decide_torus(const RunConfig& config, std::ostream& out);
ReportRecord run_decide_closed(const RunConfig& config, std::ostream& out);
std::vector<ReportRecord> run_scan(const RunConfig& config, std::ostream& out);

struct ClauseSummary {
  int clause = 0;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t witness_checked = 0;
  std::size_t witness_confirmed = 0;
};

struct ClosedRow {
  int p = 0;
  int g = 0;
  std::string verdict;
  std::string expected;
  bool matches = false;
};

struct TheoremSummary {
  std::array<ClauseSummary, 4> clauses{};
  std::vector<ClosedRow> closed;
  std::vector<std::string> reports;  // discrepancies surfaced for review
  std::size_t closed_mismatches = 0;

  std::size_t disagreements() const;
  bool ok() const { return disagreements() == 0; }
};

TheoremSummary run_verify_theorem(const RunConfig& config, std::ostream& out);
DiscretenessReport run_lattice_check(const RunConfig& config, std::ostream& out);

/// (r, c) work items of a scan, in emission order.
std::vector<std::pair<int, int>> scan_items(int r_max, const std::string& c_policy);

}  // namespace rtfin::cli
