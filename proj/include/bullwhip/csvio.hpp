#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bullwhip/harness.hpp"

namespace bullwhip {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

void write_trace_csv(std::ostream& os, const std::vector<DayRecord>& trace);
void write_kpi_csv(std::ostream& os, const KpiReport& report);
void write_suite_csv(std::ostream& os, const SuiteReport& suite);
void write_frontier_csv(std::ostream& os, const std::vector<FrontierPoint>& points);
void write_evaluations_csv(std::ostream& os, const std::vector<Evaluation>& evals);

std::string trace_csv_string(const std::vector<DayRecord>& trace);

/// Trace rows parsed back from CSV text (numeric fields only; used for
/// round-trip checks and downstream tooling).
std::vector<DayRecord> parse_trace_csv(const std::string& text);

/// Writes `name` under `out_dir` (created if needed), overwriting.
std::filesystem::path write_text_file(const std::filesystem::path& out_dir,
                                      const std::string& name, const std::string& content);

}  // namespace bullwhip
