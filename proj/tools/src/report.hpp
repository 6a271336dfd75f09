// Desk-scale report suite: fixed instance matrix with certified pairings.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ubcw_cli {

struct ReportRow {
  std::string family;
  std::string params;
  int degree = 0;
  std::string betti;      // reduced Betti number at this degree, "" if unknown
  std::string mode;       // "exact", "sampled", or "none"
  std::string value;      // measured UBC value, "-" when mode is "none"
  std::uint64_t seed = 0; // sampling seed, 0 for exact rows
  std::string rule;       // certifying calculus rule, "none" if unpaired
  std::string certified;  // certified constant, "inf" if unpaired
  bool verdict = true;    // measured <= certified
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
  bool all_verdicts_hold = true;
};

// Runs the desk matrix.  time_budget_sec <= 0 means no wall-clock budget;
// exceeding the budget throws ResourceBudgetExceeded between instances.
Report run_desk_suite(std::uint64_t seed, double time_budget_sec);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

}  // namespace ubcw_cli
