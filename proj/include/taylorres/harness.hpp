#pragma once

#include <string>
#include <vector>

#include "taylorres/enumerate.hpp"

namespace taylorres {

/// One verification per enumerated ideal. Each check re-derives both sides
/// of one classification statement and fails only on disagreement;
/// inapplicable ideals are skipped, never passed.
enum class Check {
  ComplexDD0,        // d.d = 0, strand ranks, minimality routes agree
  BettiAgree,        // closed formula vs homology oracle totals
  SetSize,           // Taylor minimality vs |set(u_j)| = j-1
  StableEquiv,       // the three stable minimality conditions agree
  StableForm,        // stable: minimality vs staircase shape (+ round-trip)
  EquigenForm,       // equigenerated stable: minimality vs x1^{d-1}*(x1..xr)
  LinresForm,        // linear resolution: minimality vs u*(variables)
  MatroidalForm,     // minimal matroidal ideals have the product shape
  SqfreeStableForm,  // minimal squarefree stable ideals have the prefix shape
};

Check check_from_name(const std::string& name);
std::string check_name(Check check);
std::vector<Check> all_checks();

enum class Verdict { Pass, Fail, Skip };
std::string verdict_name(Verdict verdict);

struct CheckRow {
  std::string ideal;
  Check check;
  Verdict verdict;
  std::string witness;  // failure detail or skip reason
};

struct RunSummary {
  std::uint64_t ideals = 0;
  std::uint64_t checked = 0;  // passed + failed
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct RunReport {
  EnumerationParams params;
  std::vector<Check> checks;
  bool exhaustive = true;  // false when a limit truncated the stream
  std::vector<CheckRow> rows;
  /// Observations that are not failures (e.g. an order-dependent verdict).
  std::vector<std::string> findings;
  RunSummary summary;

  bool ok() const { return summary.failed == 0; }
};

/// Runs the selected checks over the enumerated stream, one row per
/// applicable (ideal, check) pair. Deterministic: identical parameters
/// produce identical reports.
RunReport run_checks(const EnumerationParams& params,
                     const std::vector<Check>& checks);

/// Runs the selected checks against one ideal, appending to the report.
void run_checks_on(const MonomialIdeal& ideal, const std::vector<Check>& checks,
                   RunReport& report);

enum class ReportFormat { Human, Structured, Tabular };
ReportFormat format_from_name(const std::string& name);

/// Human: aligned text. Structured: one JSON document. Tabular: CSV with
/// header "ideal,check,verdict,witness" and "#"-prefixed metadata lines.
/// All three carry the same information.
std::string emit_report(const RunReport& report, ReportFormat format);

}  // namespace taylorres
