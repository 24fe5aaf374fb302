#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "taylorres/harness.hpp"
#include "taylorres/quotients.hpp"

using namespace taylorres;
using test_helpers::I;

namespace {

EnumerationParams small_stream() {
  EnumerationParams params;
  params.vars = 2;
  params.max_deg = 2;
  params.max_gens = 3;
  return params;
}

}  // namespace

TEST_CASE("check names round-trip") {
  for (Check check : all_checks())
    CHECK(check_from_name(check_name(check)) == check);
  CHECK_THROWS_AS(check_from_name("nope"), std::invalid_argument);
  CHECK(check_name(Check::ComplexDD0) == "complex-dd0");
}

TEST_CASE("complex validity over a small stream") {
  const RunReport report = run_checks(small_stream(), {Check::ComplexDD0});
  CHECK(report.summary.failed == 0);
  CHECK(report.summary.skipped == 0);
  CHECK(report.summary.passed == report.summary.ideals);
  CHECK(report.exhaustive);
  CHECK(report.ok());
}

TEST_CASE("betti agreement skips exactly the orderless ideals") {
  const RunReport report = run_checks(small_stream(), {Check::BettiAgree});
  CHECK(report.summary.failed == 0);

  std::uint64_t orderless = 0;
  for_each_ideal(small_stream(), [&](const MonomialIdeal& ideal) {
    if (!find_order(ideal)) ++orderless;
    return true;
  });
  CHECK(orderless > 0);
  CHECK(report.summary.skipped == orderless);
  CHECK(report.summary.checked + report.summary.skipped ==
        report.summary.ideals);
}

TEST_CASE("stable checks over a stable stream") {
  EnumerationParams params;
  params.vars = 3;
  params.max_deg = 3;
  params.max_gens = 4;
  params.family = Family::Stable;
  const RunReport report =
      run_checks(params, {Check::StableEquiv, Check::StableForm});
  CHECK(report.summary.failed == 0);
  CHECK(report.summary.skipped == 0);
  CHECK(report.summary.ideals > 20);
}

TEST_CASE("all checks pass over the default small stream") {
  const RunReport report = run_checks(small_stream(), all_checks());
  CHECK(report.summary.failed == 0);
  CHECK(report.findings.empty());
}

TEST_CASE("report formats carry identical content") {
  const RunReport report = run_checks(small_stream(), {Check::ComplexDD0});

  const std::string human = emit_report(report, ReportFormat::Human);
  CHECK(human.find("summary:") != std::string::npos);
  CHECK(human.find("failed=0") != std::string::npos);

  const std::string tabular = emit_report(report, ReportFormat::Tabular);
  CHECK(tabular.find("ideal,check,verdict,witness\n") != std::string::npos);
  CHECK(tabular.find("\"x1, x2\",complex-dd0,pass,") != std::string::npos);

  const std::string structured = emit_report(report, ReportFormat::Structured);
  const auto doc = nlohmann::json::parse(structured);
  CHECK(doc["summary"]["ideals"] == report.summary.ideals);
  CHECK(doc["summary"]["passed"] == report.summary.passed);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["rows"].size() == report.rows.size());
  CHECK(doc["params"]["vars"] == 2);
  CHECK(doc["params"]["seed"].is_null());
  CHECK(doc["exhaustive"] == true);

  // Determinism: a fresh run emits byte-identical reports.
  const RunReport again = run_checks(small_stream(), {Check::ComplexDD0});
  CHECK(emit_report(again, ReportFormat::Human) == human);
  CHECK(emit_report(again, ReportFormat::Structured) == structured);
  CHECK(emit_report(again, ReportFormat::Tabular) == tabular);
}

TEST_CASE("empty report renders headers and zero counts") {
  RunReport report;
  const std::string tabular = emit_report(report, ReportFormat::Tabular);
  CHECK(tabular.find("ideal,check,verdict,witness\n") != std::string::npos);
  CHECK(tabular.find("ideals=0") != std::string::npos);
  const auto doc =
      nlohmann::json::parse(emit_report(report, ReportFormat::Structured));
  CHECK(doc["summary"]["checked"] == 0);
  CHECK(doc["rows"].empty());
}

TEST_CASE("truncated runs are labeled non-exhaustive") {
  EnumerationParams params = small_stream();
  params.limit = 3;
  const RunReport report = run_checks(params, {Check::ComplexDD0});
  CHECK_FALSE(report.exhaustive);
  CHECK(report.summary.ideals == 3);
  const std::string tabular = emit_report(report, ReportFormat::Tabular);
  CHECK(tabular.find("exhaustive=no") != std::string::npos);
}

TEST_CASE("failing rows carry a replayable ideal string") {
  RunReport report;
  run_checks_on(I("x1*x2, x2*x3, x1*x3", 3), all_checks(), report);
  CHECK(report.summary.failed == 0);
  for (const CheckRow& row : report.rows) {
    CHECK(row.ideal == "x1*x2, x1*x3, x2*x3");
    CHECK_NOTHROW(I(row.ideal, 3));
  }
}
