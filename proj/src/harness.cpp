#include "taylorres/harness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "taylorres/betti.hpp"
#include "taylorres/classify.hpp"
#include "taylorres/text.hpp"

namespace taylorres {

namespace {

const std::pair<Check, const char*> kCheckNames[] = {
    {Check::ComplexDD0, "complex-dd0"},
    {Check::BettiAgree, "betti-agree"},
    {Check::SetSize, "set-size"},
    {Check::StableEquiv, "stable-equiv"},
    {Check::StableForm, "stable-form"},
    {Check::EquigenForm, "equigen-form"},
    {Check::LinresForm, "linres-form"},
    {Check::MatroidalForm, "matroidal-form"},
    {Check::SqfreeStableForm, "sqfree-stable-form"},
};

}  // namespace

Check check_from_name(const std::string& name) {
  for (const auto& [check, text] : kCheckNames)
    if (name == text) return check;
  throw std::invalid_argument("unknown check: " + name);
}

std::string check_name(Check check) {
  for (const auto& [c, text] : kCheckNames)
    if (c == check) return text;
  throw std::logic_error("unreachable");
}

std::vector<Check> all_checks() {
  std::vector<Check> checks;
  for (const auto& [check, text] : kCheckNames) checks.push_back(check);
  return checks;
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  throw std::logic_error("unreachable");
}

namespace {

struct Outcome {
  Verdict verdict;
  std::string witness;
};

Outcome pass() { return {Verdict::Pass, ""}; }
Outcome fail(std::string witness) { return {Verdict::Fail, std::move(witness)}; }
Outcome skip(std::string reason) { return {Verdict::Skip, std::move(reason)}; }

std::string totals_text(const std::vector<std::uint64_t>& totals) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (i) out << ',';
    out << totals[i];
  }
  out << ')';
  return out.str();
}

std::string sizes_text(const std::vector<int>& sizes) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out << ',';
    out << sizes[i];
  }
  out << ')';
  return out.str();
}

bool sizes_complete(const std::vector<int>& sizes) {
  for (std::size_t j = 0; j < sizes.size(); ++j)
    if (sizes[j] != static_cast<int>(j)) return false;
  return true;
}

Outcome check_complex_dd0(const MonomialIdeal& ideal) {
  const int r = ideal.generator_count();
  const TaylorComplex complex(ideal.generators());
  if (!verify_complex(complex)) return fail("d.d != 0");
  for (int q = 0; q < r; ++q)
    if (complex.rank(q) != binomial(static_cast<unsigned>(r),
                                    static_cast<unsigned>(q) + 1))
      return fail("strand rank mismatch at q=" + std::to_string(q));
  if (is_minimal(complex) != is_minimal_subset_test(ideal.generators()))
    return fail("minimality routes disagree");
  return pass();
}

Outcome check_betti_agree(const MonomialIdeal& ideal) {
  const auto ordered = find_order(ideal);
  if (!ordered) return skip("no linear-quotients order");
  const BettiTable formula = betti_formula(*ordered);
  const BettiTable oracle = betti_oracle(ideal);
  if (formula.total != oracle.total)
    return fail("formula=" + totals_text(formula.total) +
                " oracle=" + totals_text(oracle.total));
  return pass();
}

Outcome check_set_size(const MonomialIdeal& ideal,
                       std::vector<std::string>& findings) {
  const auto ordered = find_order(ideal);
  if (!ordered) return skip("no linear-quotients order");
  const bool minimal = is_minimal_subset_test(ideal.generators());
  const std::vector<int> sizes = ordered->set_sizes();
  const bool complete = sizes_complete(sizes);

  if (ideal.generator_count() <= 5) {
    bool first = true;
    bool first_complete = false;
    bool dependent = false;
    for_each_valid_order(ideal, [&](const OrderedIdeal& o) {
      const bool c = sizes_complete(o.set_sizes());
      if (first) {
        first_complete = c;
        first = false;
      } else if (c != first_complete) {
        dependent = true;
        return false;
      }
      return true;
    });
    if (dependent)
      findings.push_back("set-size verdict depends on the ordering for " +
                         to_text(ideal));
  }

  if (minimal != complete)
    return fail(std::string("minimal=") + (minimal ? "yes" : "no") +
                " sizes=" + sizes_text(sizes));
  return pass();
}

Outcome check_stable_equiv(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) return skip("not stable");
  const StableConditionsVerdict v = check_stable_conditions(ideal);
  if (!v.equivalent())
    return fail(std::string("(i,ii,iii)=(") + (v.taylor_minimal ? "T" : "F") +
                "," + (v.max_index_reaches_count ? "T" : "F") + "," +
                (v.one_generator_per_index ? "T" : "F") + ")");
  // Stable ideals have a generator with every max index up to the largest.
  const std::map<int, int> counts = m_stats(ideal);
  for (int i = 0; i <= counts.rbegin()->first; ++i)
    if (!counts.contains(i))
      return fail("no generator with max index " + std::to_string(i + 1));
  return pass();
}

Outcome check_stable_form(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) return skip("not stable");
  const bool minimal = is_minimal_subset_test(ideal.generators());
  const auto form = staircase_form(ideal);
  if (minimal != form.has_value())
    return fail(std::string("minimal=") + (minimal ? "yes" : "no") +
                " staircase=" + (form ? "yes" : "no"));
  if (form && make_staircase_ideal(ideal.vars(), form->steps) != ideal)
    return fail("staircase round-trip mismatch");
  return pass();
}

Outcome check_equigen_form(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) return skip("not stable");
  const auto d = common_degree(ideal);
  if (!d || *d <= 1) return skip("not equigenerated in degree > 1");
  const EquigeneratedStableVerdict v = check_equigenerated_stable(ideal);
  if (!v.agrees())
    return fail(std::string("minimal=") + (v.taylor_minimal ? "yes" : "no") +
                " form=" + (v.matches_form ? "yes" : "no"));
  if (v.matches_form) {
    const unsigned r = static_cast<unsigned>(ideal.generator_count());
    const BettiTable oracle = betti_oracle(ideal);
    const BettiTable formula = betti_formula(stable_canonical_sets(ideal));
    for (unsigned q = 0; q < r; ++q) {
      const std::uint64_t expected = binomial(r, q + 1);
      if (oracle.total[q] != expected || formula.total[q] != expected)
        return fail("betti mismatch at q=" + std::to_string(q));
    }
  }
  return pass();
}

Outcome check_linres_form(const MonomialIdeal& ideal) {
  if (!common_degree(ideal)) return skip("not equigenerated");
  if (!has_linear_resolution(ideal)) return skip("no linear resolution");
  const LinearResolutionVerdict v = check_linear_resolution_form(ideal);
  if (!v.agrees())
    return fail(std::string("minimal=") + (v.taylor_minimal ? "yes" : "no") +
                " form=" + (v.matches_form ? "yes" : "no"));
  if (v.matches_form && !v.linear_quotients_found)
    return fail("recognized form without linear quotients");
  return pass();
}

Outcome check_matroidal_form(const MonomialIdeal& ideal) {
  if (!all_squarefree(ideal) || !common_degree(ideal))
    return skip("not squarefree equigenerated");
  if (!is_matroidal(ideal)) return skip("not matroidal");
  if (!is_minimal_subset_test(ideal.generators()))
    return skip("Taylor complex not minimal");
  const auto form = scaled_variables_form(ideal);
  if (!form) return fail("minimal matroidal ideal lacks the product shape");
  for (int v : form->variables)
    if (form->factor.exponent(v) != 0)
      return fail("factor and variables are not disjoint");
  return pass();
}

Outcome check_sqfree_stable_form(const MonomialIdeal& ideal,
                                 std::vector<std::string>& findings) {
  if (!all_squarefree(ideal)) return skip("not squarefree");
  if (!common_degree(ideal)) return skip("not equigenerated");
  if (!is_squarefree_stable(ideal)) return skip("not squarefree stable");
  if (!is_minimal_subset_test(ideal.generators()))
    return skip("Taylor complex not minimal");
  const auto form = scaled_variables_form(ideal);
  if (!form) return fail("minimal squarefree stable ideal lacks the product shape");
  for (int v : form->variables)
    if (form->factor.exponent(v) != 0)
      return fail("factor and variables are not disjoint");
  // The displayed shape is stricter: the factor must be the literal
  // variable prefix x1..xp followed by a contiguous variable range. Ideals
  // matching it only after relabeling are recorded, not failed.
  if (!prefix_segment_form(ideal))
    findings.push_back("squarefree stable ideal matches the product shape "
                       "only up to relabeling: " +
                       to_text(ideal) + " = " + to_text(form->factor) +
                       " * (variables)");
  return pass();
}

Outcome run_one(const MonomialIdeal& ideal, Check check,
                std::vector<std::string>& findings) {
  try {
    switch (check) {
      case Check::ComplexDD0: return check_complex_dd0(ideal);
      case Check::BettiAgree: return check_betti_agree(ideal);
      case Check::SetSize: return check_set_size(ideal, findings);
      case Check::StableEquiv: return check_stable_equiv(ideal);
      case Check::StableForm: return check_stable_form(ideal);
      case Check::EquigenForm: return check_equigen_form(ideal);
      case Check::LinresForm: return check_linres_form(ideal);
      case Check::MatroidalForm: return check_matroidal_form(ideal);
      case Check::SqfreeStableForm: return check_sqfree_stable_form(ideal, findings);
    }
    throw std::logic_error("unreachable");
  } catch (const EnvelopeError& e) {
    return skip(std::string("envelope: ") + e.what());
  }
}

}  // namespace

void run_checks_on(const MonomialIdeal& ideal, const std::vector<Check>& checks,
                   RunReport& report) {
  const std::string text = to_text(ideal);
  for (Check check : checks) {
    const Outcome outcome = run_one(ideal, check, report.findings);
    report.rows.push_back(CheckRow{text, check, outcome.verdict, outcome.witness});
    switch (outcome.verdict) {
      case Verdict::Pass: ++report.summary.passed; break;
      case Verdict::Fail: ++report.summary.failed; break;
      case Verdict::Skip: ++report.summary.skipped; break;
    }
  }
}

RunReport run_checks(const EnumerationParams& params,
                     const std::vector<Check>& checks) {
  RunReport report;
  report.params = params;
  report.checks = checks;
  report.exhaustive = for_each_ideal(params, [&](const MonomialIdeal& ideal) {
    ++report.summary.ideals;
    run_checks_on(ideal, checks, report);
    return true;
  });
  report.summary.checked = report.summary.passed + report.summary.failed;
  return report;
}

ReportFormat format_from_name(const std::string& name) {
  if (name == "human") return ReportFormat::Human;
  if (name == "structured") return ReportFormat::Structured;
  if (name == "tabular") return ReportFormat::Tabular;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string checks_list(const std::vector<Check>& checks) {
  std::string out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) out += ',';
    out += check_name(checks[i]);
  }
  return out.empty() ? "none" : out;
}

std::string params_line(const RunReport& report) {
  std::ostringstream out;
  out << "vars=" << report.params.vars << " max_deg=" << report.params.max_deg
      << " max_gens=" << report.params.max_gens
      << " family=" << family_name(report.params.family) << " limit="
      << (report.params.limit ? std::to_string(*report.params.limit) : "none")
      << " seed=none checks=" << checks_list(report.checks)
      << " exhaustive=" << (report.exhaustive ? "yes" : "no");
  return out.str();
}

std::string summary_line(const RunSummary& s) {
  std::ostringstream out;
  out << "ideals=" << s.ideals << " checked=" << s.checked
      << " passed=" << s.passed << " failed=" << s.failed
      << " skipped=" << s.skipped;
  return out.str();
}

std::string emit_human(const RunReport& report) {
  std::ostringstream out;
  out << "enumerate: " << params_line(report) << "\n\n";
  std::size_t ideal_width = 5, check_width = 5;
  for (const CheckRow& row : report.rows) {
    ideal_width = std::max(ideal_width, row.ideal.size());
    check_width = std::max(check_width, check_name(row.check).size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size() + 2, ' ');
  };
  out << pad("ideal", ideal_width) << pad("check", check_width)
      << pad("verdict", 7) << "witness\n";
  for (const CheckRow& row : report.rows) {
    out << pad(row.ideal, ideal_width) << pad(check_name(row.check), check_width)
        << pad(verdict_name(row.verdict), 7) << row.witness << "\n";
  }
  out << "\nsummary: " << summary_line(report.summary) << "\n";
  if (report.findings.empty()) {
    out << "findings: none\n";
  } else {
    out << "findings:\n";
    for (const std::string& f : report.findings) out << "  " << f << "\n";
  }
  return out.str();
}

std::string emit_structured(const RunReport& report) {
  nlohmann::ordered_json doc;
  doc["command"] = "enumerate";
  doc["params"] = {
      {"vars", report.params.vars},
      {"max_deg", report.params.max_deg},
      {"max_gens", report.params.max_gens},
      {"family", family_name(report.params.family)},
      {"limit", report.params.limit ? nlohmann::ordered_json(*report.params.limit)
                                    : nlohmann::ordered_json(nullptr)},
      {"seed", nullptr},
  };
  doc["checks"] = nlohmann::ordered_json::array();
  for (Check c : report.checks) doc["checks"].push_back(check_name(c));
  doc["exhaustive"] = report.exhaustive;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const CheckRow& row : report.rows)
    doc["rows"].push_back({{"ideal", row.ideal},
                           {"check", check_name(row.check)},
                           {"verdict", verdict_name(row.verdict)},
                           {"witness", row.witness}});
  doc["findings"] = report.findings;
  doc["summary"] = {{"ideals", report.summary.ideals},
                    {"checked", report.summary.checked},
                    {"passed", report.summary.passed},
                    {"failed", report.summary.failed},
                    {"skipped", report.summary.skipped}};
  return doc.dump(2) + "\n";
}

std::string emit_tabular(const RunReport& report) {
  std::ostringstream out;
  out << "# command=enumerate " << params_line(report) << "\n";
  for (const std::string& f : report.findings) out << "# finding " << f << "\n";
  out << "ideal,check,verdict,witness\n";
  for (const CheckRow& row : report.rows)
    out << csv_field(row.ideal) << ',' << check_name(row.check) << ','
        << verdict_name(row.verdict) << ',' << csv_field(row.witness) << "\n";
  out << "# summary " << summary_line(report.summary) << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Human: return emit_human(report);
    case ReportFormat::Structured: return emit_structured(report);
    case ReportFormat::Tabular: return emit_tabular(report);
  }
  throw std::logic_error("unreachable");
}

}  // namespace taylorres
