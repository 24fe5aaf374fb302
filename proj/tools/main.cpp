// taylorres: Taylor complexes of monomial ideals, minimality, linear
// quotients, Betti numbers and exhaustive family checks.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "taylorres/betti.hpp"
#include "taylorres/classify.hpp"
#include "taylorres/harness.hpp"
#include "taylorres/text.hpp"

namespace {

using nlohmann::ordered_json;
using namespace taylorres;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEnvelope = 3;

std::string subset_text(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < 32; ++k) {
    if (!(mask & (1u << k))) continue;
    if (!first) out += ',';
    out += std::to_string(k + 1);
    first = false;
  }
  return out + "}";
}

std::string index_set_text(const std::vector<int>& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i] + 1);
  }
  return out + "}";
}

ordered_json index_set_json(const std::vector<int>& indices) {
  ordered_json a = ordered_json::array();
  for (int i : indices) a.push_back(i + 1);
  return a;
}

ordered_json betti_json(const BettiTable& table) {
  ordered_json j;
  j["total"] = table.total;
  j["graded"] = ordered_json::array();
  for (const auto& [key, value] : table.graded)
    j["graded"].push_back({{"q", key.first}, {"degree", key.second}, {"value", value}});
  return j;
}

void print_betti_total(std::ostream& out, const std::string& label,
                       const std::vector<std::uint64_t>& totals) {
  out << label;
  for (std::uint64_t b : totals) out << ' ' << b;
  out << '\n';
}

void print_betti_graded(std::ostream& out, const BettiTable& table) {
  out << "graded:\n";
  for (const auto& [key, value] : table.graded)
    out << "  beta_{" << key.first << ',' << key.second << "} = " << value << '\n';
}

struct GlobalOptions {
  int vars = 0;
  std::string format = "human";
  std::uint64_t limit = 0;  // 0 = unlimited
  bool structured() const { return format == "structured"; }
};

ParsedIdeal parse_input(const GlobalOptions& opts, const std::string& text) {
  if (opts.vars == 0)
    throw CLI::ValidationError("--vars", "required for ideal text input");
  return parse_ideal(text, opts.vars);
}

void require_single_ideal_format(const GlobalOptions& opts) {
  if (opts.format == "tabular")
    throw CLI::ValidationError("--format",
                               "tabular applies to enumerate reports only");
}

int cmd_gens(const GlobalOptions& opts, const std::string& text) {
  const ParsedIdeal parsed = parse_input(opts, text);
  if (opts.structured()) {
    ordered_json doc;
    doc["command"] = "gens";
    doc["vars"] = opts.vars;
    doc["ideal"] = to_text(parsed.ideal);
    doc["generators"] = ordered_json::array();
    for (const Monomial& g : parsed.ideal.generators())
      doc["generators"].push_back(to_text(g));
    doc["warnings"] = parsed.warnings;
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const std::string& w : parsed.warnings)
      std::cerr << "warning: " << w << '\n';
    std::cout << to_text(parsed.ideal) << '\n';
  }
  return kExitOk;
}

int cmd_taylor(const GlobalOptions& opts, const std::string& text, bool matrices) {
  const ParsedIdeal parsed = parse_input(opts, text);
  const TaylorComplex complex(parsed.ideal.generators());
  const int r = complex.generator_count();
  const bool minimal = is_minimal(complex);

  if (opts.structured()) {
    ordered_json doc;
    doc["command"] = "taylor";
    doc["vars"] = opts.vars;
    doc["ideal"] = to_text(parsed.ideal);
    doc["ranks"] = ordered_json::array();
    for (int q = 0; q < r; ++q) doc["ranks"].push_back(complex.rank(q));
    doc["minimal"] = minimal;
    if (matrices) {
      doc["differentials"] = ordered_json::array();
      for (int q = 1; q < r; ++q) {
        ordered_json block;
        block["q"] = q;
        block["entries"] = ordered_json::array();
        const TaylorStrand& strand = complex.strand(q);
        for (std::size_t c = 0; c < strand.columns.size(); ++c) {
          auto entries = strand.columns[c];
          std::sort(entries.begin(), entries.end(),
                    [](const TaylorEntry& a, const TaylorEntry& b) {
                      return a.row_mask < b.row_mask;
                    });
          for (const TaylorEntry& e : entries)
            block["entries"].push_back({{"row", subset_text(e.row_mask)},
                                        {"col", subset_text(strand.basis[c])},
                                        {"sign", e.sign},
                                        {"monomial", to_text(e.part)}});
        }
        doc["differentials"].push_back(block);
      }
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "generators: " << to_text(parsed.ideal) << " (r=" << r << ")\n";
  for (int q = 0; q < r; ++q)
    std::cout << "strand q=" << q << ": rank " << complex.rank(q) << '\n';
  std::cout << "minimal: " << (minimal ? "yes" : "no") << '\n';
  if (matrices) {
    for (int q = 1; q < r; ++q) {
      std::cout << "d_" << q << " entries (row col sign monomial):\n";
      const TaylorStrand& strand = complex.strand(q);
      for (std::size_t c = 0; c < strand.columns.size(); ++c) {
        auto entries = strand.columns[c];
        std::sort(entries.begin(), entries.end(),
                  [](const TaylorEntry& a, const TaylorEntry& b) {
                    return a.row_mask < b.row_mask;
                  });
        for (const TaylorEntry& e : entries)
          std::cout << "  " << subset_text(e.row_mask) << ' '
                    << subset_text(strand.basis[c]) << ' '
                    << (e.sign > 0 ? "+1" : "-1") << ' ' << to_text(e.part)
                    << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_is_minimal(const GlobalOptions& opts, const std::string& text) {
  const ParsedIdeal parsed = parse_input(opts, text);
  const bool minimal = is_minimal_subset_test(parsed.ideal.generators());
  if (opts.structured()) {
    ordered_json doc;
    doc["command"] = "is-minimal";
    doc["vars"] = opts.vars;
    doc["ideal"] = to_text(parsed.ideal);
    doc["minimal"] = minimal;
    doc["method"] = "subset-test";
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "minimal: " << (minimal ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_linquo(const GlobalOptions& opts, const std::string& text) {
  const ParsedIdeal parsed = parse_input(opts, text);
  const auto ordered = find_order(parsed.ideal);

  if (opts.structured()) {
    ordered_json doc;
    doc["command"] = "linquo";
    doc["vars"] = opts.vars;
    doc["ideal"] = to_text(parsed.ideal);
    doc["linear_quotients"] = ordered.has_value();
    if (ordered) {
      doc["order"] = index_set_json(ordered->order);
      doc["sets"] = ordered_json::array();
      for (const auto& s : ordered->sets) doc["sets"].push_back(index_set_json(s));
    } else {
      std::vector<int> identity(parsed.ideal.generators().size());
      std::iota(identity.begin(), identity.end(), 0);
      const OrderCheckResult canonical = check_order(parsed.ideal, identity);
      doc["canonical_failure"] = {
          {"position", canonical.fail_position + 1},
          {"witness", to_text(*canonical.witness)}};
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "linear quotients: " << (ordered ? "yes" : "no") << '\n';
  if (ordered) {
    std::cout << "order:";
    for (int i : ordered->order) std::cout << ' ' << (i + 1);
    std::cout << '\n';
    for (std::size_t j = 0; j < ordered->sets.size(); ++j)
      std::cout << "set(u_" << (j + 1)
                << ") = " << index_set_text(ordered->sets[j]) << '\n';
  } else {
    std::vector<int> identity(parsed.ideal.generators().size());
    std::iota(identity.begin(), identity.end(), 0);
    const OrderCheckResult canonical = check_order(parsed.ideal, identity);
    std::cout << "no ordering of the " << parsed.ideal.generator_count()
              << " generators has linear quotients\n";
    std::cout << "canonical order fails at position "
              << (canonical.fail_position + 1) << ": colon generator "
              << to_text(*canonical.witness) << " is not a variable\n";
  }
  return kExitOk;
}

int cmd_betti(const GlobalOptions& opts, const std::string& text,
              const std::string& method) {
  const ParsedIdeal parsed = parse_input(opts, text);
  const bool want_formula = method == "formula" || method == "both";
  const bool want_oracle = method == "oracle" || method == "both";

  std::optional<OrderedIdeal> ordered;
  std::optional<BettiTable> formula;
  if (want_formula) {
    ordered = find_order(parsed.ideal);
    if (ordered) formula = betti_formula(*ordered);
  }
  std::optional<BettiTable> oracle;
  if (want_oracle) oracle = betti_oracle(parsed.ideal);

  std::optional<bool> agreement;
  if (method == "both" && formula && oracle)
    agreement = formula->total == oracle->total;

  if (opts.structured()) {
    ordered_json doc;
    doc["command"] = "betti";
    doc["vars"] = opts.vars;
    doc["ideal"] = to_text(parsed.ideal);
    doc["method"] = method;
    if (want_formula)
      doc["formula"] = formula ? betti_json(*formula)
                               : ordered_json("no linear-quotients order");
    if (oracle) doc["oracle"] = betti_json(*oracle);
    if (method == "both")
      doc["agreement"] = agreement ? ordered_json(*agreement)
                                   : ordered_json("skipped");
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "method: " << method << '\n';
    if (want_formula) {
      if (formula)
        print_betti_total(std::cout, "formula total:", formula->total);
      else
        std::cout << "formula: no linear-quotients order\n";
    }
    if (oracle) {
      print_betti_total(std::cout, "oracle total:", oracle->total);
      print_betti_graded(std::cout, *oracle);
    }
    if (method == "both")
      std::cout << "agreement: "
                << (agreement ? (*agreement ? "yes" : "no") : "skipped") << '\n';
  }

  if (method == "formula" && !formula) {
    std::cerr << "error: no linear-quotients order, formula inapplicable\n";
    return kExitCheckFailure;
  }
  if (agreement && !*agreement) return kExitCheckFailure;
  return kExitOk;
}

int cmd_classify(const GlobalOptions& opts, const std::string& text) {
  const ParsedIdeal parsed = parse_input(opts, text);
  const ClassificationReport report = classify(parsed.ideal);

  if (opts.structured()) {
    ordered_json doc;
    doc["command"] = "classify";
    doc["vars"] = opts.vars;
    doc["ideal"] = to_text(parsed.ideal);
    if (report.order_search_complete) {
      doc["linear_quotients"] = report.linear_quotients.has_value();
      if (report.linear_quotients) {
        doc["order"] = index_set_json(report.linear_quotients->order);
        doc["set_sizes"] = report.set_sizes;
      }
    }
    doc["taylor_minimal"] = report.taylor_minimal;
    doc["stable"] = report.stable;
    if (report.staircase) {
      doc["staircase"] = {{"r", report.staircase->r},
                          {"steps", report.staircase->steps}};
    }
    if (report.scaled_variables) {
      doc["scaled_variables"] = {
          {"factor", to_text(report.scaled_variables->factor)},
          {"variables", index_set_json(report.scaled_variables->variables)}};
    }
    if (report.linear_resolution)
      doc["linear_resolution"] = *report.linear_resolution;
    if (report.matroidal) doc["matroidal"] = *report.matroidal;
    if (report.squarefree_stable)
      doc["squarefree_stable"] = *report.squarefree_stable;
    doc["m_counts"] = ordered_json::object();
    for (const auto& [index, count] : report.m_counts)
      doc["m_counts"][std::to_string(index + 1)] = count;
    if (report.betti) doc["betti"] = betti_json(*report.betti);
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "ideal: " << to_text(parsed.ideal) << '\n';
  if (report.order_search_complete) {
    std::cout << "linear quotients: "
              << (report.linear_quotients ? "yes" : "no") << '\n';
    if (report.linear_quotients) {
      std::cout << "  order:";
      for (int i : report.linear_quotients->order) std::cout << ' ' << (i + 1);
      std::cout << "\n  set sizes:";
      for (int s : report.set_sizes) std::cout << ' ' << s;
      std::cout << '\n';
    }
  }
  std::cout << "taylor minimal: " << (report.taylor_minimal ? "yes" : "no") << '\n';
  std::cout << "stable: " << (report.stable ? "yes" : "no") << '\n';
  if (report.staircase) {
    std::cout << "staircase form: steps";
    for (int a : report.staircase->steps) std::cout << ' ' << a;
    std::cout << '\n';
  }
  if (report.scaled_variables)
    std::cout << "scaled-variables form: " << to_text(report.scaled_variables->factor)
              << " * " << index_set_text(report.scaled_variables->variables) << '\n';
  if (report.linear_resolution)
    std::cout << "linear resolution: " << (*report.linear_resolution ? "yes" : "no")
              << '\n';
  if (report.matroidal)
    std::cout << "matroidal: " << (*report.matroidal ? "yes" : "no") << '\n';
  if (report.squarefree_stable)
    std::cout << "squarefree stable: "
              << (*report.squarefree_stable ? "yes" : "no") << '\n';
  std::cout << "m counts:";
  for (const auto& [index, count] : report.m_counts)
    std::cout << " m_" << (index + 1) << "=" << count;
  std::cout << '\n';
  if (report.betti) print_betti_total(std::cout, "betti total:", report.betti->total);
  return kExitOk;
}

int cmd_enumerate(const GlobalOptions& opts, int max_deg, int max_gens,
                  const std::string& family, const std::string& checks_arg) {
  if (opts.vars == 0)
    throw CLI::ValidationError("--vars", "required for enumerate");
  EnumerationParams params;
  params.vars = opts.vars;
  params.max_deg = max_deg;
  params.max_gens = max_gens;
  params.family = family_from_name(family);
  if (opts.limit > 0) params.limit = opts.limit;

  if (checks_arg.empty()) {
    std::vector<std::string> ideals;
    const bool exhaustive = for_each_ideal(params, [&](const MonomialIdeal& ideal) {
      ideals.push_back(to_text(ideal));
      return true;
    });
    if (opts.structured()) {
      ordered_json doc;
      doc["command"] = "enumerate";
      doc["params"] = {{"vars", params.vars},
                       {"max_deg", params.max_deg},
                       {"max_gens", params.max_gens},
                       {"family", family_name(params.family)},
                       {"limit", params.limit ? ordered_json(*params.limit)
                                              : ordered_json(nullptr)}};
      doc["exhaustive"] = exhaustive;
      doc["ideals"] = ideals;
      doc["count"] = ideals.size();
      std::cout << doc.dump(2) << '\n';
    } else {
      for (const std::string& text : ideals) std::cout << text << '\n';
      std::cout << "count: " << ideals.size()
                << (exhaustive ? "" : " (truncated)") << '\n';
    }
    return kExitOk;
  }

  std::vector<Check> checks;
  if (checks_arg == "all") {
    checks = all_checks();
  } else {
    std::stringstream ss(checks_arg);
    std::string name;
    while (std::getline(ss, name, ',')) checks.push_back(check_from_name(name));
  }
  const RunReport report = run_checks(params, checks);
  std::cout << emit_report(report, format_from_name(opts.format));
  return report.ok() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Taylor complexes of monomial ideals: construction, minimality,\n"
      "linear quotients, Betti numbers (closed formula and homology oracle)\n"
      "and exhaustive verification over enumerated families.\n\n"
      "Ideal text grammar: 'x1^2*x2, x1*x3' (variables are 1-indexed).\n"
      "Betti indexing: beta_q counts the q-th term of the minimal resolution\n"
      "of the ideal itself, so beta_0 is the number of minimal generators.\n"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--vars", opts.vars, "Ambient variable count (required for ideal text)");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"human", "structured", "tabular"}))
      ->capture_default_str();
  app.add_option("--limit", opts.limit, "Truncate enumeration streams (0 = all)");

  std::string text, method{"both"}, family{"all"}, checks_arg;
  int max_deg = 2, max_gens = 4;
  bool matrices = false;

  CLI::App* gens = app.add_subcommand("gens", "Canonical minimal generators");
  gens->add_option("ideal", text, "Ideal text")->required();

  CLI::App* taylor = app.add_subcommand("taylor", "Taylor complex ranks and matrices");
  taylor->add_option("ideal", text, "Ideal text")->required();
  taylor->add_flag("--matrices", matrices, "Print all differential entries");

  CLI::App* isminimal = app.add_subcommand("is-minimal", "Taylor minimality");
  isminimal->add_option("ideal", text, "Ideal text")->required();

  CLI::App* linquo = app.add_subcommand("linquo", "Search a linear-quotients ordering");
  linquo->add_option("ideal", text, "Ideal text")->required();

  CLI::App* betti = app.add_subcommand("betti", "Betti numbers");
  betti->add_option("ideal", text, "Ideal text")->required();
  betti->add_option("--method", method, "formula | oracle | both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}))
      ->capture_default_str();

  CLI::App* classify_cmd = app.add_subcommand("classify", "Full classification report");
  classify_cmd->add_option("ideal", text, "Ideal text")->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "Stream minimal ideals; optionally run checks");
  enumerate_cmd->add_option("--max-deg", max_deg, "Generator degree cap")
      ->capture_default_str();
  enumerate_cmd->add_option("--max-gens", max_gens, "Generator count cap")
      ->capture_default_str();
  enumerate_cmd->add_option("--family", family,
                            "all | stable | squarefree | equigenerated | matroidal")
      ->capture_default_str();
  enumerate_cmd->add_option("--checks", checks_arg,
                            "Comma-separated check names, or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gens) {
      require_single_ideal_format(opts);
      return cmd_gens(opts, text);
    }
    if (*taylor) {
      require_single_ideal_format(opts);
      return cmd_taylor(opts, text, matrices);
    }
    if (*isminimal) {
      require_single_ideal_format(opts);
      return cmd_is_minimal(opts, text);
    }
    if (*linquo) {
      require_single_ideal_format(opts);
      return cmd_linquo(opts, text);
    }
    if (*betti) {
      require_single_ideal_format(opts);
      return cmd_betti(opts, text, method);
    }
    if (*classify_cmd) {
      require_single_ideal_format(opts);
      return cmd_classify(opts, text);
    }
    if (*enumerate_cmd)
      return cmd_enumerate(opts, max_deg, max_gens, family, checks_arg);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << (e.position() + 1) << ": "
              << e.what() << '\n';
    return kExitUsage;
  } catch (const EnvelopeError& e) {
    std::cerr << "envelope exceeded: " << e.what() << '\n';
    return kExitEnvelope;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
