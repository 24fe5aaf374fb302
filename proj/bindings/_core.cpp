// Python bindings for the main operations. Indices cross the boundary
// 1-based (variables and generator positions), matching the text grammar.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taylorres/betti.hpp"
#include "taylorres/classify.hpp"
#include "taylorres/harness.hpp"
#include "taylorres/text.hpp"

namespace py = pybind11;
using namespace taylorres;

namespace {

std::vector<int> to_one_based(const std::vector<int>& indices) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(i + 1);
  return out;
}

py::dict betti_dict(const BettiTable& table) {
  py::dict d;
  d["total"] = table.total;
  py::dict graded;
  for (const auto& [key, value] : table.graded)
    graded[py::make_tuple(key.first, key.second)] = value;
  d["graded"] = graded;
  return d;
}

py::dict ordered_dict(const OrderedIdeal& ordered) {
  py::dict d;
  d["order"] = to_one_based(ordered.order);
  py::list sets;
  for (const auto& s : ordered.sets) sets.append(to_one_based(s));
  d["sets"] = sets;
  d["set_sizes"] = ordered.set_sizes();
  return d;
}

py::dict report_dict(const ClassificationReport& report) {
  py::dict d;
  if (report.order_search_complete) {
    d["linear_quotients"] = report.linear_quotients.has_value();
    if (report.linear_quotients)
      d["order"] = ordered_dict(*report.linear_quotients);
  }
  d["taylor_minimal"] = report.taylor_minimal;
  d["stable"] = report.stable;
  if (report.staircase) d["staircase_steps"] = report.staircase->steps;
  if (report.scaled_variables) {
    d["scaled_variables"] =
        py::make_tuple(to_text(report.scaled_variables->factor),
                       to_one_based(report.scaled_variables->variables));
  }
  if (report.linear_resolution) d["linear_resolution"] = *report.linear_resolution;
  if (report.matroidal) d["matroidal"] = *report.matroidal;
  if (report.squarefree_stable) d["squarefree_stable"] = *report.squarefree_stable;
  py::dict counts;
  for (const auto& [index, count] : report.m_counts)
    counts[py::int_(index + 1)] = count;
  d["m_counts"] = counts;
  if (report.betti) d["betti"] = betti_dict(*report.betti);
  return d;
}

EnumerationParams make_params(int vars, int max_deg, int max_gens,
                              const std::string& family,
                              std::optional<std::uint64_t> limit) {
  EnumerationParams params;
  params.vars = vars;
  params.max_deg = max_deg;
  params.max_gens = max_gens;
  params.family = family_from_name(family);
  params.limit = limit;
  return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Taylor complexes of monomial ideals: minimality, linear "
            "quotients and Betti numbers in exact arithmetic.";

  py::register_exception<EnvelopeError>(m, "EnvelopeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Monomial>(m, "Monomial")
      .def(py::init<std::vector<int>>(), py::arg("exponents"))
      .def_static("parse", &parse_monomial, py::arg("text"), py::arg("vars"))
      .def_property_readonly("exponents", &Monomial::exponents)
      .def_property_readonly("vars", &Monomial::vars)
      .def("degree", &Monomial::degree)
      .def("is_unit", &Monomial::is_unit)
      .def("is_squarefree", &Monomial::is_squarefree)
      .def("max_index",
           [](const Monomial& u) -> std::optional<int> {
             const auto k = u.max_index();
             if (!k) return std::nullopt;
             return *k + 1;
           })
      .def("__mul__", &Monomial::operator*)
      .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
      .def("__hash__", [](const Monomial& u) {
        return py::hash(py::tuple(py::cast(u.exponents())));
      })
      .def("__str__", [](const Monomial& u) { return to_text(u); })
      .def("__repr__",
           [](const Monomial& u) { return "Monomial('" + to_text(u) + "')"; });

  m.def("divides", &divides, py::arg("u"), py::arg("v"));
  m.def("lcm", &lcm, py::arg("u"), py::arg("v"));
  m.def("gcd", &gcd, py::arg("u"), py::arg("v"));
  m.def("colon", &colon, py::arg("u"), py::arg("v"));

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def_property_readonly("vars", &MonomialIdeal::vars)
      .def_property_readonly("generators", &MonomialIdeal::generators)
      .def("contains", &MonomialIdeal::contains, py::arg("monomial"))
      .def("__len__", &MonomialIdeal::generator_count)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__str__", [](const MonomialIdeal& i) { return to_text(i); })
      .def("__repr__",
           [](const MonomialIdeal& i) { return "MonomialIdeal('" + to_text(i) + "')"; });

  m.def(
      "parse_ideal",
      [](const std::string& text, int vars) {
        const ParsedIdeal parsed = parse_ideal(text, vars);
        return py::make_tuple(parsed.ideal, parsed.warnings);
      },
      py::arg("text"), py::arg("vars"),
      "Parse ideal text; returns (ideal, warnings).");
  m.def("minimalize", &minimalize, py::arg("generators"));

  m.def(
      "taylor_summary",
      [](const MonomialIdeal& ideal, bool matrices) {
        const TaylorComplex complex(ideal.generators());
        py::dict d;
        std::vector<std::size_t> ranks;
        for (int q = 0; q < complex.strand_count(); ++q)
          ranks.push_back(complex.rank(q));
        d["ranks"] = ranks;
        d["verified"] = verify_complex(complex);
        d["minimal"] = is_minimal(complex);
        if (matrices) {
          py::list blocks;
          for (int q = 1; q < complex.strand_count(); ++q) {
            py::list entries;
            const TaylorStrand& strand = complex.strand(q);
            for (std::size_t c = 0; c < strand.columns.size(); ++c)
              for (const TaylorEntry& e : strand.columns[c])
                entries.append(py::make_tuple(e.row_mask, strand.basis[c],
                                              e.sign, to_text(e.part)));
            blocks.append(entries);
          }
          d["differentials"] = blocks;
        }
        return d;
      },
      py::arg("ideal"), py::arg("matrices") = false,
      "Strand ranks, d.d = 0 verification and minimality; with matrices, "
      "all differential entries as (row_mask, col_mask, sign, monomial).");

  m.def(
      "is_minimal",
      [](const MonomialIdeal& ideal) {
        return is_minimal_subset_test(ideal.generators());
      },
      py::arg("ideal"), "Taylor minimality via the subset-lcm criterion.");

  m.def(
      "find_order",
      [](const MonomialIdeal& ideal) -> std::optional<py::dict> {
        const auto ordered = find_order(ideal);
        if (!ordered) return std::nullopt;
        return ordered_dict(*ordered);
      },
      py::arg("ideal"),
      "Deterministic linear-quotients ordering, or None. Keys: order, sets, "
      "set_sizes (1-based indices).");

  m.def(
      "check_order",
      [](const MonomialIdeal& ideal, const std::vector<int>& order) {
        std::vector<int> zero_based;
        for (int i : order) zero_based.push_back(i - 1);
        const OrderCheckResult result = check_order(ideal, zero_based);
        py::dict d;
        d["ok"] = result.ok();
        if (result.ok()) {
          d.attr("update")(ordered_dict(*result.ordered));
        } else {
          d["fail_position"] = result.fail_position + 1;
          d["witness"] = to_text(*result.witness);
        }
        return d;
      },
      py::arg("ideal"), py::arg("order"),
      "Check one 1-based ordering for linear quotients.");

  m.def("is_stable", &is_stable, py::arg("ideal"));
  m.def("is_squarefree_stable", &is_squarefree_stable, py::arg("ideal"));
  m.def("is_matroidal", &is_matroidal, py::arg("ideal"));
  m.def(
      "m_stats",
      [](const MonomialIdeal& ideal) {
        py::dict d;
        for (const auto& [index, count] : m_stats(ideal))
          d[py::int_(index + 1)] = count;
        return d;
      },
      py::arg("ideal"), "Generator counts keyed by 1-based max variable index.");

  m.def("binomial", &binomial, py::arg("a"), py::arg("q"));
  m.def(
      "betti_formula",
      [](const MonomialIdeal& ideal) {
        const auto ordered = find_order(ideal);
        if (!ordered)
          throw std::invalid_argument("ideal has no linear-quotients ordering");
        return betti_dict(betti_formula(*ordered));
      },
      py::arg("ideal"),
      "Closed-formula Betti totals over the found linear-quotients ordering.");
  m.def(
      "betti_oracle",
      [](const MonomialIdeal& ideal) { return betti_dict(betti_oracle(ideal)); },
      py::arg("ideal"),
      "Homology-oracle Betti numbers; graded keys are (q, total_degree).");
  m.def("has_linear_resolution", &has_linear_resolution, py::arg("ideal"));
  m.def(
      "betti_oracle_multigraded",
      [](const MonomialIdeal& ideal) {
        py::dict d;
        for (const auto& [key, value] : betti_oracle_multigraded(ideal))
          d[py::make_tuple(key.first, py::tuple(py::cast(key.second)))] = value;
        return d;
      },
      py::arg("ideal"),
      "Homology dimensions keyed by (q, multidegree exponent tuple).");

  m.def("make_staircase_ideal", &make_staircase_ideal, py::arg("vars"),
        py::arg("steps"));
  m.def(
      "staircase_form",
      [](const MonomialIdeal& ideal) -> std::optional<std::vector<int>> {
        const auto form = staircase_form(ideal);
        if (!form) return std::nullopt;
        return form->steps;
      },
      py::arg("ideal"));
  m.def(
      "scaled_variables_form",
      [](const MonomialIdeal& ideal) -> std::optional<py::tuple> {
        const auto form = scaled_variables_form(ideal);
        if (!form) return std::nullopt;
        return py::make_tuple(to_text(form->factor),
                              to_one_based(form->variables));
      },
      py::arg("ideal"));

  m.def(
      "classify",
      [](const MonomialIdeal& ideal) { return report_dict(classify(ideal)); },
      py::arg("ideal"));

  m.def(
      "enumerate_ideals",
      [](int vars, int max_deg, int max_gens, const std::string& family,
         std::optional<std::uint64_t> limit) {
        return enumerate_ideals(make_params(vars, max_deg, max_gens, family, limit));
      },
      py::arg("vars"), py::arg("max_deg"), py::arg("max_gens"),
      py::arg("family") = "all", py::arg("limit") = std::nullopt);

  m.def(
      "run_checks",
      [](int vars, int max_deg, int max_gens, const std::string& family,
         const std::vector<std::string>& checks,
         std::optional<std::uint64_t> limit, const std::string& format) {
        std::vector<Check> parsed;
        for (const std::string& name : checks)
          parsed.push_back(check_from_name(name));
        const RunReport report =
            run_checks(make_params(vars, max_deg, max_gens, family, limit), parsed);
        py::dict d;
        d["summary"] = py::dict(
            py::arg("ideals") = report.summary.ideals,
            py::arg("checked") = report.summary.checked,
            py::arg("passed") = report.summary.passed,
            py::arg("failed") = report.summary.failed,
            py::arg("skipped") = report.summary.skipped);
        d["exhaustive"] = report.exhaustive;
        d["findings"] = report.findings;
        py::list rows;
        for (const CheckRow& row : report.rows)
          rows.append(py::make_tuple(row.ideal, check_name(row.check),
                                     verdict_name(row.verdict), row.witness));
        d["rows"] = rows;
        d["text"] = emit_report(report, format_from_name(format));
        return d;
      },
      py::arg("vars"), py::arg("max_deg"), py::arg("max_gens"),
      py::arg("family"), py::arg("checks"), py::arg("limit") = std::nullopt,
      py::arg("format") = "structured",
      "Run named checks over an enumerated stream; failed == 0 means pass.");

  m.def("check_names", [] {
    std::vector<std::string> names;
    for (Check c : all_checks()) names.push_back(check_name(c));
    return names;
  });

  m.attr("__version__") = "0.1.0";
}
