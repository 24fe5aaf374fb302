#include "taylorres/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "taylorres/text.hpp"

namespace taylorres {

SetSizeVerdict check_set_size_criterion(const MonomialIdeal& ideal) {
  const auto ordered = find_order(ideal);
  if (!ordered)
    throw std::invalid_argument("ideal has no linear-quotients ordering");
  SetSizeVerdict verdict;
  verdict.sizes = ordered->set_sizes();
  verdict.sizes_complete = true;
  for (std::size_t j = 0; j < verdict.sizes.size(); ++j)
    if (verdict.sizes[j] != static_cast<int>(j)) verdict.sizes_complete = false;
  verdict.taylor_minimal = is_minimal_subset_test(ideal.generators());
  return verdict;
}

StableConditionsVerdict check_stable_conditions(const MonomialIdeal& ideal) {
  if (!is_stable(ideal))
    throw std::invalid_argument("stable conditions need a stable ideal");
  const int r = ideal.generator_count();
  const std::map<int, int> counts = m_stats(ideal);

  StableConditionsVerdict verdict;
  verdict.taylor_minimal = is_minimal_subset_test(ideal.generators());
  verdict.max_index_reaches_count = (counts.rbegin()->first == r - 1);
  verdict.one_generator_per_index = true;
  for (int i = 0; i < ideal.vars(); ++i) {
    const auto it = counts.find(i);
    const int c = it == counts.end() ? 0 : it->second;
    if ((i < r && c != 1) || (i >= r && c != 0))
      verdict.one_generator_per_index = false;
  }
  return verdict;
}

MonomialIdeal make_staircase_ideal(int vars, const std::vector<int>& steps) {
  const int r = static_cast<int>(steps.size());
  if (r < 1) throw std::invalid_argument("staircase needs at least one step");
  if (r > vars)
    throw std::invalid_argument("staircase needs one variable per generator");
  for (int a : steps)
    if (a < 0) throw std::invalid_argument("staircase steps must be non-negative");

  std::vector<Monomial> gens;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (int k = 0; k <= i; ++k) e[static_cast<std::size_t>(k)] = steps[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(i)] += 1;
    gens.push_back(Monomial(std::move(e)));
  }
  MonomialIdeal ideal = minimalize(gens);
  if (ideal.generator_count() != r)
    throw std::logic_error("staircase generators were not pairwise non-dividing");
  if (!is_stable(ideal))
    throw std::logic_error("staircase ideal is not stable");
  if (!is_minimal_subset_test(ideal.generators()))
    throw std::logic_error("staircase ideal is not Taylor-minimal");
  return ideal;
}

std::optional<StaircaseParams> staircase_form(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  const int r = ideal.generator_count();
  if (r > ideal.vars()) return std::nullopt;
  for (int i = 0; i < r; ++i)
    if (gens[static_cast<std::size_t>(i)].max_index() != std::optional<int>(i))
      return std::nullopt;

  const Monomial& last = gens[static_cast<std::size_t>(r - 1)];
  std::vector<int> steps(last.exponents().begin(),
                         last.exponents().begin() + r);
  steps[static_cast<std::size_t>(r - 1)] -= 1;

  for (int i = 0; i < r; ++i) {
    const Monomial& g = gens[static_cast<std::size_t>(i)];
    for (int k = 0; k < ideal.vars(); ++k) {
      int expected = 0;
      if (k <= i) expected = steps[static_cast<std::size_t>(k)] + (k == i ? 1 : 0);
      if (g.exponent(k) != expected) return std::nullopt;
    }
  }
  return StaircaseParams{r, std::move(steps)};
}

EquigeneratedStableVerdict check_equigenerated_stable(const MonomialIdeal& ideal) {
  if (!is_stable(ideal))
    throw std::invalid_argument("equigenerated-stable verdict needs a stable ideal");
  const auto d = common_degree(ideal);
  if (!d || *d <= 1)
    throw std::invalid_argument(
        "equigenerated-stable verdict needs one common generator degree > 1");

  EquigeneratedStableVerdict verdict;
  verdict.degree = *d;
  verdict.taylor_minimal = is_minimal_subset_test(ideal.generators());
  verdict.matches_form = false;
  if (const auto params = staircase_form(ideal)) {
    verdict.matches_form = params->steps.front() == *d - 1 &&
                           std::all_of(params->steps.begin() + 1, params->steps.end(),
                                       [](int a) { return a == 0; });
  }
  return verdict;
}

std::optional<ScaledVariablesForm> scaled_variables_form(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return std::nullopt;

  if (gens.size() == 1) {
    // A single generator factors as (g / x_m) * x_m.
    const Monomial& g = gens.front();
    const int m = *g.max_index();
    return ScaledVariablesForm{colon(g, Monomial::variable(ideal.vars(), m)),
                               {m}};
  }

  Monomial factor = gens.front();
  for (const Monomial& g : gens) factor = gcd(factor, g);

  std::vector<int> variables;
  for (const Monomial& g : gens) {
    if (g.degree() != factor.degree() + 1 || !divides(factor, g))
      return std::nullopt;
    const Monomial v = colon(g, factor);
    if (v.degree() != 1) return std::nullopt;
    variables.push_back(*v.max_index());
  }
  std::sort(variables.begin(), variables.end());
  if (std::adjacent_find(variables.begin(), variables.end()) != variables.end())
    return std::nullopt;
  return ScaledVariablesForm{std::move(factor), std::move(variables)};
}

std::optional<std::pair<int, int>> prefix_segment_form(const MonomialIdeal& ideal) {
  const auto form = scaled_variables_form(ideal);
  if (!form) return std::nullopt;
  if (!form->factor.is_squarefree()) return std::nullopt;
  const int p = form->factor.degree();
  for (int k = 0; k < p; ++k)
    if (form->factor.exponent(k) != 1) return std::nullopt;
  const int q = p + static_cast<int>(form->variables.size());
  for (std::size_t s = 0; s < form->variables.size(); ++s)
    if (form->variables[s] != p + static_cast<int>(s)) return std::nullopt;
  return std::make_pair(p, q);
}

LinearResolutionVerdict check_linear_resolution_form(const MonomialIdeal& ideal) {
  if (!has_linear_resolution(ideal))
    throw std::invalid_argument("verdict needs an ideal with a linear resolution");
  LinearResolutionVerdict verdict;
  verdict.taylor_minimal = is_minimal_subset_test(ideal.generators());
  const auto form = scaled_variables_form(ideal);
  verdict.matches_form = form.has_value();
  verdict.linear_quotients_found = form && find_order(ideal).has_value();
  return verdict;
}

ClassificationReport classify(const MonomialIdeal& ideal) {
  ClassificationReport report;
  const int r = ideal.generator_count();

  report.taylor_minimal = is_minimal_subset_test(ideal.generators());
  report.stable = is_stable(ideal);
  report.m_counts = m_stats(ideal);
  report.staircase = staircase_form(ideal);
  report.scaled_variables = scaled_variables_form(ideal);

  if (r <= kMaxSearchGenerators) {
    report.order_search_complete = true;
    report.linear_quotients = find_order(ideal);
    if (report.linear_quotients)
      report.set_sizes = report.linear_quotients->set_sizes();
  }

  if (!common_degree(ideal))
    report.linear_resolution = false;
  else if (r <= kMaxOracleGenerators)
    report.linear_resolution = has_linear_resolution(ideal);

  if (all_squarefree(ideal)) {
    report.squarefree_stable = is_squarefree_stable(ideal);
    if (common_degree(ideal)) report.matroidal = is_matroidal(ideal);
  }

  if (r <= kMaxOracleGenerators) report.betti = betti_oracle(ideal);
  return report;
}

}  // namespace taylorres
