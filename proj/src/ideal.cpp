#include "taylorres/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace taylorres {

MonomialIdeal MonomialIdeal::zero(int vars) {
  if (vars < 1 || vars > kMaxVariables)
    throw std::invalid_argument("ambient variable count out of range");
  return MonomialIdeal(vars, {});
}

bool MonomialIdeal::contains(const Monomial& w) const {
  if (w.vars() != vars_)
    throw std::invalid_argument("ambient variable counts differ");
  for (const Monomial& g : gens_)
    if (divides(g, w)) return true;
  return false;
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens) {
  if (gens.empty())
    throw std::invalid_argument("cannot form an ideal from an empty generator list");
  const int n = gens.front().vars();
  for (const Monomial& g : gens) {
    if (g.vars() != n)
      throw std::invalid_argument("generators live in different ambient rings");
    if (g.is_unit())
      throw std::invalid_argument("the unit monomial generates the whole ring");
  }

  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    if (std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  }
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < kept.size() && !redundant; ++j)
      if (i != j && divides(kept[j], kept[i])) redundant = true;
    if (!redundant) minimal.push_back(kept[i]);
  }
  std::sort(minimal.begin(), minimal.end(), canonical_less);
  return MonomialIdeal(n, std::move(minimal));
}

bool is_minimal_generating_set(const std::vector<Monomial>& gens) {
  if (gens.empty()) return false;
  const int n = gens.front().vars();
  for (const Monomial& g : gens)
    if (g.vars() != n || g.is_unit()) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && divides(gens[i], gens[j])) return false;
  return true;
}

std::optional<int> common_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  const int d = ideal.generators().front().degree();
  for (const Monomial& g : ideal.generators())
    if (g.degree() != d) return std::nullopt;
  return d;
}

bool all_squarefree(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.generators())
    if (!g.is_squarefree()) return false;
  return true;
}

}  // namespace taylorres
