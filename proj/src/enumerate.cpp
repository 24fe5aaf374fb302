#include "taylorres/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "taylorres/quotients.hpp"

namespace taylorres {

Family family_from_name(const std::string& name) {
  if (name == "all") return Family::All;
  if (name == "stable") return Family::Stable;
  if (name == "squarefree") return Family::Squarefree;
  if (name == "equigenerated") return Family::Equigenerated;
  if (name == "matroidal") return Family::Matroidal;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::All: return "all";
    case Family::Stable: return "stable";
    case Family::Squarefree: return "squarefree";
    case Family::Equigenerated: return "equigenerated";
    case Family::Matroidal: return "matroidal";
  }
  throw std::logic_error("unreachable");
}

namespace {

/// Exhaustive streams stay tractable only for few variables; the caps
/// depend on how sharply the family cuts the antichain space.
int family_var_cap(Family family) {
  switch (family) {
    case Family::All: return 3;
    case Family::Stable:
    case Family::Equigenerated: return 4;
    case Family::Squarefree:
    case Family::Matroidal: return 5;
  }
  throw std::logic_error("unreachable");
}

void validate(const EnumerationParams& params) {
  if (params.vars < 1 || params.max_deg < 1 || params.max_gens < 1)
    throw std::invalid_argument("enumeration parameters must be positive");
  const int cap = family_var_cap(params.family);
  if (params.vars > cap)
    throw EnvelopeError("family '" + family_name(params.family) +
                        "' supports at most " + std::to_string(cap) +
                        " variables, got " + std::to_string(params.vars));
}

void collect_monomials(int vars, int max_deg, bool squarefree_only, int var,
                       std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == vars) {
    Monomial m(exps);
    if (!m.is_unit()) out.push_back(std::move(m));
    return;
  }
  const int budget = max_deg - std::accumulate(exps.begin(), exps.begin() + var, 0);
  const int cap = squarefree_only ? std::min(1, budget) : budget;
  for (int e = 0; e <= cap; ++e) {
    exps[static_cast<std::size_t>(var)] = e;
    collect_monomials(vars, max_deg, squarefree_only, var + 1, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomial_universe(int vars, int max_deg, bool squarefree_only) {
  std::vector<int> exps(static_cast<std::size_t>(vars), 0);
  std::vector<Monomial> out;
  collect_monomials(vars, max_deg, squarefree_only, 0, exps, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool for_each_ideal(const EnumerationParams& params,
                    const std::function<bool(const MonomialIdeal&)>& visit) {
  validate(params);
  const bool squarefree_only =
      params.family == Family::Squarefree || params.family == Family::Matroidal;
  const bool equigenerated_only =
      params.family == Family::Equigenerated || params.family == Family::Matroidal;
  const std::vector<Monomial> universe =
      monomial_universe(params.vars, params.max_deg, squarefree_only);

  std::vector<Monomial> chosen;
  std::uint64_t emitted = 0;
  bool stopped = false;

  auto emit = [&](const MonomialIdeal& ideal) {
    if (params.family == Family::Stable && !is_stable(ideal)) return;
    if (params.family == Family::Matroidal && !is_matroidal(ideal)) return;
    if (params.limit && emitted >= *params.limit) {
      stopped = true;
      return;
    }
    ++emitted;
    if (!visit(ideal)) stopped = true;
  };

  auto grow = [&](auto&& self, std::size_t next) -> void {
    if (stopped) return;
    if (!chosen.empty()) emit(minimalize(chosen));
    if (stopped || chosen.size() >= static_cast<std::size_t>(params.max_gens)) return;
    for (std::size_t i = next; i < universe.size() && !stopped; ++i) {
      const Monomial& candidate = universe[i];
      if (equigenerated_only && !chosen.empty() &&
          candidate.degree() != chosen.front().degree())
        continue;
      bool comparable = false;
      for (const Monomial& c : chosen)
        if (divides(c, candidate) || divides(candidate, c)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      chosen.push_back(candidate);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return !stopped;
}

std::vector<MonomialIdeal> enumerate_ideals(const EnumerationParams& params) {
  std::vector<MonomialIdeal> out;
  for_each_ideal(params, [&](const MonomialIdeal& ideal) {
    out.push_back(ideal);
    return true;
  });
  return out;
}

std::uint64_t count_ideals(const EnumerationParams& params) {
  std::uint64_t count = 0;
  for_each_ideal(params, [&](const MonomialIdeal&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace taylorres
