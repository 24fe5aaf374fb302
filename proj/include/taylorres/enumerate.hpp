#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "taylorres/ideal.hpp"

namespace taylorres {

enum class Family { All, Stable, Squarefree, Equigenerated, Matroidal };

Family family_from_name(const std::string& name);
std::string family_name(Family family);

struct EnumerationParams {
  int vars = 1;
  int max_deg = 1;
  int max_gens = 1;
  Family family = Family::All;
  std::optional<std::uint64_t> limit;
};

/// All monomials of degree 1..max_deg in canonical order.
std::vector<Monomial> monomial_universe(int vars, int max_deg, bool squarefree_only);

/// Streams every minimal monomial ideal whose generators have degree at
/// most max_deg and whose generator count is at most max_gens, each exactly
/// once, in a deterministic order: antichains of the divisibility poset are
/// grown directly (never built by minimalizing subsets). Family streams
/// restrict the universe (squarefree), prune (equigenerated) or filter on
/// emit (stable, matroidal). The visitor returns false to stop; the return
/// value is false iff the stream was stopped early.
bool for_each_ideal(const EnumerationParams& params,
                    const std::function<bool(const MonomialIdeal&)>& visit);

std::vector<MonomialIdeal> enumerate_ideals(const EnumerationParams& params);

std::uint64_t count_ideals(const EnumerationParams& params);

}  // namespace taylorres
