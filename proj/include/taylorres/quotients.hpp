#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "taylorres/ideal.hpp"

namespace taylorres {

/// Backtracking search cap for find_order.
inline constexpr int kMaxSearchGenerators = 12;
/// Full-order enumeration cap for for_each_valid_order.
inline constexpr int kMaxOrderEnumeration = 8;

/// A generator ordering u_1..u_r with linear quotients, together with the
/// variable sets generating each prefix colon (u_1..u_{j-1}) : u_j.
/// order[j] is a 0-based index into ideal.generators(); sets[j] holds
/// sorted 0-based variable indices. sets[0] is empty (the empty prefix
/// colons to the zero ideal). |sets[j]| <= j always.
struct OrderedIdeal {
  MonomialIdeal ideal;
  std::vector<int> order;
  std::vector<std::vector<int>> sets;

  std::vector<int> set_sizes() const;
  const Monomial& generator_at(int position) const {
    return ideal.generators()[static_cast<std::size_t>(
        order[static_cast<std::size_t>(position)])];
  }
};

struct OrderCheckResult {
  std::optional<OrderedIdeal> ordered;
  /// On failure: 0-based position of the first prefix colon that is not
  /// generated by variables, and one offending colon generator.
  int fail_position = -1;
  std::optional<Monomial> witness;

  bool ok() const { return ordered.has_value(); }
};

/// Minimal generators of (prefix) : u. Empty prefix yields the zero ideal.
/// u must not be divisible by any prefix element.
MonomialIdeal prefix_colon_gens(std::span<const Monomial> prefix,
                                const Monomial& u);

/// Tests one ordering for linear quotients; on success fills the sets.
OrderCheckResult check_order(const MonomialIdeal& ideal,
                             const std::vector<int>& order);

/// Complete backtracking search over orderings; candidates are tried in
/// canonical generator order, so the result is deterministic. Empty result
/// means no ordering at all has linear quotients.
std::optional<OrderedIdeal> find_order(const MonomialIdeal& ideal);

/// Visits every linear-quotients ordering in the same candidate order as
/// find_order (so the first visit equals find_order's result). The visitor
/// returns false to stop early.
void for_each_valid_order(const MonomialIdeal& ideal,
                          const std::function<bool(const OrderedIdeal&)>& visit);

/// Exchange condition on minimal generators: for each generator u and each
/// variable i below max_index(u), x_i * u / x_max lies in the ideal.
bool is_stable(const MonomialIdeal& ideal);

/// Squarefree variant: only variables i with x_i not dividing u are
/// exchanged. Requires squarefree generators.
bool is_squarefree_stable(const MonomialIdeal& ideal);

/// Matroid basis exchange on exponent vectors. Requires squarefree
/// equigenerated generators.
bool is_matroidal(const MonomialIdeal& ideal);

/// For a stable ideal, the canonical order has linear quotients with
/// sets[j] = {0..max_index(u_j)-1}; returns that ordering after verifying
/// both facts against check_order (throws std::logic_error otherwise).
OrderedIdeal stable_canonical_sets(const MonomialIdeal& ideal);

/// Generator counts keyed by max variable index (0-based); absent = zero.
std::map<int, int> m_stats(const MonomialIdeal& ideal);

}  // namespace taylorres
