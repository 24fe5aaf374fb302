#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "taylorres/quotients.hpp"
#include "taylorres/taylor.hpp"

namespace taylorres {

/// Generator cap for the homology oracle (strand ranks explode as C(r, q)).
inline constexpr int kMaxOracleGenerators = 14;

/// Betti numbers of the ideal itself: beta_q counts the rank of the q-th
/// term of the minimal resolution of I (so beta_0 is the number of minimal
/// generators, not 1). Graded entries are keyed by (q, total degree) and
/// only nonzero values are stored.
struct BettiTable {
  std::vector<std::uint64_t> total;
  std::map<std::pair<int, int>, std::uint64_t> graded;

  bool operator==(const BettiTable& other) const = default;
};

/// Exact C(a, q); zero when q > a.
std::uint64_t binomial(unsigned a, unsigned q);

/// Closed form over a linear-quotients ordering:
/// beta_q = sum over positions of C(|set(u_j)|, q). Total part only.
BettiTable betti_formula(const OrderedIdeal& ordered);

/// Independent route: tensor the Taylor complex with the residue field
/// (an entry survives as its sign iff its monomial part is a unit) and
/// take exact homology ranks, totally and per total degree.
BettiTable betti_oracle(const MonomialIdeal& ideal);

/// True iff the ideal is generated in one degree d and the graded table
/// is concentrated on j = q + d. Mixed generator degrees short-circuit to
/// false without running the oracle.
bool has_linear_resolution(const MonomialIdeal& ideal);

/// Debugging refinement of the oracle: homology dimensions keyed by
/// (q, multidegree exponents); summing one total degree recovers the
/// graded table.
std::map<std::pair<int, std::vector<int>>, std::uint64_t>
betti_oracle_multigraded(const MonomialIdeal& ideal);

}  // namespace taylorres
