#pragma once

#include <optional>
#include <vector>

#include "taylorres/monomial.hpp"

namespace taylorres {

/// A monomial ideal held by its minimal generators in canonical order
/// (degree ascending, revlex descending within a degree), so equality of
/// ideals is sequence equality. The zero ideal (no generators) exists only
/// as the colon of an empty prefix; minimalize() never produces it.
class MonomialIdeal {
public:
  static MonomialIdeal zero(int vars);

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }

  /// Membership: some generator divides w.
  bool contains(const Monomial& w) const;

  bool operator==(const MonomialIdeal& other) const = default;

private:
  MonomialIdeal(int vars, std::vector<Monomial> gens)
      : vars_(vars), gens_(std::move(gens)) {}

  int vars_;
  std::vector<Monomial> gens_;

  friend MonomialIdeal minimalize(const std::vector<Monomial>& gens);
};

/// Canonicalize a nonempty generating set: drop duplicates, drop any
/// generator divisible by another, sort canonically. Rejects the unit
/// monomial (the ideal would be the whole ring) and empty input.
MonomialIdeal minimalize(const std::vector<Monomial>& gens);

/// True iff nonempty, unit-free, duplicate-free and pairwise non-dividing.
bool is_minimal_generating_set(const std::vector<Monomial>& gens);

/// Common generator degree when the ideal is equigenerated, else empty.
std::optional<int> common_degree(const MonomialIdeal& ideal);

bool all_squarefree(const MonomialIdeal& ideal);

}  // namespace taylorres
