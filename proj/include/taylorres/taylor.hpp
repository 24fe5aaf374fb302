#pragma once

#include <cstdint>
#include <vector>

#include "taylorres/ideal.hpp"

namespace taylorres {

/// Subset size cap for complex construction: the basis has 2^r elements.
inline constexpr int kMaxTaylorGenerators = 20;

/// One nonzero differential entry: a signed monomial at row `row_mask`
/// of the strand below.
struct TaylorEntry {
  std::uint32_t row_mask;
  int sign;       // +1 or -1
  Monomial part;  // lcm(column subset) / lcm(row subset)
};

/// Strand q: all (q+1)-subsets of the generator indices. Subsets are
/// bitmasks over the generators (bit k = generator k, 0-based) and the
/// basis is ordered by the integer value of the bitmask, which fixes the
/// matrix layout of every differential.
struct TaylorStrand {
  std::vector<std::uint32_t> basis;
  std::vector<Monomial> multidegrees;              // lcm per basis subset
  std::vector<std::vector<TaylorEntry>> columns;   // empty for strand 0
};

/// The Taylor complex of an ordered minimal generating set. The column of
/// d_q at subset s carries, for each member dropped at sorted position p,
/// the entry sign (-1)^p and monomial lcm(s)/lcm(s minus that member).
class TaylorComplex {
public:
  explicit TaylorComplex(std::vector<Monomial> ordered_gens);

  int generator_count() const { return static_cast<int>(gens_.size()); }
  int vars() const { return gens_.front().vars(); }
  const std::vector<Monomial>& generators() const { return gens_; }

  int strand_count() const { return static_cast<int>(strands_.size()); }
  const TaylorStrand& strand(int q) const {
    return strands_[static_cast<std::size_t>(q)];
  }
  std::size_t rank(int q) const { return strand(q).basis.size(); }

  /// Position of a subset within strand q's basis.
  std::size_t basis_index(int q, std::uint32_t mask) const;

  /// Mutable access; exists so tests can corrupt entries deliberately.
  std::vector<TaylorStrand>& strands() { return strands_; }
  const std::vector<TaylorStrand>& strands() const { return strands_; }

private:
  std::vector<Monomial> gens_;
  std::vector<TaylorStrand> strands_;
};

TaylorComplex build_taylor(std::vector<Monomial> ordered_gens);

/// Checks d_q . d_{q+1} = 0 for all q as matrices of polynomials, and that
/// the augmentation e_i -> u_i kills the image of d_1.
bool verify_complex(const TaylorComplex& complex);

/// Minimal resolution criterion: no differential entry is a unit.
bool is_minimal(const TaylorComplex& complex);

/// Matrix-free criterion: no subset of size >= 2 keeps its lcm when one
/// member is dropped. Agrees with is_minimal(build_taylor(gens)) always.
bool is_minimal_subset_test(const std::vector<Monomial>& gens);

/// lcm of every generator subset, indexed by bitmask (index 0 = unit).
std::vector<Monomial> subset_lcms(const std::vector<Monomial>& gens);

}  // namespace taylorres
