#include "taylorres/taylor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace taylorres {

namespace {

void require_buildable(const std::vector<Monomial>& gens) {
  if (!is_minimal_generating_set(gens))
    throw std::invalid_argument("generators are not a minimal generating set");
  if (gens.size() > static_cast<std::size_t>(kMaxTaylorGenerators))
    throw EnvelopeError("generator count " + std::to_string(gens.size()) +
                        " exceeds the Taylor complex envelope of " +
                        std::to_string(kMaxTaylorGenerators));
}

Monomial quotient(const Monomial& num, const Monomial& den) {
  std::vector<int> e(static_cast<std::size_t>(num.vars()));
  for (int k = 0; k < num.vars(); ++k)
    e[static_cast<std::size_t>(k)] = num.exponent(k) - den.exponent(k);
  return Monomial(std::move(e));
}

}  // namespace

std::vector<Monomial> subset_lcms(const std::vector<Monomial>& gens) {
  const int r = static_cast<int>(gens.size());
  const std::uint32_t full = (1u << r) - 1;
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(full) + 1);
  out.push_back(Monomial::unit(gens.front().vars()));
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const int bit = std::countr_zero(low);
    if (mask == low)
      out.push_back(gens[static_cast<std::size_t>(bit)]);
    else
      out.push_back(lcm(out[mask ^ low], gens[static_cast<std::size_t>(bit)]));
  }
  return out;
}

TaylorComplex::TaylorComplex(std::vector<Monomial> ordered_gens)
    : gens_(std::move(ordered_gens)) {
  require_buildable(gens_);
  const int r = generator_count();
  const std::vector<Monomial> lcms = subset_lcms(gens_);

  strands_.resize(static_cast<std::size_t>(r));
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    const int q = std::popcount(mask) - 1;
    TaylorStrand& strand = strands_[static_cast<std::size_t>(q)];
    strand.basis.push_back(mask);
    strand.multidegrees.push_back(lcms[mask]);
  }
  for (int q = 1; q < r; ++q) {
    TaylorStrand& strand = strands_[static_cast<std::size_t>(q)];
    strand.columns.resize(strand.basis.size());
    for (std::size_t c = 0; c < strand.basis.size(); ++c) {
      const std::uint32_t mask = strand.basis[c];
      int position = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1, ++position) {
        const std::uint32_t low = rest & (~rest + 1);
        const std::uint32_t row = mask ^ low;
        strand.columns[c].push_back(TaylorEntry{
            row, (position % 2 == 0) ? +1 : -1, quotient(lcms[mask], lcms[row])});
      }
    }
  }
}

std::size_t TaylorComplex::basis_index(int q, std::uint32_t mask) const {
  const TaylorStrand& s = strand(q);
  const auto it = std::lower_bound(s.basis.begin(), s.basis.end(), mask);
  if (it == s.basis.end() || *it != mask)
    throw std::invalid_argument("subset is not in strand basis");
  return static_cast<std::size_t>(it - s.basis.begin());
}

TaylorComplex build_taylor(std::vector<Monomial> ordered_gens) {
  return TaylorComplex(std::move(ordered_gens));
}

bool verify_complex(const TaylorComplex& complex) {
  const int r = complex.generator_count();
  // Augmentation: each d_1 column maps to sum sign * part * u_row = 0.
  if (r >= 2) {
    for (const auto& column : complex.strand(1).columns) {
      std::map<std::vector<int>, long long> acc;
      for (const TaylorEntry& e : column) {
        const int gen = std::countr_zero(e.row_mask);
        const Monomial term = e.part * complex.generators()[static_cast<std::size_t>(gen)];
        acc[term.exponents()] += e.sign;
      }
      for (const auto& [unused, coeff] : acc)
        if (coeff != 0) return false;
    }
  }
  // d_{q-1} . d_q = 0, entry by entry over signed monomials.
  for (int q = 2; q < r; ++q) {
    const TaylorStrand& upper = complex.strand(q);
    const TaylorStrand& lower = complex.strand(q - 1);
    for (const auto& column : upper.columns) {
      std::map<std::pair<std::uint32_t, std::vector<int>>, long long> acc;
      for (const TaylorEntry& mid : column) {
        const std::size_t mid_index = complex.basis_index(q - 1, mid.row_mask);
        for (const TaylorEntry& low : lower.columns[mid_index]) {
          const Monomial part = mid.part * low.part;
          acc[{low.row_mask, part.exponents()}] +=
              static_cast<long long>(mid.sign) * low.sign;
        }
      }
      for (const auto& [unused, coeff] : acc)
        if (coeff != 0) return false;
    }
  }
  return true;
}

bool is_minimal(const TaylorComplex& complex) {
  for (const TaylorStrand& strand : complex.strands())
    for (const auto& column : strand.columns)
      for (const TaylorEntry& e : column)
        if (e.part.is_unit()) return false;
  return true;
}

bool is_minimal_subset_test(const std::vector<Monomial>& gens) {
  require_buildable(gens);
  const int r = static_cast<int>(gens.size());
  const std::vector<Monomial> lcms = subset_lcms(gens);
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    if (std::popcount(mask) < 2) continue;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::uint32_t low = rest & (~rest + 1);
      if (lcms[mask ^ low] == lcms[mask]) return false;
    }
  }
  return true;
}

}  // namespace taylorres
