#include "taylorres/betti.hpp"

#include <algorithm>
#include <stdexcept>

#include "taylorres/rank.hpp"

namespace taylorres {

std::uint64_t binomial(unsigned a, unsigned q) {
  if (q > a) return 0;
  q = std::min(q, a - q);
  unsigned __int128 result = 1;
  for (unsigned i = 1; i <= q; ++i) {
    result = result * (a - q + i) / i;
    if (result > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

BettiTable betti_formula(const OrderedIdeal& ordered) {
  const std::size_t r = ordered.order.size();
  BettiTable table;
  table.total.assign(r, 0);
  for (const auto& set : ordered.sets)
    for (std::size_t q = 0; q < r; ++q)
      table.total[q] += binomial(static_cast<unsigned>(set.size()),
                                 static_cast<unsigned>(q));
  return table;
}

namespace {

void require_oracle_envelope(const MonomialIdeal& ideal) {
  if (ideal.generator_count() > kMaxOracleGenerators)
    throw EnvelopeError("generator count " +
                        std::to_string(ideal.generator_count()) +
                        " exceeds the homology oracle envelope of " +
                        std::to_string(kMaxOracleGenerators));
}

template <typename Key>
struct Slice {
  std::vector<int> positions;                 // strand positions in this slice
  std::map<std::uint32_t, int> local_index;   // basis mask -> local row
};

/// Strand positions grouped by a key of the multidegree. Surviving
/// (unit-part) entries never leave a slice, so each key carries an
/// independent complex of K-vector spaces.
template <typename Key, typename KeyFn>
std::map<Key, Slice<Key>> slice_strand(const TaylorStrand& strand, KeyFn key_of) {
  std::map<Key, Slice<Key>> slices;
  for (std::size_t p = 0; p < strand.basis.size(); ++p) {
    Slice<Key>& slice = slices[key_of(strand.multidegrees[p])];
    slice.local_index[strand.basis[p]] = static_cast<int>(slice.positions.size());
    slice.positions.push_back(static_cast<int>(p));
  }
  return slices;
}

template <typename Key, typename KeyFn>
std::map<std::pair<int, Key>, std::uint64_t> sliced_homology(
    const TaylorComplex& complex, KeyFn key_of) {
  const int r = complex.generator_count();
  std::vector<std::map<Key, Slice<Key>>> slices;
  slices.reserve(static_cast<std::size_t>(r));
  for (int q = 0; q < r; ++q)
    slices.push_back(slice_strand<Key>(complex.strand(q), key_of));

  std::map<std::pair<int, Key>, std::size_t> ranks;
  for (int q = 1; q < r; ++q) {
    const TaylorStrand& strand = complex.strand(q);
    for (const auto& [key, cols] : slices[static_cast<std::size_t>(q)]) {
      const auto rows_it = slices[static_cast<std::size_t>(q - 1)].find(key);
      if (rows_it == slices[static_cast<std::size_t>(q - 1)].end()) {
        ranks[{q, key}] = 0;
        continue;
      }
      const Slice<Key>& rows = rows_it->second;
      DenseMatrix m(rows.positions.size(), cols.positions.size());
      for (std::size_t c = 0; c < cols.positions.size(); ++c) {
        const auto& column =
            strand.columns[static_cast<std::size_t>(cols.positions[c])];
        for (const TaylorEntry& e : column) {
          if (!e.part.is_unit()) continue;
          m.at(static_cast<std::size_t>(rows.local_index.at(e.row_mask)), c) =
              e.sign;
        }
      }
      ranks[{q, key}] = exact_rank(std::move(m));
    }
  }

  auto rank_at = [&](int q, const Key& key) -> std::size_t {
    const auto it = ranks.find({q, key});
    return it == ranks.end() ? 0 : it->second;
  };
  std::map<std::pair<int, Key>, std::uint64_t> homology;
  for (int q = 0; q < r; ++q) {
    for (const auto& [key, slice] : slices[static_cast<std::size_t>(q)]) {
      const long long dim = static_cast<long long>(slice.positions.size()) -
                            static_cast<long long>(rank_at(q, key)) -
                            static_cast<long long>(rank_at(q + 1, key));
      if (dim < 0) throw std::logic_error("negative sliced homology dimension");
      if (dim > 0) homology[{q, key}] = static_cast<std::uint64_t>(dim);
    }
  }
  return homology;
}

}  // namespace

BettiTable betti_oracle(const MonomialIdeal& ideal) {
  require_oracle_envelope(ideal);
  const int r = ideal.generator_count();
  const TaylorComplex complex(ideal.generators());

  // Full matrices of the tensored complex: rank of each d_q over K.
  std::vector<std::size_t> rank_full(static_cast<std::size_t>(r) + 1, 0);
  for (int q = 1; q < r; ++q) {
    const TaylorStrand& strand = complex.strand(q);
    DenseMatrix m(complex.rank(q - 1), complex.rank(q));
    for (std::size_t c = 0; c < strand.columns.size(); ++c)
      for (const TaylorEntry& e : strand.columns[c])
        if (e.part.is_unit())
          m.at(complex.basis_index(q - 1, e.row_mask), c) = e.sign;
    rank_full[static_cast<std::size_t>(q)] = exact_rank(std::move(m));
  }

  BettiTable table;
  table.total.assign(static_cast<std::size_t>(r), 0);
  for (int q = 0; q < r; ++q) {
    const long long dim =
        static_cast<long long>(complex.rank(q)) -
        static_cast<long long>(rank_full[static_cast<std::size_t>(q)]) -
        static_cast<long long>(rank_full[static_cast<std::size_t>(q) + 1]);
    if (dim < 0) throw std::logic_error("negative homology dimension");
    table.total[static_cast<std::size_t>(q)] = static_cast<std::uint64_t>(dim);
  }

  table.graded = sliced_homology<int>(
      complex, [](const Monomial& m) { return m.degree(); });
  return table;
}

std::map<std::pair<int, std::vector<int>>, std::uint64_t>
betti_oracle_multigraded(const MonomialIdeal& ideal) {
  require_oracle_envelope(ideal);
  const TaylorComplex complex(ideal.generators());
  return sliced_homology<std::vector<int>>(
      complex, [](const Monomial& m) { return m.exponents(); });
}

bool has_linear_resolution(const MonomialIdeal& ideal) {
  const auto d = common_degree(ideal);
  if (!d) return false;
  const BettiTable table = betti_oracle(ideal);
  for (const auto& [key, value] : table.graded) {
    if (value == 0) continue;
    if (key.second != key.first + *d) return false;
  }
  return true;
}

}  // namespace taylorres
