#include "taylorres/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "taylorres/text.hpp"

namespace taylorres {

namespace {

void require_permutation(const MonomialIdeal& ideal, const std::vector<int>& order) {
  const std::size_t r = ideal.generators().size();
  if (order.size() != r)
    throw std::invalid_argument("order length does not match generator count");
  std::vector<bool> seen(r, false);
  for (int i : order) {
    if (i < 0 || static_cast<std::size_t>(i) >= r || seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("order is not a permutation of the generators");
    seen[static_cast<std::size_t>(i)] = true;
  }
}

/// Variable indices when every generator is a variable, else empty.
std::optional<std::vector<int>> as_variable_set(const MonomialIdeal& colon) {
  std::vector<int> vars;
  for (const Monomial& g : colon.generators()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(*g.max_index());
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

Monomial exchange(const Monomial& u, int add, int remove) {
  std::vector<int> e = u.exponents();
  e[static_cast<std::size_t>(add)] += 1;
  e[static_cast<std::size_t>(remove)] -= 1;
  return Monomial(std::move(e));
}

}  // namespace

std::vector<int> OrderedIdeal::set_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(sets.size());
  for (const auto& s : sets) sizes.push_back(static_cast<int>(s.size()));
  return sizes;
}

MonomialIdeal prefix_colon_gens(std::span<const Monomial> prefix, const Monomial& u) {
  if (prefix.empty()) return MonomialIdeal::zero(u.vars());
  std::vector<Monomial> colons;
  colons.reserve(prefix.size());
  for (const Monomial& p : prefix) {
    Monomial c = colon(p, u);
    if (c.is_unit())
      throw std::invalid_argument("colon target is divisible by a prefix generator");
    colons.push_back(std::move(c));
  }
  return minimalize(colons);
}

OrderCheckResult check_order(const MonomialIdeal& ideal, const std::vector<int>& order) {
  require_permutation(ideal, order);
  const auto& gens = ideal.generators();
  std::vector<Monomial> prefix;
  std::vector<std::vector<int>> sets;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Monomial& u = gens[static_cast<std::size_t>(order[j])];
    const MonomialIdeal colon_ideal = prefix_colon_gens(prefix, u);
    auto vars = as_variable_set(colon_ideal);
    if (!vars) {
      const auto& cg = colon_ideal.generators();
      const auto bad = std::find_if(cg.begin(), cg.end(),
                                    [](const Monomial& g) { return g.degree() != 1; });
      return {std::nullopt, static_cast<int>(j), *bad};
    }
    if (vars->size() > j)
      throw std::logic_error("prefix colon has more generators than prefix elements");
    sets.push_back(std::move(*vars));
    prefix.push_back(u);
  }
  return {OrderedIdeal{ideal, order, std::move(sets)}, -1, std::nullopt};
}

namespace {

struct OrderSearch {
  const std::vector<Monomial>& gens;
  std::vector<int> chosen;
  std::vector<Monomial> prefix;
  std::vector<std::vector<int>> sets;
  std::unordered_set<std::uint32_t> dead;

  explicit OrderSearch(const MonomialIdeal& ideal) : gens(ideal.generators()) {}

  /// Variable set of (prefix) : gens[candidate], or empty on failure.
  std::optional<std::vector<int>> admissible(int candidate) const {
    return as_variable_set(
        prefix_colon_gens(prefix, gens[static_cast<std::size_t>(candidate)]));
  }

  bool dfs(std::uint32_t used) {
    if (chosen.size() == gens.size()) return true;
    if (dead.contains(used)) return false;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
      if (used & (1u << i)) continue;
      auto vars = admissible(i);
      if (!vars) continue;
      chosen.push_back(i);
      prefix.push_back(gens[static_cast<std::size_t>(i)]);
      sets.push_back(std::move(*vars));
      if (dfs(used | (1u << i))) return true;
      chosen.pop_back();
      prefix.pop_back();
      sets.pop_back();
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

std::optional<OrderedIdeal> find_order(const MonomialIdeal& ideal) {
  if (ideal.generator_count() > kMaxSearchGenerators)
    throw EnvelopeError("generator count " +
                        std::to_string(ideal.generator_count()) +
                        " exceeds the order search envelope of " +
                        std::to_string(kMaxSearchGenerators));
  OrderSearch search(ideal);
  if (!search.dfs(0)) return std::nullopt;
  return OrderedIdeal{ideal, std::move(search.chosen), std::move(search.sets)};
}

void for_each_valid_order(const MonomialIdeal& ideal,
                          const std::function<bool(const OrderedIdeal&)>& visit) {
  const int r = ideal.generator_count();
  if (r > kMaxOrderEnumeration)
    throw EnvelopeError("generator count " + std::to_string(r) +
                        " exceeds the order enumeration envelope of " +
                        std::to_string(kMaxOrderEnumeration));
  const auto& gens = ideal.generators();

  // Colon sets depend only on the prefix as a set, so memoize per mask.
  std::map<std::pair<std::uint32_t, int>, std::optional<std::vector<int>>> memo;
  std::vector<int> chosen;
  std::vector<Monomial> prefix;
  std::vector<std::vector<int>> sets;
  bool stop = false;

  auto step = [&](auto&& self, std::uint32_t used) -> void {
    if (stop) return;
    if (chosen.size() == gens.size()) {
      if (!visit(OrderedIdeal{ideal, chosen, sets})) stop = true;
      return;
    }
    for (int i = 0; i < r && !stop; ++i) {
      if (used & (1u << i)) continue;
      auto key = std::make_pair(used, i);
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::optional<std::vector<int>> vars;
        const MonomialIdeal colon_ideal =
            prefix_colon_gens(prefix, gens[static_cast<std::size_t>(i)]);
        vars = as_variable_set(colon_ideal);
        it = memo.emplace(key, std::move(vars)).first;
      }
      if (!it->second) continue;
      chosen.push_back(i);
      prefix.push_back(gens[static_cast<std::size_t>(i)]);
      sets.push_back(*it->second);
      self(self, used | (1u << i));
      chosen.pop_back();
      prefix.pop_back();
      sets.pop_back();
    }
  };
  step(step, 0);
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.generators()) {
    const int m = *u.max_index();
    for (int i = 0; i < m; ++i)
      if (!ideal.contains(exchange(u, i, m))) return false;
  }
  return true;
}

bool is_squarefree_stable(const MonomialIdeal& ideal) {
  if (!all_squarefree(ideal))
    throw std::invalid_argument("squarefree stability needs squarefree generators");
  for (const Monomial& u : ideal.generators()) {
    const int m = *u.max_index();
    for (int i = 0; i < m; ++i) {
      if (u.exponent(i) > 0) continue;
      if (!ideal.contains(exchange(u, i, m))) return false;
    }
  }
  return true;
}

bool is_matroidal(const MonomialIdeal& ideal) {
  if (!all_squarefree(ideal))
    throw std::invalid_argument("matroidal test needs squarefree generators");
  if (!common_degree(ideal))
    throw std::invalid_argument("matroidal test needs equigenerated input");
  const auto& gens = ideal.generators();
  for (const Monomial& u : gens) {
    for (const Monomial& v : gens) {
      for (int i = 0; i < ideal.vars(); ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        bool exchanged = false;
        for (int j = 0; j < ideal.vars() && !exchanged; ++j) {
          if (u.exponent(j) >= v.exponent(j)) continue;
          const Monomial candidate = exchange(u, j, i);
          exchanged = std::find(gens.begin(), gens.end(), candidate) != gens.end();
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

OrderedIdeal stable_canonical_sets(const MonomialIdeal& ideal) {
  if (!is_stable(ideal))
    throw std::invalid_argument("stable_canonical_sets needs a stable ideal");
  std::vector<int> identity(ideal.generators().size());
  std::iota(identity.begin(), identity.end(), 0);
  OrderCheckResult checked = check_order(ideal, identity);
  if (!checked.ok())
    throw std::logic_error(
        "canonical order of the stable ideal " + to_text(ideal) +
        " lacks linear quotients at position " +
        std::to_string(checked.fail_position + 1));
  for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
    const int m = *ideal.generators()[j].max_index();
    std::vector<int> expected(static_cast<std::size_t>(m));
    std::iota(expected.begin(), expected.end(), 0);
    if (checked.ordered->sets[j] != expected)
      throw std::logic_error("stable ideal " + to_text(ideal) +
                             " has unexpected colon set at position " +
                             std::to_string(j + 1));
  }
  return std::move(*checked.ordered);
}

std::map<int, int> m_stats(const MonomialIdeal& ideal) {
  std::map<int, int> counts;
  for (const Monomial& u : ideal.generators()) counts[*u.max_index()] += 1;
  return counts;
}

}  // namespace taylorres
