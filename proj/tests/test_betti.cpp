#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "taylorres/betti.hpp"
#include "taylorres/enumerate.hpp"

using namespace taylorres;
using test_helpers::I;
using test_helpers::M;

namespace {

std::uint64_t graded_at(const BettiTable& table, int q, int degree) {
  const auto it = table.graded.find({q, degree});
  return it == table.graded.end() ? 0 : it->second;
}

MonomialIdeal scaled_variable_ideal(int vars, const Monomial& factor, int count) {
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i)
    gens.push_back(factor * Monomial::variable(vars, i));
  return minimalize(gens);
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(20, 10) == 184756);
  for (unsigned a = 1; a < 25; ++a)
    for (unsigned q = 1; q <= a; ++q)
      CHECK(binomial(a, q) == binomial(a - 1, q - 1) + binomial(a - 1, q));
}

TEST_CASE("closed formula from colon set sizes") {
  const auto staircase = find_order(I("x1^2, x1*x2, x1*x3", 3));
  REQUIRE(staircase.has_value());
  CHECK(staircase->set_sizes() == std::vector<int>{0, 1, 2});
  CHECK(betti_formula(*staircase).total == std::vector<std::uint64_t>{3, 3, 1});

  const auto triangle = find_order(I("x1*x2, x2*x3, x1*x3", 3));
  REQUIRE(triangle.has_value());
  CHECK(betti_formula(*triangle).total == std::vector<std::uint64_t>{3, 2, 0});

  const auto single = find_order(I("x1^2*x2", 2));
  REQUIRE(single.has_value());
  CHECK(betti_formula(*single).total == std::vector<std::uint64_t>{1});
}

TEST_CASE("homology oracle on pinned examples") {
  const BettiTable koszul = betti_oracle(I("x1, x2", 2));
  CHECK(koszul.total == std::vector<std::uint64_t>{2, 1});
  CHECK(graded_at(koszul, 0, 1) == 2);
  CHECK(graded_at(koszul, 1, 2) == 1);
  CHECK(koszul.graded.size() == 2);

  const BettiTable triangle = betti_oracle(I("x1*x2, x2*x3, x1*x3", 3));
  CHECK(triangle.total == std::vector<std::uint64_t>{3, 2, 0});
  CHECK(graded_at(triangle, 0, 2) == 3);
  CHECK(graded_at(triangle, 1, 3) == 2);
  CHECK(triangle.graded.size() == 2);

  const BettiTable mixed = betti_oracle(I("x1^2, x1*x2", 2));
  CHECK(mixed.total == std::vector<std::uint64_t>{2, 1});
  CHECK(graded_at(mixed, 0, 2) == 2);
  CHECK(graded_at(mixed, 1, 3) == 1);
}

TEST_CASE("minimal Taylor complexes have full binomial totals") {
  for (int r = 1; r <= 4; ++r) {
    const MonomialIdeal ideal = scaled_variable_ideal(4, M("x1", 4), r);
    REQUIRE(is_minimal_subset_test(ideal.generators()));
    const BettiTable oracle = betti_oracle(ideal);
    for (int q = 0; q < r; ++q)
      CHECK(oracle.total[static_cast<std::size_t>(q)] ==
            binomial(static_cast<unsigned>(r), static_cast<unsigned>(q) + 1));
  }
}

TEST_CASE("stream: Taylor bound, formula agreement, graded consistency") {
  EnumerationParams params;
  params.vars = 3;
  params.max_deg = 2;
  params.max_gens = 4;
  std::uint64_t with_order = 0;
  for_each_ideal(params, [&](const MonomialIdeal& ideal) {
    const int r = ideal.generator_count();
    const BettiTable oracle = betti_oracle(ideal);
    const bool minimal = is_minimal_subset_test(ideal.generators());

    bool all_equal = true;
    for (int q = 0; q < r; ++q) {
      const std::uint64_t bound =
          binomial(static_cast<unsigned>(r), static_cast<unsigned>(q) + 1);
      CHECK(oracle.total[static_cast<std::size_t>(q)] <= bound);
      if (oracle.total[static_cast<std::size_t>(q)] != bound) all_equal = false;
    }
    CHECK(all_equal == minimal);

    std::map<int, std::uint64_t> sums;
    for (const auto& [key, value] : oracle.graded) sums[key.first] += value;
    for (int q = 0; q < r; ++q) {
      const auto it = sums.find(q);
      const std::uint64_t sum = it == sums.end() ? 0 : it->second;
      CHECK(sum == oracle.total[static_cast<std::size_t>(q)]);
    }

    if (const auto ordered = find_order(ideal)) {
      ++with_order;
      CHECK(betti_formula(*ordered).total == oracle.total);
    }
    return true;
  });
  CHECK(with_order == 65);
}

TEST_CASE("stable stream recovers the max-index formula") {
  EnumerationParams params;
  params.vars = 3;
  params.max_deg = 3;
  params.max_gens = 4;
  params.family = Family::Stable;
  for_each_ideal(params, [&](const MonomialIdeal& ideal) {
    const int r = ideal.generator_count();
    const BettiTable oracle = betti_oracle(ideal);
    for (int q = 0; q < r; ++q) {
      std::uint64_t expected = 0;
      for (const Monomial& u : ideal.generators())
        expected += binomial(static_cast<unsigned>(*u.max_index()),
                             static_cast<unsigned>(q));
      CHECK(oracle.total[static_cast<std::size_t>(q)] == expected);
    }
    return true;
  });
}

TEST_CASE("routes agree on all squarefree pairs in five variables") {
  std::vector<Monomial> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      pairs.push_back(Monomial::variable(5, i) * Monomial::variable(5, j));
  const MonomialIdeal ideal = minimalize(pairs);
  REQUIRE(ideal.generator_count() == 10);
  const auto ordered = find_order(ideal);
  REQUIRE(ordered.has_value());
  const BettiTable formula = betti_formula(*ordered);
  const BettiTable oracle = betti_oracle(ideal);
  CHECK(formula.total == oracle.total);
  CHECK(oracle.total[0] == 10);
  CHECK(oracle.total[1] == 20);
  CHECK(oracle.total[2] == 15);
  CHECK(oracle.total[3] == 4);
  CHECK(has_linear_resolution(ideal));
}

TEST_CASE("multigraded refinement sums to the graded table") {
  const MonomialIdeal triangle = I("x1*x2, x2*x3, x1*x3", 3);
  const auto fine = betti_oracle_multigraded(triangle);
  CHECK(fine.at({0, {1, 1, 0}}) == 1);
  CHECK(fine.at({0, {0, 1, 1}}) == 1);
  CHECK(fine.at({0, {1, 0, 1}}) == 1);
  CHECK(fine.at({1, {1, 1, 1}}) == 2);
  CHECK(fine.size() == 4);

  EnumerationParams params;
  params.vars = 2;
  params.max_deg = 2;
  params.max_gens = 3;
  for_each_ideal(params, [&](const MonomialIdeal& ideal) {
    const BettiTable table = betti_oracle(ideal);
    std::map<std::pair<int, int>, std::uint64_t> coarse;
    for (const auto& [key, value] : betti_oracle_multigraded(ideal)) {
      int degree = 0;
      for (int e : key.second) degree += e;
      coarse[{key.first, degree}] += value;
    }
    CHECK(coarse == table.graded);
    return true;
  });
}

TEST_CASE("linear resolution") {
  CHECK(has_linear_resolution(I("x1*x3, x2*x3", 3)));
  CHECK(has_linear_resolution(I("x1*x2, x2*x3, x1*x3", 3)));
  CHECK_FALSE(has_linear_resolution(I("x1^2, x1*x2, x2^3", 2)));
  CHECK(has_linear_resolution(I("x1^2, x1*x2", 2)));
  CHECK(has_linear_resolution(I("x1^2, x1*x2, x2^2", 2)));
  // Two disjoint squarefree generators: the syzygy lives in degree 4.
  CHECK_FALSE(has_linear_resolution(I("x1*x2, x3*x4", 4)));
}

TEST_CASE("oracle envelope") {
  std::vector<Monomial> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      pairs.push_back(Monomial::variable(6, i) * Monomial::variable(6, j));
  const MonomialIdeal big = minimalize(pairs);
  REQUIRE(big.generator_count() == 15);
  CHECK_THROWS_AS(betti_oracle(big), EnvelopeError);
  CHECK_THROWS_AS(has_linear_resolution(big), EnvelopeError);
}
