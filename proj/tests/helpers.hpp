#pragma once

#include <random>
#include <string>
#include <vector>

#include "taylorres/text.hpp"

namespace test_helpers {

inline taylorres::Monomial M(const std::string& text, int vars) {
  return taylorres::parse_monomial(text, vars);
}

inline taylorres::MonomialIdeal I(const std::string& text, int vars) {
  return taylorres::parse_ideal(text, vars).ideal;
}

inline taylorres::Monomial random_monomial(std::mt19937& rng, int vars, int max_exp) {
  std::uniform_int_distribution<int> dist(0, max_exp);
  std::vector<int> exps(static_cast<std::size_t>(vars));
  for (int& e : exps) e = dist(rng);
  return taylorres::Monomial(exps);
}

inline taylorres::Monomial random_nonunit(std::mt19937& rng, int vars, int max_exp) {
  while (true) {
    taylorres::Monomial m = random_monomial(rng, vars, max_exp);
    if (!m.is_unit()) return m;
  }
}

}  // namespace test_helpers
