#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "taylorres/ideal.hpp"

namespace taylorres {

/// Text grammar (the single parse/print format of the CLI and fixtures):
///   monomial: "1" | factor ("*" factor)*      factor: "x"<k> ["^"<e>]
///   ideal:    monomial ("," monomial)*
/// Whitespace is ignored; variables are 1-indexed: "x1^2*x2, x1*x3".
Monomial parse_monomial(std::string_view text, int vars);

struct ParsedIdeal {
  MonomialIdeal ideal;
  /// One entry per input generator dropped during minimalization.
  std::vector<std::string> warnings;
};

ParsedIdeal parse_ideal(std::string_view text, int vars);

std::string to_text(const Monomial& m);
std::string to_text(const MonomialIdeal& ideal);

}  // namespace taylorres
