#include "taylorres/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace taylorres {

namespace {

constexpr long kMaxExponent = 1000000;

class Scanner {
public:
  Scanner(std::string_view text, int vars) : text_(text), vars_(vars) {
    if (vars < 1)
      throw std::invalid_argument("ambient variable count must be positive");
    if (vars > kMaxVariables)
      throw EnvelopeError("ambient variable count " + std::to_string(vars) +
                          " exceeds the supported maximum of " +
                          std::to_string(kMaxVariables));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long parse_number(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(std::string("expected ") + what, pos_);
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent)
        throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    return value;
  }

  /// One monomial: "1" or x<k>[^<e>] ('*' x<k>[^<e>])*.
  Monomial parse_monomial() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("expected a monomial", pos_);
    std::vector<int> exps(static_cast<std::size_t>(vars_), 0);
    if (text_[pos_] == '1') {
      ++pos_;
      return Monomial(std::move(exps));
    }
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != 'x')
        throw ParseError("expected a variable like x1", pos_);
      const std::size_t var_pos = pos_;
      ++pos_;
      const long k = parse_number("variable index");
      if (k < 1 || k > vars_)
        throw ParseError("variable index " + std::to_string(k) +
                             " out of range 1.." + std::to_string(vars_),
                         var_pos);
      long e = 1;
      if (consume('^')) e = parse_number("exponent");
      exps[static_cast<std::size_t>(k - 1)] += static_cast<int>(e);
      if (exps[static_cast<std::size_t>(k - 1)] > kMaxExponent)
        throw ParseError("exponent too large", var_pos);
      if (!consume('*')) break;
    }
    return Monomial(std::move(exps));
  }

private:
  std::string_view text_;
  int vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text, int vars) {
  Scanner sc(text, vars);
  Monomial m = sc.parse_monomial();
  if (!sc.at_end())
    throw ParseError("unexpected trailing input", sc.pos());
  return m;
}

ParsedIdeal parse_ideal(std::string_view text, int vars) {
  Scanner sc(text, vars);
  std::vector<Monomial> gens;
  std::vector<std::size_t> positions;
  while (true) {
    sc.skip_ws();
    positions.push_back(sc.pos());
    gens.push_back(sc.parse_monomial());
    if (gens.back().is_unit())
      throw ParseError("the unit monomial cannot generate a proper ideal",
                       positions.back());
    if (!sc.consume(',')) break;
  }
  if (!sc.at_end())
    throw ParseError("unexpected trailing input", sc.pos());

  MonomialIdeal ideal = minimalize(gens);
  std::vector<std::string> warnings;
  std::vector<bool> used(gens.size(), false);
  for (const Monomial& g : ideal.generators()) {
    auto it = std::find(gens.begin(), gens.end(), g);
    used[static_cast<std::size_t>(it - gens.begin())] = true;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (used[i]) continue;
    std::string reason = "duplicate";
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && gens[j] != gens[i] && divides(gens[j], gens[i])) {
        reason = "divisible by " + to_text(gens[j]);
        break;
      }
    }
    warnings.push_back("dropped " + to_text(gens[i]) + ": " + reason);
  }
  return {std::move(ideal), std::move(warnings)};
}

std::string to_text(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < m.vars(); ++k) {
    const int e = m.exponent(k);
    if (e == 0) continue;
    if (!first) out << '*';
    out << 'x' << (k + 1);
    if (e >= 2) out << '^' << e;
    first = false;
  }
  return out.str();
}

std::string to_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out << ", ";
    out << to_text(ideal.generators()[i]);
  }
  return out.str();
}

}  // namespace taylorres
