#pragma once

#include <optional>
#include <vector>

#include "taylorres/errors.hpp"

namespace taylorres {

/// Supported ambient variable count. Dense exponent vectors stay cheap at
/// this size and every operation is branch-free over them.
inline constexpr int kMaxVariables = 16;

/// A monomial in a fixed ambient ring K[x1..xn], stored as a dense exponent
/// vector. The ambient variable count is the vector length. Variable indices
/// are 0-based throughout the C++ API; text I/O and the CLI are 1-based
/// (index 0 prints as "x1").
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int vars);
  static Monomial variable(int vars, int index);

  int vars() const { return static_cast<int>(exps_.size()); }
  int exponent(int index) const { return exps_[static_cast<std::size_t>(index)]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// Total degree (sum of exponents); 0 exactly for the unit monomial.
  int degree() const;
  bool is_unit() const { return degree() == 0; }
  bool is_squarefree() const;

  /// Largest variable index dividing the monomial; empty for the unit.
  std::optional<int> max_index() const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

private:
  std::vector<int> exps_;
};

bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);

/// Generator of the principal colon ideal (u) : v, i.e. u / gcd(u, v).
Monomial colon(const Monomial& u, const Monomial& v);

/// u > v in reverse-lexicographic order: the last nonzero entry of
/// exponents(u) - exponents(v) is negative.
bool revlex_greater(const Monomial& u, const Monomial& v);

/// Generator order used everywhere: degree ascending, then revlex
/// descending among equal degrees.
bool canonical_less(const Monomial& u, const Monomial& v);

namespace detail {
void require_same_ambient(const Monomial& u, const Monomial& v);
}

}  // namespace taylorres
