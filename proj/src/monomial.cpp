#include "taylorres/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace taylorres {

namespace detail {

void require_same_ambient(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars())
    throw std::invalid_argument("ambient variable counts differ (" +
                                std::to_string(u.vars()) + " vs " +
                                std::to_string(v.vars()) + ")");
}

}  // namespace detail

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty())
    throw std::invalid_argument("monomial needs at least one ambient variable");
  if (vars() > kMaxVariables)
    throw EnvelopeError("ambient variable count " + std::to_string(vars()) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxVariables));
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::unit(int vars) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(vars), 0));
}

Monomial Monomial::variable(int vars, int index) {
  if (index < 0 || index >= vars)
    throw std::invalid_argument("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::optional<int> Monomial::max_index() const {
  for (int k = vars() - 1; k >= 0; --k)
    if (exps_[static_cast<std::size_t>(k)] > 0) return k;
  return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& other) const {
  detail::require_same_ambient(*this, other);
  std::vector<int> e(exps_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.exps_[k];
  return Monomial(std::move(e));
}

bool divides(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u, v);
  for (int k = 0; k < u.vars(); ++k)
    if (u.exponent(k) > v.exponent(k)) return false;
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u, v);
  std::vector<int> e(static_cast<std::size_t>(u.vars()));
  for (int k = 0; k < u.vars(); ++k)
    e[static_cast<std::size_t>(k)] = std::max(u.exponent(k), v.exponent(k));
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u, v);
  std::vector<int> e(static_cast<std::size_t>(u.vars()));
  for (int k = 0; k < u.vars(); ++k)
    e[static_cast<std::size_t>(k)] = std::min(u.exponent(k), v.exponent(k));
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u, v);
  std::vector<int> e(static_cast<std::size_t>(u.vars()));
  for (int k = 0; k < u.vars(); ++k)
    e[static_cast<std::size_t>(k)] = std::max(u.exponent(k) - v.exponent(k), 0);
  return Monomial(std::move(e));
}

bool revlex_greater(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u, v);
  for (int k = u.vars() - 1; k >= 0; --k) {
    const int d = u.exponent(k) - v.exponent(k);
    if (d != 0) return d < 0;
  }
  return false;
}

bool canonical_less(const Monomial& u, const Monomial& v) {
  const int du = u.degree(), dv = v.degree();
  if (du != dv) return du < dv;
  return revlex_greater(u, v);
}

}  // namespace taylorres
