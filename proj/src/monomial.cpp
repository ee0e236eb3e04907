#include "frobcx/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace frobcx {

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

RingContext::RingContext(int n_vars, std::int64_t characteristic)
    : n(n_vars), p(characteristic) {
  if (n < 1)
    throw InputError("ring needs at least one variable, got n=" + std::to_string(n));
  if (!is_prime(p))
    throw InputError("characteristic must be prime, got p=" + std::to_string(p));
}

Monomial::Monomial(std::vector<Exponent> exps) : exponents(std::move(exps)) {
  for (Exponent e : exponents)
    if (e < 0)
      throw InputError("monomial exponent must be non-negative, got " + std::to_string(e));
}

Monomial Monomial::one(int n) { return Monomial(std::vector<Exponent>(n, 0)); }

Monomial Monomial::variable(int n, int i) {
  std::vector<Exponent> e(n, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::all_variables(int n, Exponent k) {
  return Monomial(std::vector<Exponent>(n, k));
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](Exponent e) { return e == 0; });
}

Exponent Monomial::total_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), Exponent{0});
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < num_vars(); ++i)
    if (exponents[i] > 0) s.push_back(i);
  return s;
}

namespace {

void check_context(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw ContextMismatchError("monomials over " + std::to_string(a.num_vars()) +
                               " and " + std::to_string(b.num_vars()) + " variables");
}

}  // namespace

bool divides(const Monomial& a, const Monomial& b) {
  check_context(a, b);
  for (int i = 0; i < a.num_vars(); ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_context(a, b);
  std::vector<Exponent> e(a.exponents);
  for (int i = 0; i < a.num_vars(); ++i) e[i] = std::max(e[i], b.exponents[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_context(a, b);
  std::vector<Exponent> e(a.exponents);
  for (int i = 0; i < a.num_vars(); ++i) e[i] = std::min(e[i], b.exponents[i]);
  return Monomial(std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
  check_context(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (int i = 0; i < a.num_vars(); ++i)
    if (__builtin_add_overflow(a.exponents[i], b.exponents[i], &e[i]))
      throw OverflowError("exponent overflow in monomial product");
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  check_context(a, b);
  std::vector<Exponent> e(a.exponents);
  for (int i = 0; i < a.num_vars(); ++i) e[i] = std::max<Exponent>(e[i] - b.exponents[i], 0);
  return Monomial(std::move(e));
}

Monomial power(const Monomial& a, Exponent k) {
  if (k < 0) throw PreconditionError("monomial power needs k >= 0, got " + std::to_string(k));
  std::vector<Exponent> e(a.num_vars());
  for (int i = 0; i < a.num_vars(); ++i)
    if (__builtin_mul_overflow(a.exponents[i], k, &e[i]))
      throw OverflowError("exponent overflow in monomial power");
  return Monomial(std::move(e));
}

}  // namespace frobcx
