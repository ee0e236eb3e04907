#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "frobcx/errors.hpp"

namespace frobcx {

using Exponent = std::int64_t;

bool is_prime(std::int64_t m);

/// Number of variables and the characteristic p of the ambient ring.
struct RingContext {
  int n;
  std::int64_t p;
  RingContext(int n, std::int64_t p);
};

/// A monomial in n variables, stored as the exponent vector of x_1..x_n.
/// All exponents are non-negative; the all-zero vector is the monomial 1.
struct Monomial {
  std::vector<Exponent> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial one(int n);
  static Monomial variable(int n, int i);  // x_{i+1} for 0-based i
  static Monomial all_variables(int n, Exponent k = 1);  // (x_1 ... x_n)^k

  int num_vars() const { return static_cast<int>(exponents.size()); }
  bool is_one() const;
  Exponent total_degree() const;
  std::vector<int> support() const;  // 0-based indices with positive exponent

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents <=> b.exponents;
  }
};

/// a | b, i.e. a.exponents <= b.exponents componentwise.
bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// a * b with overflow checking.
Monomial product(const Monomial& a, const Monomial& b);

/// a / gcd(a, b): componentwise max(a_i - b_i, 0).
Monomial quotient(const Monomial& a, const Monomial& b);

/// a^k with overflow checking, k >= 0.
Monomial power(const Monomial& a, Exponent k);

}  // namespace frobcx
