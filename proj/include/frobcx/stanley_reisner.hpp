#pragma once

#include <vector>

#include "frobcx/ideal.hpp"

namespace frobcx {

/// A proper nonzero monomial ideal whose generators are square-free.
class SquareFreeIdeal {
 public:
  /// Validates: rejects non-square-free generators, the zero ideal and the
  /// unit ideal, each with a distinct error.
  explicit SquareFreeIdeal(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  int num_vars() const { return ideal_.num_vars(); }

  friend bool operator==(const SquareFreeIdeal&, const SquareFreeIdeal&) = default;

 private:
  MonomialIdeal ideal_;
};

/// A monomial prime, identified by its 0/1 face vector alpha: the ideal
/// generated by the variables in supp(alpha).
struct PrimeSupport {
  Monomial alpha;

  std::vector<int> support() const { return alpha.support(); }
  int height() const { return static_cast<int>(alpha.support().size()); }
  MonomialIdeal prime_ideal() const;
  /// The face monomial x^alpha.
  const Monomial& face() const { return alpha; }

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
};

struct Decomposition {
  std::vector<PrimeSupport> primes;  // sorted by (height, support lex)
  bool full_support = false;         // union of prime supports covers all variables
  std::vector<int> used_variables;   // 0-based variables appearing in the generators

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

SquareFreeIdeal validate_squarefree(const MonomialIdeal& ideal);

/// Minimal primes of the Stanley-Reisner ideal: the minimal vertex covers of
/// the hypergraph whose edges are the generator supports. Verifies internally
/// that the primes intersect back to the input ideal.
Decomposition minimal_primes(const SquareFreeIdeal& I);

bool full_support_check(const Decomposition& D);

struct Restriction {
  SquareFreeIdeal ideal;   // over the used variables only
  std::vector<int> kept;   // kept[j] = 0-based original index of new variable j

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

/// Drop the variables that appear in no generator. The identity when the
/// support is already full.
Restriction restrict_variables(const SquareFreeIdeal& I);

}  // namespace frobcx
