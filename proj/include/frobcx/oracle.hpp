#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobcx/frobenius.hpp"

namespace frobcx::oracle {

/// Slow reference implementations, sharing the value types with the library
/// but none of its algorithm code. Used by the tests and the verify command.

/// (A : B) by membership-filtering candidate monomials assembled from the
/// per-generator quotients g / gcd(g, b).
MonomialIdeal colon_direct(const MonomialIdeal& A, const MonomialIdeal& B);

/// L_e by raw expansion of every composition product, with no intermediate
/// minimalization; K[b] must hold (I^[p^b] : I) for 1 <= b < e.
MonomialIdeal le_bruteforce(const std::vector<MonomialIdeal>& K, std::int64_t p, int e,
                            int num_vars);

/// Minimal generator count of A/B by enumerating the monomials of A inside
/// the componentwise generator-exponent box and counting those that lie
/// neither in B nor in (x_1,..,x_n) * A.
std::int64_t mu_bruteforce(const MonomialIdeal& A, const MonomialIdeal& B);

inline constexpr std::uint64_t kDefaultSeed = 1000003;

/// Random square-free ideal: n uniform in 3..6, two to five generators with
/// supports of size 2..3. May have unused variables; restrict before the
/// pipeline.
SquareFreeIdeal random_square_free_ideal(std::mt19937_64& rng);

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int instances = 100;
  int colon_e_max = 2;
  int le_e_max = 2;
  int mu_e_max = 2;
  int theorem_e_max = 3;
  int transport_e_max = 4;
  bool flat_invariance = true;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int instances = 0;
  std::int64_t colon_checks = 0;
  std::int64_t le_checks = 0;
  std::int64_t mu_checks = 0;
  std::int64_t theorem_checks = 0;
  std::int64_t transport_checks = 0;
  std::int64_t flat_checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::int64_t total_checks() const {
    return colon_checks + le_checks + mu_checks + theorem_checks + transport_checks +
           flat_checks;
  }
};

/// All cross-checks (fast path vs oracle, theorem verifier, transport, flat
/// invariance) on one ideal, for p in {2, 3}. Appends to the report.
void cross_check_ideal(const SquareFreeIdeal& I, const SuiteOptions& opt, SuiteReport& rep,
                       const std::string& label);

/// The seeded randomized suite.
SuiteReport run_cross_checks(const SuiteOptions& opt);

}  // namespace frobcx::oracle
