#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobcx/stanley_reisner.hpp"

namespace frobcx {

/// p^e with e >= 0, rejecting results above 2^40.
Exponent prime_power(std::int64_t p, int e);

/// The colon ideal (I^[q] : I) computed through the closed form
///     intersection over the minimal primes P_alpha of
///     P_alpha^[q] + ((x^alpha)^(q-1)).
/// Requires q >= 2 and a full-support decomposition (restrict first).
/// Asserts that every resulting exponent lies in {0, q-1, q}.
MonomialIdeal colon_abz(const SquareFreeIdeal& I, const Decomposition& D, Exponent q);

/// The unique minimal monomial ideal J_q with
///     (I^[q] : I) = I^[q] + J_q + ((x_1...x_n)^(q-1)),
/// extracted by filtering the generators of K_q = (I^[q] : I) and asserting
/// the reconstruction.
MonomialIdeal extract_Jq(const SquareFreeIdeal& I, Exponent q, const MonomialIdeal& Kq);

/// Image of J_p under the exponent map 0 -> 0, p-1 -> q-1, p -> q.
/// Every exponent of Jp must lie in {0, p-1, p}; q must be a power of p.
MonomialIdeal transport_p_to_q(const MonomialIdeal& Jp, std::int64_t p, Exponent q);

/// All ordered tuples of at least two parts in [1, e-1] summing to e, in
/// lexicographic order. Empty for e = 1.
std::vector<std::vector<int>> compositions(int e);

/// L_e: the sum over compositions (b_1,...,b_s) of e of the products
///     K_{b_1} * K_{b_2}^[p^{b_1}] * ... * K_{b_s}^[p^{b_1+...+b_{s-1}}],
/// with K_b = (I^[p^b] : I). L_1 is the zero ideal.
MonomialIdeal compute_Le(const SquareFreeIdeal& I, const Decomposition& D, std::int64_t p,
                         int e);

struct FrobeniusDegreeData {
  int e = 0;
  Exponent q = 0;  // p^e
  MonomialIdeal K_e;
  MonomialIdeal J_q;
  MonomialIdeal L_e;
  std::int64_t c_e = 0;  // minimal generators of K_e/(L_e + I^[q])

  friend bool operator==(const FrobeniusDegreeData&, const FrobeniusDegreeData&) = default;
};

enum class GenerationCase { I_A, I_B, II, III };

std::string to_string(GenerationCase c);

/// Cases I_A and III have a principally generated Frobenius operator algebra.
bool principally_generated(GenerationCase c);

/// Four-way classification from the minimal prime heights and the J_p = 0
/// test: III when all heights are 1; II when heights are mixed with some
/// height 1; otherwise I_A when J_p = 0 and I_B when J_p != 0.
GenerationCase classify(const SquareFreeIdeal& I, const Decomposition& D, std::int64_t p);

struct SupportSet {
  std::vector<std::vector<int>> gamma;  // 0-based supports of the J_q generators
  bool is_minimal = false;  // nonempty and every element inclusion-minimal

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

SupportSet support_set(const MonomialIdeal& Jq);

/// Biconditional: J_q != 0 if and only if some minimal generator of K_q has
/// at least one exponent equal to q, one equal to q-1, and one equal to 0.
bool check_lemma_q(const MonomialIdeal& Jq, const MonomialIdeal& Kq, Exponent q);

/// Subideal of J_q generated by the minimal generators with support inside
/// gamma. gamma must be the support of some minimal generator of J_q.
MonomialIdeal M_e_gamma(const MonomialIdeal& Jq, const std::vector<int>& gamma);

/// For every pair of minimal generators a, b of J_q with supp(b) strictly
/// inside supp(a): some variable has exponent q-1 in a and q in b.
bool check_lemma_claim(const MonomialIdeal& Jq, Exponent q);

struct GeneratingFunction {
  std::vector<std::int64_t> numerator;     // constant term first
  std::vector<std::int64_t> denominator;   // constant term first
  std::vector<std::int64_t> coefficients;  // c_0 .. c_emax

  friend bool operator==(const GeneratingFunction&, const GeneratingFunction&) = default;
};

/// Closed form ((mu+1)T - T^2) / (1 - T) of the complexity sequence, plus its
/// first e_max + 1 coefficients. With c0_one the constant term is 1 instead
/// of 0 and the numerator becomes 1 + mu T - T^2.
GeneratingFunction generating_function(std::int64_t mu, int e_max, bool c0_one = false);

struct ComplexityReport {
  GenerationCase generation_case = GenerationCase::III;
  std::int64_t mu = 0;                 // minimal generators of J_p
  std::vector<std::int64_t> c;         // c_0 .. c_emax, c_0 = 0
  std::vector<std::int64_t> k;         // running sums of c
  bool complexity_minus_infinity = false;
  GeneratingFunction genfun;
  std::vector<FrobeniusDegreeData> degrees;  // e = 1 .. e_max

  friend bool operator==(const ComplexityReport&, const ComplexityReport&) = default;
};

/// Frobenius complexity: 0 when mu > 0, minus infinity (nullopt) when mu = 0.
std::optional<std::int64_t> frobenius_complexity(const ComplexityReport& report);

/// The full degree-by-degree computation for e = 1 .. e_max. Requires a
/// full-support ideal (restrict first).
ComplexityReport complexity_sequence(const SquareFreeIdeal& I, std::int64_t p, int e_max);

struct TheoremCheck {
  int e = 0;
  Exponent q = 0;
  std::int64_t c_e = 0;
  bool gens_outside_Le = false;  // no minimal generator of J_q lies in L_e
  bool c_le_mu = false;
  bool c_matches_mu = false;
  bool trichotomy = false;       // K_q exponents all in {0, q-1, q}
  bool lemma_q = false;
  bool lemma_claim = false;
  bool lemma_ge = false;         // product membership transfer, all pairs
  int ge_pairs_checked = 0;
  std::vector<std::string> failures;

  bool passed() const;

  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

struct TheoremReport {
  std::int64_t mu = 0;
  std::vector<TheoremCheck> checks;  // e = 2 .. e_max
  bool passed = false;

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Checks, for 2 <= e <= e_max: every minimal generator of J_{p^e} lies
/// outside L_e; c_e equals mu; the exponent trichotomy; the J_q biconditional;
/// the support-pair witness; and that membership of each transported J_p
/// generator in every composition product of the K_b agrees with membership
/// in the matching product of the subideals M_b(gamma). Failures are reported,
/// not raised. Requires full support and e_max >= 2.
TheoremReport verify_main_theorem(const SquareFreeIdeal& I, std::int64_t p, int e_max);

struct ClassificationDetail {
  GenerationCase generation_case = GenerationCase::III;
  bool jp_zero = false;
  bool jp_in_bracket_plus_face = false;  // J_p inside I^[p] + ((x_1..x_n)^(p-1))
  bool jp_in_face_power = false;         // J_p inside ((x_1..x_n)^(p-1))

  friend bool operator==(const ClassificationDetail&, const ClassificationDetail&) = default;
};

/// Restriction to the used variables followed by the whole pipeline.
struct Analysis {
  Restriction restriction;
  Decomposition decomposition;
  ComplexityReport report;
  MonomialIdeal J_p;
  SupportSet support;
  ClassificationDetail classification;
};

Analysis analyze(const SquareFreeIdeal& I, std::int64_t p, int e_max);

/// Everything except the index map; equal for flat extensions by unused
/// variables.
bool same_analysis(const Analysis& a, const Analysis& b);

}  // namespace frobcx
