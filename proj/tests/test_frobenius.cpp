#include <random>

#include "doctest.h"
#include "frobcx/errors.hpp"
#include "frobcx/frobenius.hpp"
#include "frobcx/oracle.hpp"
#include "helpers.hpp"

using namespace frobcx;

namespace {

MonomialIdeal full_product(int n, Exponent q) {
  return MonomialIdeal(n, {Monomial::all_variables(n, q - 1)});
}

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power(2, 0) == 1);
  CHECK(prime_power(2, 1) == 2);
  CHECK(prime_power(2, 10) == 1024);
  CHECK(prime_power(3, 4) == 81);
  CHECK(prime_power(2, 40) == (Exponent{1} << 40));
  CHECK_THROWS_AS(prime_power(2, 41), OverflowError);
  CHECK_THROWS_AS(prime_power(4, 2), InputError);
  CHECK_THROWS_AS(prime_power(3, -1), PreconditionError);
}

TEST_CASE("colon formula reproduces the nine generators of the first example") {
  const SquareFreeIdeal I = example_a();
  const Decomposition D = minimal_primes(I);
  for (std::int64_t p : {2, 3}) {
    const Exponent q = p;
    const MonomialIdeal K = colon_abz(I, D, q);
    CHECK(K == sym_ideal(5, kExampleAColon, q));
    CHECK(K.num_gens() == 9);
  }
  // the symbolic pattern persists at higher powers of either prime
  CHECK(colon_abz(I, D, 4) == sym_ideal(5, kExampleAColon, 4));
  CHECK(colon_abz(I, D, 9) == sym_ideal(5, kExampleAColon, 9));
}

TEST_CASE("colon formula agrees with the generic colon algorithm") {
  std::mt19937_64 rng(8080);
  for (int iter = 0; iter < 25; ++iter) {
    const Restriction r = restrict_variables(oracle::random_square_free_ideal(rng));
    const Decomposition D = minimal_primes(r.ideal);
    for (Exponent q : {2, 3, 4, 9}) {
      const MonomialIdeal K = colon_abz(r.ideal, D, q);
      CHECK(K == colon(bracket_power(r.ideal.ideal(), q), r.ideal.ideal()));
    }
  }
}

TEST_CASE("colon formula preconditions") {
  const SquareFreeIdeal I = example_a();
  const Decomposition D = minimal_primes(I);
  CHECK_THROWS_AS(colon_abz(I, D, 1), PreconditionError);
  const SquareFreeIdeal sparse(ideal_of(3, {{1, 1, 0}}));
  CHECK_THROWS_AS(colon_abz(sparse, minimal_primes(sparse), 2), PreconditionError);
}

TEST_CASE("new-generator extraction on the worked examples") {
  const SquareFreeIdeal A = example_a();
  const Decomposition DA = minimal_primes(A);
  for (Exponent q : {2, 3, 4, 9}) {
    const MonomialIdeal K = colon_abz(A, DA, q);
    const MonomialIdeal J = extract_Jq(A, q, K);
    CHECK(J == sym_ideal(5, kExampleAJq, q));
    // reconstruction: K = I^[q] + J_q + ((x1..xn)^(q-1))
    CHECK(ideal_sum(ideal_sum(bracket_power(A.ideal(), q), J), full_product(5, q)) == K);
    // J_q avoids both of the other two summands
    for (const Monomial& g : J.gens()) {
      CHECK_FALSE(contains(bracket_power(A.ideal(), q), g));
      CHECK_FALSE(contains(full_product(5, q), g));
    }
  }

  const SquareFreeIdeal B = example_b();
  const Decomposition DB = minimal_primes(B);
  for (Exponent q : {2, 3}) {
    const MonomialIdeal J = extract_Jq(B, q, colon_abz(B, DB, q));
    CHECK(J == sym_ideal(4, kExampleBJq, q));
  }
}

TEST_CASE("principal cases have no new generators") {
  const SquareFreeIdeal I(ideal_of(2, {{1, 1}}));
  const Decomposition D = minimal_primes(I);
  for (Exponent q : {2, 3, 5}) {
    const MonomialIdeal K = colon_abz(I, D, q);
    CHECK(K == full_product(2, q));
    CHECK(extract_Jq(I, q, K).is_zero());
  }

  // a single prime of height two: K_q = I^[q] + full product, J_q = 0
  const SquareFreeIdeal V(ideal_of(2, {{1, 0}, {0, 1}}));
  const Decomposition DV = minimal_primes(V);
  for (Exponent q : {2, 3}) {
    const MonomialIdeal K = colon_abz(V, DV, q);
    CHECK(K == ideal_sum(bracket_power(V.ideal(), q), full_product(2, q)));
    CHECK(extract_Jq(V, q, K).is_zero());
  }
}

TEST_CASE("transport of generators from p to q") {
  const SquareFreeIdeal A = example_a();
  const Decomposition D = minimal_primes(A);
  for (std::int64_t p : {2, 3}) {
    const MonomialIdeal Jp = extract_Jq(A, p, colon_abz(A, D, p));
    CHECK(transport_p_to_q(Jp, p, p) == Jp);
    for (int e = 2; e <= 4; ++e) {
      const Exponent q = prime_power(p, e);
      CHECK(transport_p_to_q(Jp, p, q) == extract_Jq(A, q, colon_abz(A, D, q)));
    }
  }
  // exponent map on a single generator: 0 -> 0, p-1 -> q-1, p -> q
  CHECK(transport_p_to_q(ideal_of(5, {{1, 1, 0, 0, 2}}), 2, 4) ==
        ideal_of(5, {{3, 3, 0, 0, 4}}));
  CHECK(transport_p_to_q(ideal_of(2, {{2, 3}}), 3, 9) == ideal_of(2, {{8, 9}}));
  CHECK(transport_p_to_q(MonomialIdeal::zero(3), 2, 8) == MonomialIdeal::zero(3));

  CHECK_THROWS_AS(transport_p_to_q(ideal_of(1, {{3}}), 5, 25), PreconditionError);
  CHECK_THROWS_AS(transport_p_to_q(ideal_of(1, {{2}}), 3, 8), PreconditionError);
}

TEST_CASE("compositions in lexicographic order") {
  CHECK(compositions(1).empty());
  CHECK(compositions(2) == std::vector<std::vector<int>>{{1, 1}});
  CHECK(compositions(3) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}});
  CHECK(compositions(4) ==
        std::vector<std::vector<int>>{
            {1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3}, {2, 1, 1}, {2, 2}, {3, 1}});
  for (int e = 2; e <= 10; ++e) {
    const auto parts = compositions(e);
    CHECK(parts.size() == (std::size_t{1} << (e - 1)) - 1);
    for (const auto& c : parts) {
      CHECK(c.size() >= 2);
      int sum = 0;
      for (int b : c) {
        CHECK(b >= 1);
        sum += b;
      }
      CHECK(sum == e);
    }
  }
}

TEST_CASE("lower-degree products") {
  const SquareFreeIdeal I = example_a();
  const Decomposition D = minimal_primes(I);
  CHECK(compute_Le(I, D, 2, 1) == MonomialIdeal::zero(5));
  const MonomialIdeal K1 = colon_abz(I, D, 2);
  CHECK(compute_Le(I, D, 2, 2) == ideal_product(K1, bracket_power(K1, 2)));
  // L_e sits inside K_e
  for (int e = 2; e <= 3; ++e) {
    const MonomialIdeal L = compute_Le(I, D, 2, e);
    CHECK(contains(colon_abz(I, D, prime_power(2, e)), L));
  }
}

TEST_CASE("complexity sequences of the worked examples") {
  const ComplexityReport a2 = complexity_sequence(example_a(), 2, 4);
  CHECK(a2.generation_case == GenerationCase::I_B);
  CHECK(a2.mu == 4);
  CHECK(a2.c == std::vector<std::int64_t>{0, 5, 4, 4, 4});
  CHECK(a2.k == std::vector<std::int64_t>{0, 5, 9, 13, 17});
  CHECK_FALSE(a2.complexity_minus_infinity);
  CHECK(a2.genfun.numerator == std::vector<std::int64_t>{0, 5, -1});
  CHECK(a2.genfun.denominator == std::vector<std::int64_t>{1, -1});
  CHECK(a2.degrees.size() == 4);
  CHECK(a2.degrees[0].e == 1);
  CHECK(a2.degrees[3].q == 16);
  CHECK(a2.degrees[1].J_q == sym_ideal(5, kExampleAJq, 4));
  CHECK(frobenius_complexity(a2) == std::optional<std::int64_t>{0});

  const ComplexityReport a3 = complexity_sequence(example_a(), 3, 3);
  CHECK(a3.c == std::vector<std::int64_t>{0, 5, 4, 4});

  const ComplexityReport b2 = complexity_sequence(example_b(), 2, 4);
  CHECK(b2.mu == 2);
  CHECK(b2.c == std::vector<std::int64_t>{0, 3, 2, 2, 2});
  CHECK(b2.generation_case == GenerationCase::I_B);

  const ComplexityReport b3 = complexity_sequence(example_b(), 3, 3);
  CHECK(b3.c == std::vector<std::int64_t>{0, 3, 2, 2});
}

TEST_CASE("complexity sequence of the principal and near-principal cases") {
  // one prime of height one on each side: principally generated, mu = 0
  const ComplexityReport r = complexity_sequence(SquareFreeIdeal(ideal_of(2, {{1, 1}})), 3, 3);
  CHECK(r.generation_case == GenerationCase::III);
  CHECK(r.mu == 0);
  CHECK(r.c == std::vector<std::int64_t>{0, 1, 0, 0});
  CHECK(r.complexity_minus_infinity);
  CHECK(frobenius_complexity(r) == std::nullopt);
  CHECK(principally_generated(r.generation_case));

  // all primes of height two but no new generators: case I_A, still principal
  const ComplexityReport v = complexity_sequence(SquareFreeIdeal(ideal_of(2, {{1, 0}, {0, 1}})), 2, 3);
  CHECK(v.generation_case == GenerationCase::I_A);
  CHECK(v.mu == 0);
  CHECK(v.c == std::vector<std::int64_t>{0, 1, 0, 0});
  CHECK(principally_generated(v.generation_case));

  // mixed heights: infinitely generated out of a height-one component
  const ComplexityReport m = complexity_sequence(SquareFreeIdeal(ideal_of(3, {{1, 1, 0}, {1, 0, 1}})), 2, 3);
  CHECK(m.generation_case == GenerationCase::II);
  CHECK(m.mu == 2);
  CHECK(m.c == std::vector<std::int64_t>{0, 3, 2, 2});
  CHECK_FALSE(principally_generated(m.generation_case));
}

TEST_CASE("case II key identity") {
  // for height-one-plus-taller primes, K_q = J_q + full product exactly
  const SquareFreeIdeal I(ideal_of(3, {{1, 1, 0}, {1, 0, 1}}));
  const Decomposition D = minimal_primes(I);
  CHECK(classify(I, D, 2) == GenerationCase::II);
  for (Exponent q : {2, 3, 4}) {
    const MonomialIdeal K = colon_abz(I, D, q);
    const MonomialIdeal J = extract_Jq(I, q, K);
    CHECK(J == sym_ideal(3, {{1, 2, 0}, {1, 0, 2}}, q));
    CHECK(K == ideal_sum(J, full_product(3, q)));
    CHECK(contains(K, bracket_power(I.ideal(), q)));
  }
}

TEST_CASE("classification labels") {
  CHECK(to_string(GenerationCase::I_A) == "I_A");
  CHECK(to_string(GenerationCase::I_B) == "I_B");
  CHECK(to_string(GenerationCase::II) == "II");
  CHECK(to_string(GenerationCase::III) == "III");
  CHECK(classify(example_a(), minimal_primes(example_a()), 2) == GenerationCase::I_B);
}

TEST_CASE("support sets") {
  const SquareFreeIdeal A = example_a();
  const MonomialIdeal JA = extract_Jq(A, 2, colon_abz(A, minimal_primes(A), 2));
  const SupportSet SA = support_set(JA);
  CHECK(SA.gamma == std::vector<std::vector<int>>{
                        {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 1, 4}, {1, 2, 3, 4}});
  CHECK_FALSE(SA.is_minimal);  // {0,1,4} sits inside {0,1,2,4}

  const SquareFreeIdeal B = example_b();
  const MonomialIdeal JB = extract_Jq(B, 3, colon_abz(B, minimal_primes(B), 3));
  const SupportSet SB = support_set(JB);
  CHECK(SB.gamma == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}});
  CHECK(SB.is_minimal);

  const SupportSet SZ = support_set(MonomialIdeal::zero(3));
  CHECK(SZ.gamma.empty());
  CHECK_FALSE(SZ.is_minimal);
}

TEST_CASE("witness biconditional for nonzero J_q") {
  const SquareFreeIdeal A = example_a();
  const MonomialIdeal K = colon_abz(A, minimal_primes(A), 4);
  const MonomialIdeal J = extract_Jq(A, 4, K);
  CHECK(check_lemma_q(J, K, 4));
  // a zero J_q against a K_q that has a witness generator must fail
  CHECK_FALSE(check_lemma_q(MonomialIdeal::zero(5), K, 4));

  // principal case: no witness and J_q = 0, so the biconditional holds
  const SquareFreeIdeal P(ideal_of(2, {{1, 1}}));
  const MonomialIdeal KP = colon_abz(P, minimal_primes(P), 3);
  CHECK(check_lemma_q(MonomialIdeal::zero(2), KP, 3));
}

TEST_CASE("support-restricted subideals") {
  const SquareFreeIdeal A = example_a();
  const MonomialIdeal J = extract_Jq(A, 2, colon_abz(A, minimal_primes(A), 2));
  CHECK(M_e_gamma(J, {0, 1, 4}) == ideal_of(5, {{1, 1, 0, 0, 2}}));
  CHECK(M_e_gamma(J, {1, 2, 3, 4}) == ideal_of(5, {{0, 2, 1, 1, 1}}));
  // a bigger support picks up the generators it contains
  CHECK(M_e_gamma(J, {0, 1, 3, 4}) ==
        ideal_of(5, {{1, 1, 0, 0, 2}, {1, 1, 0, 2, 1}}));
  CHECK_THROWS_AS(M_e_gamma(J, std::vector<int>{0, 1}), PreconditionError);
}

TEST_CASE("strict support containment forces a q versus q-1 split") {
  const SquareFreeIdeal A = example_a();
  for (Exponent q : {2, 3, 4}) {
    const MonomialIdeal J = extract_Jq(A, q, colon_abz(A, minimal_primes(A), q));
    CHECK(check_lemma_claim(J, q));
  }
  const SquareFreeIdeal B = example_b();
  // no strict containments among the supports, so the check is vacuous
  CHECK(check_lemma_claim(extract_Jq(B, 2, colon_abz(B, minimal_primes(B), 2)), 2));
}

TEST_CASE("stabilization theorem verifier on the worked examples") {
  for (std::int64_t p : {2, 3}) {
    const TheoremReport ra = verify_main_theorem(example_a(), p, 3);
    CHECK(ra.passed);
    CHECK(ra.mu == 4);
    CHECK(ra.checks.size() == 2);
    for (const TheoremCheck& ck : ra.checks) {
      CHECK(ck.passed());
      CHECK(ck.failures.empty());
      CHECK(ck.c_e == 4);
      CHECK(ck.ge_pairs_checked > 0);
    }

    CHECK(verify_main_theorem(example_b(), p, 3).passed);
  }
  // vacuous but well defined when J_p = 0
  const TheoremReport rp = verify_main_theorem(SquareFreeIdeal(ideal_of(2, {{1, 1}})), 2, 3);
  CHECK(rp.passed);
  CHECK(rp.mu == 0);
  CHECK_THROWS_AS(verify_main_theorem(example_a(), 2, 1), PreconditionError);
}

TEST_CASE("generating functions") {
  const GeneratingFunction g4 = generating_function(4, 4);
  CHECK(g4.numerator == std::vector<std::int64_t>{0, 5, -1});
  CHECK(g4.denominator == std::vector<std::int64_t>{1, -1});
  CHECK(g4.coefficients == std::vector<std::int64_t>{0, 5, 4, 4, 4});

  const GeneratingFunction g4one = generating_function(4, 4, true);
  CHECK(g4one.numerator == std::vector<std::int64_t>{1, 4, -1});
  CHECK(g4one.coefficients == std::vector<std::int64_t>{1, 5, 4, 4, 4});

  const GeneratingFunction g0 = generating_function(0, 3);
  CHECK(g0.numerator == std::vector<std::int64_t>{0, 1, -1});
  CHECK(g0.coefficients == std::vector<std::int64_t>{0, 1, 0, 0});
}

TEST_CASE("flat extension by unused variables changes nothing") {
  const Analysis base = analyze(example_a(), 2, 3);
  const Analysis padded =
      analyze(SquareFreeIdeal(pad_variables(example_a().ideal(), 2)), 2, 3);
  CHECK(same_analysis(base, padded));
  CHECK(base.restriction.kept == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(padded.restriction.kept == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(padded.report.c == std::vector<std::int64_t>{0, 5, 4, 4});
}

TEST_CASE("analysis bundles the classification evidence") {
  const Analysis a = analyze(example_a(), 2, 2);
  CHECK(a.report.generation_case == GenerationCase::I_B);
  CHECK_FALSE(a.classification.jp_zero);
  // the new generators are exactly the ones the old ideals miss
  CHECK_FALSE(a.classification.jp_in_bracket_plus_face);
  CHECK_FALSE(a.classification.jp_in_face_power);
  CHECK(a.J_p == sym_ideal(5, kExampleAJq, 2));

  const Analysis ii = analyze(SquareFreeIdeal(ideal_of(3, {{1, 1, 0}, {1, 0, 1}})), 2, 2);
  CHECK(ii.report.generation_case == GenerationCase::II);
  CHECK_FALSE(ii.classification.jp_in_bracket_plus_face);
  CHECK_FALSE(ii.classification.jp_in_face_power);

  const Analysis iii = analyze(SquareFreeIdeal(ideal_of(2, {{1, 1}})), 2, 2);
  CHECK(iii.classification.jp_zero);
  // the zero ideal sits inside everything
  CHECK(iii.classification.jp_in_bracket_plus_face);
  CHECK(iii.classification.jp_in_face_power);
}

TEST_CASE("stabilization and first-step count on random ideals") {
  std::mt19937_64 rng(0xfeed);
  for (int iter = 0; iter < 30; ++iter) {
    const Restriction r = restrict_variables(oracle::random_square_free_ideal(rng));
    for (std::int64_t p : {2, 3}) {
      const ComplexityReport rep = complexity_sequence(r.ideal, p, 4);
      CHECK(rep.c[0] == 0);
      CHECK(rep.c[1] == rep.mu + 1);
      for (int e = 2; e <= 4; ++e) CHECK(rep.c[e] == rep.mu);
      for (int e = 1; e <= 4; ++e)
        CHECK(rep.k[e] == rep.k[e - 1] + rep.c[e]);
      // every K exponent is 0, q-1, or q
      for (const FrobeniusDegreeData& d : rep.degrees)
        for (const Monomial& g : d.K_e.gens())
          for (const Exponent x : g.exponents)
            CHECK((x == 0 || x == d.q - 1 || x == d.q));
    }
  }
}
