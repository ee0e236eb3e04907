#include "frobcx/frobenius.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace frobcx {

Exponent prime_power(std::int64_t p, int e) {
  if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
  if (e < 0) throw PreconditionError("prime_power needs e >= 0, got " + std::to_string(e));
  constexpr Exponent kCap = Exponent{1} << 40;
  Exponent q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > kCap / p)
      throw OverflowError("q = " + std::to_string(p) + "^" + std::to_string(e) +
                          " exceeds the 2^40 cap");
    q *= p;
  }
  return q;
}

namespace {

bool exponents_in(const MonomialIdeal& A, std::initializer_list<Exponent> allowed) {
  for (const Monomial& g : A.gens())
    for (Exponent x : g.exponents)
      if (std::find(allowed.begin(), allowed.end(), x) == allowed.end()) return false;
  return true;
}

void require_full_support(const Decomposition& D) {
  if (!full_support_check(D))
    throw PreconditionError("decomposition does not cover all variables; restrict first");
}

}  // namespace

MonomialIdeal colon_abz(const SquareFreeIdeal& I, const Decomposition& D, Exponent q) {
  if (q < 2) throw PreconditionError("colon_abz needs q >= 2, got " + std::to_string(q));
  require_full_support(D);
  const int n = I.num_vars();
  auto factor = [&](const PrimeSupport& P) {
    std::vector<Monomial> gens;
    for (int i : P.support()) gens.push_back(power(Monomial::variable(n, i), q));
    gens.push_back(power(P.face(), q - 1));
    return MonomialIdeal(n, std::move(gens));
  };
  MonomialIdeal acc = factor(D.primes.at(0));
  for (std::size_t i = 1; i < D.primes.size(); ++i)
    acc = ideal_intersection(acc, factor(D.primes[i]));
  if (!exponents_in(acc, {0, q - 1, q}))
    throw FormulaViolationError("colon ideal has an exponent outside {0, q-1, q}");
  return acc;
}

MonomialIdeal extract_Jq(const SquareFreeIdeal& I, Exponent q, const MonomialIdeal& Kq) {
  if (q < 2) throw PreconditionError("extract_Jq needs q >= 2, got " + std::to_string(q));
  const int n = I.num_vars();
  const MonomialIdeal Iq = bracket_power(I.ideal(), q);
  const MonomialIdeal Fq(n, {Monomial::all_variables(n, q - 1)});
  std::vector<Monomial> kept;
  for (const Monomial& g : Kq.gens())
    if (!contains(Iq, g) && !contains(Fq, g)) kept.push_back(g);
  MonomialIdeal Jq(n, std::move(kept));
  if (ideal_sum(ideal_sum(Iq, Jq), Fq) != Kq)
    throw FormulaViolationError("I^[q] + J_q + ((x_1..x_n)^(q-1)) does not rebuild (I^[q]:I)");
  return Jq;
}

MonomialIdeal transport_p_to_q(const MonomialIdeal& Jp, std::int64_t p, Exponent q) {
  if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
  Exponent t = q;
  while (t > 1 && t % p == 0) t /= p;
  if (t != 1 || q < p)
    throw PreconditionError("q = " + std::to_string(q) + " is not a positive power of p = " +
                            std::to_string(p));
  std::vector<Monomial> gens;
  gens.reserve(Jp.num_gens());
  for (const Monomial& g : Jp.gens()) {
    std::vector<Exponent> e(g.exponents);
    for (Exponent& x : e) {
      if (x == 0)
        continue;
      else if (x == p - 1)
        x = q - 1;
      else if (x == p)
        x = q;
      else
        throw PreconditionError("exponent " + std::to_string(x) +
                                " outside {0, p-1, p} in transport");
    }
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(Jp.num_vars(), std::move(gens));
}

std::vector<std::vector<int>> compositions(int e) {
  if (e < 1) throw PreconditionError("compositions need e >= 1, got " + std::to_string(e));
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int m) -> void {
    if (m == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int a = 1; a <= m; ++a) {
      cur.push_back(a);
      self(self, m - a);
      cur.pop_back();
    }
  };
  rec(rec, e);
  return out;
}

namespace {

/// L_e assembled from precomputed K_b = (I^[p^b] : I), K[b] for 1 <= b < e.
MonomialIdeal le_from_K(const std::vector<MonomialIdeal>& K, std::int64_t p, int e, int n) {
  MonomialIdeal acc = MonomialIdeal::zero(n);
  for (const auto& comp : compositions(e)) {
    MonomialIdeal prod = K.at(comp[0]);
    int cum = comp[0];
    for (std::size_t i = 1; i < comp.size(); ++i) {
      prod = ideal_product(prod, bracket_power(K.at(comp[i]), prime_power(p, cum)));
      cum += comp[i];
    }
    acc = ideal_sum(acc, prod);
  }
  return acc;
}

GenerationCase classify_from(const Decomposition& D, const MonomialIdeal& Jp) {
  int min_h = D.primes.front().height();
  int max_h = min_h;
  for (const PrimeSupport& P : D.primes) {
    min_h = std::min(min_h, P.height());
    max_h = std::max(max_h, P.height());
  }
  if (max_h == 1) return GenerationCase::III;
  if (min_h == 1) return GenerationCase::II;
  return Jp.is_zero() ? GenerationCase::I_A : GenerationCase::I_B;
}

}  // namespace

MonomialIdeal compute_Le(const SquareFreeIdeal& I, const Decomposition& D, std::int64_t p,
                         int e) {
  if (e < 1) throw PreconditionError("compute_Le needs e >= 1, got " + std::to_string(e));
  const int n = I.num_vars();
  if (e == 1) return MonomialIdeal::zero(n);
  std::vector<MonomialIdeal> K;
  K.push_back(MonomialIdeal::zero(n));  // unused slot so K[b] means K_b
  for (int b = 1; b < e; ++b) K.push_back(colon_abz(I, D, prime_power(p, b)));
  return le_from_K(K, p, e, n);
}

std::string to_string(GenerationCase c) {
  switch (c) {
    case GenerationCase::I_A: return "I_A";
    case GenerationCase::I_B: return "I_B";
    case GenerationCase::II: return "II";
    case GenerationCase::III: return "III";
  }
  throw Error("unreachable generation case");
}

bool principally_generated(GenerationCase c) {
  return c == GenerationCase::I_A || c == GenerationCase::III;
}

GenerationCase classify(const SquareFreeIdeal& I, const Decomposition& D, std::int64_t p) {
  require_full_support(D);
  const MonomialIdeal Kp = colon_abz(I, D, prime_power(p, 1));
  const MonomialIdeal Jp = extract_Jq(I, prime_power(p, 1), Kp);
  return classify_from(D, Jp);
}

SupportSet support_set(const MonomialIdeal& Jq) {
  std::set<std::vector<int>> seen;
  for (const Monomial& g : Jq.gens()) seen.insert(g.support());
  SupportSet S;
  S.gamma.assign(seen.begin(), seen.end());
  S.is_minimal = !S.gamma.empty();
  for (const auto& a : S.gamma)
    for (const auto& b : S.gamma)
      if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        S.is_minimal = false;
  return S;
}

bool check_lemma_q(const MonomialIdeal& Jq, const MonomialIdeal& Kq, Exponent q) {
  bool witness = false;
  for (const Monomial& g : Kq.gens()) {
    bool has_q = false, has_qm1 = false, has_zero = false;
    for (Exponent x : g.exponents) {
      has_q |= x == q;
      has_qm1 |= x == q - 1;
      has_zero |= x == 0;
    }
    if (has_q && has_qm1 && has_zero) {
      witness = true;
      break;
    }
  }
  return !Jq.is_zero() == witness;
}

MonomialIdeal M_e_gamma(const MonomialIdeal& Jq, const std::vector<int>& gamma) {
  bool is_gen_support = false;
  for (const Monomial& g : Jq.gens())
    if (g.support() == gamma) {
      is_gen_support = true;
      break;
    }
  if (!is_gen_support)
    throw PreconditionError("gamma is not the support of a minimal generator");
  std::vector<Monomial> gens;
  for (const Monomial& g : Jq.gens()) {
    const std::vector<int> s = g.support();
    if (std::includes(gamma.begin(), gamma.end(), s.begin(), s.end())) gens.push_back(g);
  }
  return MonomialIdeal(Jq.num_vars(), std::move(gens));
}

bool check_lemma_claim(const MonomialIdeal& Jq, Exponent q) {
  for (const Monomial& a : Jq.gens()) {
    const std::vector<int> sa = a.support();
    for (const Monomial& b : Jq.gens()) {
      const std::vector<int> sb = b.support();
      if (sb.size() >= sa.size() ||
          !std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()))
        continue;
      bool witness = false;
      for (int k = 0; k < a.num_vars(); ++k)
        if (a.exponents[k] == q - 1 && b.exponents[k] == q) {
          witness = true;
          break;
        }
      if (!witness) return false;
    }
  }
  return true;
}

GeneratingFunction generating_function(std::int64_t mu, int e_max, bool c0_one) {
  if (mu < 0) throw PreconditionError("mu must be >= 0");
  if (e_max < 0) throw PreconditionError("e_max must be >= 0");
  GeneratingFunction G;
  G.numerator = c0_one ? std::vector<std::int64_t>{1, mu, -1}
                       : std::vector<std::int64_t>{0, mu + 1, -1};
  G.denominator = {1, -1};
  G.coefficients.push_back(c0_one ? 1 : 0);
  if (e_max >= 1) G.coefficients.push_back(mu + 1);
  for (int e = 2; e <= e_max; ++e) G.coefficients.push_back(mu);
  return G;
}

std::optional<std::int64_t> frobenius_complexity(const ComplexityReport& report) {
  if (report.mu == 0) return std::nullopt;
  return 0;
}

ComplexityReport complexity_sequence(const SquareFreeIdeal& I, std::int64_t p, int e_max) {
  if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
  if (e_max < 1) throw PreconditionError("e_max must be >= 1, got " + std::to_string(e_max));
  const int n = I.num_vars();
  const Decomposition D = minimal_primes(I);
  require_full_support(D);

  std::vector<MonomialIdeal> K;
  K.push_back(MonomialIdeal::zero(n));
  for (int e = 1; e <= e_max; ++e) K.push_back(colon_abz(I, D, prime_power(p, e)));

  ComplexityReport rep;
  rep.c = {0};
  rep.k = {0};
  for (int e = 1; e <= e_max; ++e) {
    const Exponent q = prime_power(p, e);
    MonomialIdeal Jq = extract_Jq(I, q, K[e]);
    MonomialIdeal Le = le_from_K(K, p, e, n);
    if (!contains(K[e], Le))
      throw FormulaViolationError("L_" + std::to_string(e) + " is not inside K_" +
                                  std::to_string(e));
    const std::int64_t c_e = mu_quotient(K[e], ideal_sum(Le, bracket_power(I.ideal(), q)));
    rep.c.push_back(c_e);
    rep.k.push_back(rep.k.back() + c_e);
    rep.degrees.push_back(FrobeniusDegreeData{e, q, K[e], std::move(Jq), std::move(Le), c_e});
  }
  rep.mu = static_cast<std::int64_t>(rep.degrees.front().J_q.num_gens());
  rep.generation_case = classify_from(D, rep.degrees.front().J_q);
  rep.complexity_minus_infinity = rep.mu == 0;
  rep.genfun = generating_function(rep.mu, e_max);
  return rep;
}

bool TheoremCheck::passed() const {
  return gens_outside_Le && c_le_mu && c_matches_mu && trichotomy && lemma_q && lemma_claim &&
         lemma_ge;
}

TheoremReport verify_main_theorem(const SquareFreeIdeal& I, std::int64_t p, int e_max) {
  if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
  if (e_max < 2)
    throw PreconditionError("verify_main_theorem needs e_max >= 2, got " +
                            std::to_string(e_max));
  const int n = I.num_vars();
  const Decomposition D = minimal_primes(I);
  require_full_support(D);

  std::vector<MonomialIdeal> K, J;
  K.push_back(MonomialIdeal::zero(n));
  J.push_back(MonomialIdeal::zero(n));
  for (int e = 1; e <= e_max; ++e) {
    K.push_back(colon_abz(I, D, prime_power(p, e)));
    J.push_back(extract_Jq(I, prime_power(p, e), K[e]));
  }

  TheoremReport rep;
  rep.mu = static_cast<std::int64_t>(J[1].num_gens());
  rep.passed = true;

  for (int e = 2; e <= e_max; ++e) {
    TheoremCheck ck;
    ck.e = e;
    ck.q = prime_power(p, e);
    const MonomialIdeal Le = le_from_K(K, p, e, n);

    ck.gens_outside_Le = true;
    for (const Monomial& g : J[e].gens())
      if (contains(Le, g)) {
        ck.gens_outside_Le = false;
        ck.failures.push_back("a minimal generator of J_q lies in L_" + std::to_string(e));
      }

    ck.trichotomy = exponents_in(K[e], {0, ck.q - 1, ck.q});
    if (!ck.trichotomy)
      ck.failures.push_back("K_" + std::to_string(e) +
                            " has an exponent outside {0, q-1, q}");

    ck.c_e = mu_quotient(K[e], ideal_sum(Le, bracket_power(I.ideal(), ck.q)));
    ck.c_le_mu = ck.c_e <= rep.mu;
    ck.c_matches_mu = ck.c_e == rep.mu;
    if (!ck.c_le_mu)
      ck.failures.push_back("c_" + std::to_string(e) + " exceeds mu");
    else if (!ck.c_matches_mu)
      ck.failures.push_back("c_" + std::to_string(e) + " = " + std::to_string(ck.c_e) +
                            " differs from mu = " + std::to_string(rep.mu));

    ck.lemma_q = check_lemma_q(J[e], K[e], ck.q);
    if (!ck.lemma_q)
      ck.failures.push_back("J_q biconditional fails at e = " + std::to_string(e));

    ck.lemma_claim = check_lemma_claim(J[e], ck.q);
    if (!ck.lemma_claim)
      ck.failures.push_back("support-pair witness fails at e = " + std::to_string(e));

    ck.lemma_ge = true;
    try {
      for (const Monomial& gp : J[1].gens()) {
        const std::vector<int> gamma = gp.support();
        const Monomial ge = transport_p_to_q(MonomialIdeal(n, {gp}), p, ck.q).gens().at(0);
        std::vector<MonomialIdeal> M;
        M.push_back(MonomialIdeal::zero(n));
        for (int b = 1; b < e; ++b) M.push_back(M_e_gamma(J[b], gamma));
        for (const auto& comp : compositions(e)) {
          MonomialIdeal kprod = K.at(comp[0]);
          MonomialIdeal mprod = M.at(comp[0]);
          int cum = comp[0];
          for (std::size_t i = 1; i < comp.size(); ++i) {
            const Exponent s = prime_power(p, cum);
            kprod = ideal_product(kprod, bracket_power(K.at(comp[i]), s));
            mprod = ideal_product(mprod, bracket_power(M.at(comp[i]), s));
            cum += comp[i];
          }
          if (contains(kprod, ge) != contains(mprod, ge)) {
            ck.lemma_ge = false;
            ck.failures.push_back("product membership transfer fails at e = " +
                                  std::to_string(e));
          }
          ++ck.ge_pairs_checked;
        }
      }
    } catch (const PreconditionError& err) {
      ck.lemma_ge = false;
      ck.failures.push_back(std::string("product membership transfer: ") + err.what());
    }

    rep.passed = rep.passed && ck.passed();
    rep.checks.push_back(std::move(ck));
  }
  return rep;
}

Analysis analyze(const SquareFreeIdeal& I, std::int64_t p, int e_max) {
  Restriction R = restrict_variables(I);
  Decomposition D = minimal_primes(R.ideal);
  ComplexityReport report = complexity_sequence(R.ideal, p, e_max);
  MonomialIdeal Jp = report.degrees.front().J_q;

  ClassificationDetail detail;
  detail.generation_case = report.generation_case;
  detail.jp_zero = Jp.is_zero();
  const int m = R.ideal.num_vars();
  const MonomialIdeal Ip = bracket_power(R.ideal.ideal(), p);
  const MonomialIdeal Fp(m, {Monomial::all_variables(m, p - 1)});
  detail.jp_in_bracket_plus_face = contains(ideal_sum(Ip, Fp), Jp);
  detail.jp_in_face_power = contains(Fp, Jp);

  SupportSet support = support_set(Jp);
  return Analysis{std::move(R), std::move(D), std::move(report), std::move(Jp),
                  std::move(support), detail};
}

bool same_analysis(const Analysis& a, const Analysis& b) {
  return a.decomposition == b.decomposition && a.report == b.report && a.J_p == b.J_p &&
         a.support == b.support && a.classification == b.classification;
}

}  // namespace frobcx
