#include "frobcx/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace frobcx::oracle {

namespace {

// Local arithmetic only: the point of this module is to reach the same
// answers without touching the library's algorithm code.

bool divs(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool in_ideal(const MonomialIdeal& A, const std::vector<Exponent>& v) {
  for (const Monomial& g : A.gens())
    if (divs(g.exponents, v)) return true;
  return false;
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in oracle");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in oracle");
  return r;
}

Exponent ipow(std::int64_t p, int e) {
  Exponent q = 1;
  for (int i = 0; i < e; ++i) q = checked_mul(q, p);
  return q;
}

struct VecHash {
  std::size_t operator()(const std::vector<Exponent>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Exponent x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

MonomialIdeal colon_direct(const MonomialIdeal& A, const MonomialIdeal& B) {
  if (A.num_vars() != B.num_vars())
    throw ContextMismatchError("colon_direct operands over different variable counts");
  if (B.is_zero()) throw UndefinedColonError("colon by the zero ideal");
  const int n = A.num_vars();
  if (A.is_zero()) return MonomialIdeal::zero(n);

  const std::size_t na = A.num_gens(), nb = B.num_gens();
  std::size_t tuples = 1;
  for (std::size_t j = 0; j < nb; ++j) {
    tuples *= na;
    if (tuples > 50'000'000) throw PreconditionError("colon_direct oracle input too large");
  }

  // One candidate per choice of a generator quotient for every generator of
  // B, joined componentwise; then keep the candidates m with m*b in A for
  // every b.
  std::vector<Monomial> kept;
  std::vector<std::size_t> idx(nb, 0);
  std::vector<Exponent> cand(n);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::fill(cand.begin(), cand.end(), 0);
    for (std::size_t j = 0; j < nb; ++j) {
      const std::vector<Exponent>& g = A.gens()[idx[j]].exponents;
      const std::vector<Exponent>& b = B.gens()[j].exponents;
      for (int i = 0; i < n; ++i)
        cand[i] = std::max(cand[i], g[i] > b[i] ? g[i] - b[i] : 0);
    }
    bool member = true;
    for (std::size_t j = 0; j < nb && member; ++j) {
      std::vector<Exponent> mb(cand);
      for (int i = 0; i < n; ++i) mb[i] = checked_add(mb[i], B.gens()[j].exponents[i]);
      member = in_ideal(A, mb);
    }
    if (member) kept.push_back(Monomial(cand));
    for (std::size_t j = 0; j < nb; ++j) {
      if (++idx[j] < na) break;
      idx[j] = 0;
    }
  }
  return MonomialIdeal(n, std::move(kept));
}

MonomialIdeal le_bruteforce(const std::vector<MonomialIdeal>& K, std::int64_t p, int e,
                            int num_vars) {
  if (e < 1) throw PreconditionError("le_bruteforce needs e >= 1");
  std::vector<Monomial> all;
  // A composition of e with at least two parts is a nonempty set of cut
  // points inside 1..e-1, encoded here as a bitmask.
  for (unsigned mask = 1; mask < (1u << (e - 1)); ++mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int cut = 1; cut < e; ++cut)
      if (mask & (1u << (cut - 1))) {
        parts.push_back(cut - prev);
        prev = cut;
      }
    parts.push_back(e - prev);

    std::vector<std::vector<Exponent>> expansion;
    for (const Monomial& g : K.at(parts[0]).gens()) expansion.push_back(g.exponents);
    int cum = parts[0];
    for (std::size_t j = 1; j < parts.size(); ++j) {
      const Exponent scale = ipow(p, cum);
      std::vector<std::vector<Exponent>> next;
      for (const auto& a : expansion)
        for (const Monomial& g : K.at(parts[j]).gens()) {
          std::vector<Exponent> s(a);
          for (int i = 0; i < num_vars; ++i)
            s[i] = checked_add(s[i], checked_mul(g.exponents[i], scale));
          next.push_back(std::move(s));
        }
      expansion = std::move(next);
      cum += parts[j];
    }
    for (auto& v : expansion) all.push_back(Monomial(std::move(v)));
  }
  return MonomialIdeal(num_vars, std::move(all));
}

std::int64_t mu_bruteforce(const MonomialIdeal& A, const MonomialIdeal& B) {
  if (A.num_vars() != B.num_vars())
    throw ContextMismatchError("mu_bruteforce operands over different variable counts");
  for (const Monomial& b : B.gens())
    if (!in_ideal(A, b.exponents))
      throw PreconditionError("mu_bruteforce needs the denominator inside the numerator");
  const int n = A.num_vars();
  if (A.is_zero()) return 0;

  std::vector<Exponent> bound(n, 0);
  for (const Monomial& g : A.gens())
    for (int i = 0; i < n; ++i) bound[i] = std::max(bound[i], g.exponents[i]);

  // Any monomial of A with a coordinate above the generator box is a variable
  // times another monomial of A, so everything outside (x_1..x_n)*A sits in
  // the box. Enumerate the box part of A as multiples of its generators.
  std::unordered_set<std::vector<Exponent>, VecHash> members;
  for (const Monomial& g : A.gens()) {
    std::vector<Exponent> v = g.exponents;
    while (true) {
      members.insert(v);
      int i = 0;
      while (i < n && v[i] == bound[i]) {
        v[i] = g.exponents[i];
        ++i;
      }
      if (i == n) break;
      ++v[i];
    }
  }

  std::int64_t count = 0;
  for (const auto& v : members) {
    bool in_b = false;
    for (const Monomial& b : B.gens())
      if (divs(b.exponents, v)) {
        in_b = true;
        break;
      }
    if (in_b) continue;
    bool in_mA = false;
    std::vector<Exponent> w(v);
    for (int i = 0; i < n && !in_mA; ++i) {
      if (v[i] == 0) continue;
      --w[i];
      in_mA = members.count(w) != 0;
      ++w[i];
    }
    if (!in_mA) ++count;
  }
  return count;
}

SquareFreeIdeal random_square_free_ideal(std::mt19937_64& rng) {
  const auto pick = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int n = pick(3, 6);
  const int count = pick(2, 5);
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    const int size = pick(2, 3);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int j = 0; j < size; ++j) std::swap(idx[j], idx[j + pick(0, n - j - 1)]);
    std::vector<Exponent> e(n, 0);
    for (int j = 0; j < size; ++j) e[idx[j]] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return SquareFreeIdeal(MonomialIdeal(n, std::move(gens)));
}

namespace {

void note_failure(SuiteReport& rep, const std::string& msg) { rep.failures.push_back(msg); }

}  // namespace

void cross_check_ideal(const SquareFreeIdeal& raw, const SuiteOptions& opt, SuiteReport& rep,
                       const std::string& label) {
  const Restriction R = restrict_variables(raw);
  const SquareFreeIdeal& I = R.ideal;
  const int n = I.num_vars();
  const Decomposition D = minimal_primes(I);

  for (std::int64_t p : {std::int64_t{2}, std::int64_t{3}}) {
    const int k_max = std::max({opt.colon_e_max, opt.le_e_max, opt.mu_e_max,
                                opt.transport_e_max});
    std::vector<MonomialIdeal> K;
    K.push_back(MonomialIdeal::zero(n));
    for (int e = 1; e <= k_max; ++e) K.push_back(colon_abz(I, D, prime_power(p, e)));

    const std::string tag = label + ", p=" + std::to_string(p);

    for (int e = 1; e <= opt.colon_e_max; ++e) {
      const Exponent q = prime_power(p, e);
      if (K[e] != colon_direct(bracket_power(I.ideal(), q), I.ideal()))
        note_failure(rep, tag + ": closed-form colon differs from direct colon at e=" +
                              std::to_string(e));
      ++rep.colon_checks;
    }

    for (int e = 1; e <= opt.le_e_max; ++e) {
      if (compute_Le(I, D, p, e) != le_bruteforce(K, p, e, n))
        note_failure(rep, tag + ": L_e differs from brute-force expansion at e=" +
                              std::to_string(e));
      ++rep.le_checks;
    }

    for (int e = 1; e <= opt.mu_e_max; ++e) {
      const Exponent q = prime_power(p, e);
      const MonomialIdeal B =
          ideal_sum(compute_Le(I, D, p, e), bracket_power(I.ideal(), q));
      if (mu_quotient(K[e], B) != mu_bruteforce(K[e], B))
        note_failure(rep, tag + ": mu differs from brute-force count at e=" +
                              std::to_string(e));
      ++rep.mu_checks;
    }

    const TheoremReport thm = verify_main_theorem(I, p, opt.theorem_e_max);
    if (!thm.passed) {
      std::string detail = tag + ": stabilization checks failed";
      for (const TheoremCheck& ck : thm.checks)
        for (const std::string& f : ck.failures) detail += "; " + f;
      note_failure(rep, detail);
    }
    ++rep.theorem_checks;

    const MonomialIdeal Jp = extract_Jq(I, prime_power(p, 1), K[1]);
    for (int e = 2; e <= opt.transport_e_max; ++e) {
      const Exponent q = prime_power(p, e);
      if (transport_p_to_q(Jp, p, q) != extract_Jq(I, q, K[e]))
        note_failure(rep, tag + ": transported J_p differs from extracted J_q at e=" +
                              std::to_string(e));
      ++rep.transport_checks;
    }

    if (opt.flat_invariance) {
      const Analysis base = analyze(raw, p, opt.theorem_e_max);
      const Analysis padded =
          analyze(SquareFreeIdeal(pad_variables(raw.ideal(), 2)), p, opt.theorem_e_max);
      if (!same_analysis(base, padded))
        note_failure(rep, tag + ": report changes under unused-variable extension");
      ++rep.flat_checks;
    }
  }
}

SuiteReport run_cross_checks(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.instances; ++i) {
    const SquareFreeIdeal I = random_square_free_ideal(rng);
    cross_check_ideal(I, opt, rep, "instance " + std::to_string(i));
    ++rep.instances;
  }
  return rep;
}

}  // namespace frobcx::oracle
