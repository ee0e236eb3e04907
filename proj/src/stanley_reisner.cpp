#include "frobcx/stanley_reisner.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace frobcx {

SquareFreeIdeal::SquareFreeIdeal(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  if (ideal_.is_zero()) throw ZeroIdealError("the zero ideal is not a Stanley-Reisner ideal");
  if (ideal_.is_unit()) throw UnitIdealError("the unit ideal is not a Stanley-Reisner ideal");
  for (const Monomial& g : ideal_.gens())
    for (Exponent e : g.exponents)
      if (e > 1)
        throw NotSquareFreeError("generator with exponent " + std::to_string(e) +
                                 " is not square-free");
}

MonomialIdeal PrimeSupport::prime_ideal() const {
  const int n = alpha.num_vars();
  std::vector<Monomial> gens;
  for (int i : alpha.support()) gens.push_back(Monomial::variable(n, i));
  return MonomialIdeal(n, std::move(gens));
}

SquareFreeIdeal validate_squarefree(const MonomialIdeal& ideal) {
  return SquareFreeIdeal(ideal);
}

namespace {

/// Enumerates vertex covers of the edge hypergraph by branching on the
/// smallest uncovered edge; vertices tried earlier in a branch are banned in
/// its siblings so each cover surfaces once. Non-minimal covers may still
/// appear and are filtered afterwards.
void cover_dfs(const std::vector<std::vector<int>>& edges, std::vector<char>& chosen,
               std::vector<char>& banned, std::set<std::vector<int>>& out) {
  const std::vector<int>* pick = nullptr;
  for (const auto& e : edges) {
    bool covered = false;
    for (int v : e)
      if (chosen[v]) {
        covered = true;
        break;
      }
    if (!covered && (pick == nullptr || e.size() < pick->size())) pick = &e;
  }
  if (pick == nullptr) {
    std::vector<int> cover;
    for (int v = 0; v < static_cast<int>(chosen.size()); ++v)
      if (chosen[v]) cover.push_back(v);
    out.insert(std::move(cover));
    return;
  }
  std::vector<int> banned_here;
  for (int v : *pick) {
    if (banned[v]) continue;
    chosen[v] = 1;
    cover_dfs(edges, chosen, banned, out);
    chosen[v] = 0;
    banned[v] = 1;
    banned_here.push_back(v);
  }
  for (int v : banned_here) banned[v] = 0;
}

bool strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Decomposition minimal_primes(const SquareFreeIdeal& I) {
  const int n = I.num_vars();
  std::vector<std::vector<int>> edges;
  std::set<int> used;
  for (const Monomial& g : I.ideal().gens()) {
    edges.push_back(g.support());
    for (int v : edges.back()) used.insert(v);
  }

  std::set<std::vector<int>> covers;
  std::vector<char> chosen(n, 0), banned(n, 0);
  cover_dfs(edges, chosen, banned, covers);

  std::vector<std::vector<int>> minimal;
  for (const auto& c : covers) {
    bool keep = true;
    for (const auto& d : covers)
      if (strict_subset(d, c)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  Decomposition D;
  for (const auto& c : minimal) {
    std::vector<Exponent> alpha(n, 0);
    for (int v : c) alpha[v] = 1;
    D.primes.push_back(PrimeSupport{Monomial(std::move(alpha))});
  }
  D.used_variables.assign(used.begin(), used.end());
  D.full_support = full_support_check(D);

  if (D.primes.empty())
    throw FormulaViolationError("minimal prime decomposition produced no primes");
  MonomialIdeal inter = D.primes[0].prime_ideal();
  for (std::size_t i = 1; i < D.primes.size(); ++i)
    inter = ideal_intersection(inter, D.primes[i].prime_ideal());
  if (inter != I.ideal())
    throw FormulaViolationError(
        "minimal prime decomposition does not intersect back to the ideal");
  return D;
}

bool full_support_check(const Decomposition& D) {
  if (D.primes.empty()) return false;
  const int n = D.primes[0].alpha.num_vars();
  std::vector<char> seen(n, 0);
  for (const PrimeSupport& P : D.primes)
    for (int v : P.support()) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Restriction restrict_variables(const SquareFreeIdeal& I) {
  const int n = I.num_vars();
  std::vector<char> used(n, 0);
  for (const Monomial& g : I.ideal().gens())
    for (int v : g.support()) used[v] = 1;
  std::vector<int> kept;
  for (int v = 0; v < n; ++v)
    if (used[v]) kept.push_back(v);

  if (static_cast<int>(kept.size()) == n) return Restriction{I, kept};

  std::vector<Monomial> gens;
  for (const Monomial& g : I.ideal().gens()) {
    std::vector<Exponent> e;
    e.reserve(kept.size());
    for (int v : kept) e.push_back(g.exponents[v]);
    gens.push_back(Monomial(std::move(e)));
  }
  MonomialIdeal restricted(static_cast<int>(kept.size()), std::move(gens));
  return Restriction{SquareFreeIdeal(std::move(restricted)), kept};
}

}  // namespace frobcx
