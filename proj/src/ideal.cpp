#include "frobcx/ideal.hpp"

#include <algorithm>
#include <string>

namespace frobcx {

namespace {

void check_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars())
    throw ContextMismatchError("ideals over " + std::to_string(a.num_vars()) + " and " +
                               std::to_string(b.num_vars()) + " variables");
}

}  // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators)
    : n_(num_vars), gens_(std::move(generators)) {
  if (n_ < 1)
    throw InputError("ideal needs at least one variable, got n=" + std::to_string(n_));
  for (const Monomial& g : gens_)
    if (g.num_vars() != n_)
      throw ContextMismatchError("generator over " + std::to_string(g.num_vars()) +
                                 " variables in an ideal over " + std::to_string(n_));
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  // A divisor is componentwise <= hence lexicographically <=, so only earlier
  // kept generators can divide a later one.
  std::vector<Monomial> kept;
  kept.reserve(gens_.size());
  for (Monomial& g : gens_) {
    bool minimal = true;
    for (const Monomial& h : kept)
      if (divides(h, g)) {
        minimal = false;
        break;
      }
    if (minimal) kept.push_back(std::move(g));
  }
  gens_ = std::move(kept);
}

MonomialIdeal MonomialIdeal::zero(int num_vars) { return MonomialIdeal(num_vars, {}); }

MonomialIdeal MonomialIdeal::unit(int num_vars) {
  return MonomialIdeal(num_vars, {Monomial::one(num_vars)});
}

MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens) {
  return MonomialIdeal(num_vars, std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens() * b.num_gens());
  for (const Monomial& g : a.gens())
    for (const Monomial& h : b.gens()) gens.push_back(product(g, h));
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens() * b.num_gens());
  for (const Monomial& g : a.gens())
    for (const Monomial& h : b.gens()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal bracket_power(const MonomialIdeal& a, Exponent q) {
  if (q < 1) throw PreconditionError("bracket power needs q >= 1, got " + std::to_string(q));
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens());
  for (const Monomial& g : a.gens()) gens.push_back(power(g, q));
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  if (b.is_zero()) throw UndefinedColonError("colon by the zero ideal");
  auto colon_single = [&](const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(a.num_gens());
    for (const Monomial& g : a.gens()) gens.push_back(quotient(g, m));
    return MonomialIdeal(a.num_vars(), std::move(gens));
  };
  MonomialIdeal acc = colon_single(b.gens()[0]);
  for (std::size_t i = 1; i < b.num_gens(); ++i)
    acc = ideal_intersection(acc, colon_single(b.gens()[i]));
  return acc;
}

bool contains(const MonomialIdeal& a, const Monomial& m) {
  if (a.num_vars() != m.num_vars())
    throw ContextMismatchError("monomial over " + std::to_string(m.num_vars()) +
                               " variables tested in an ideal over " +
                               std::to_string(a.num_vars()));
  for (const Monomial& g : a.gens())
    if (divides(g, m)) return true;
  return false;
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  for (const Monomial& g : b.gens())
    if (!contains(a, g)) return false;
  return true;
}

std::int64_t mu_quotient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!contains(a, b))
    throw PreconditionError("mu_quotient needs the denominator inside the numerator");
  std::int64_t count = 0;
  for (const Monomial& g : a.gens())
    if (!contains(b, g)) ++count;
  return count;
}

MonomialIdeal pad_variables(const MonomialIdeal& a, int extra) {
  if (extra < 0) throw PreconditionError("pad_variables needs extra >= 0");
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens());
  for (const Monomial& g : a.gens()) {
    std::vector<Exponent> e = g.exponents;
    e.resize(e.size() + static_cast<std::size_t>(extra), 0);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(a.num_vars() + extra, std::move(gens));
}

}  // namespace frobcx
