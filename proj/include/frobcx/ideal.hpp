#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frobcx/monomial.hpp"

namespace frobcx {

/// Monomial ideal held by its unique minimal generating set, sorted ascending
/// lexicographically. The empty set is the zero ideal; the single monomial 1
/// is the unit ideal. Every constructor canonicalizes, so two ideals are equal
/// as ideals exactly when they compare equal.
class MonomialIdeal {
 public:
  MonomialIdeal(int num_vars, std::vector<Monomial> generators);

  static MonomialIdeal zero(int num_vars);
  static MonomialIdeal unit(int num_vars);

  int num_vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

/// Canonical minimal generating set of the ideal generated by gens.
MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// Intersection via pairwise lcms.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// Bracket power a^[q]: every generator exponent scaled by q. q >= 1;
/// overflow is a hard error.
MonomialIdeal bracket_power(const MonomialIdeal& a, Exponent q);

/// Colon ideal (a : b). b must be nonzero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// Membership of a monomial: some generator divides m.
bool contains(const MonomialIdeal& a, const Monomial& m);

/// Ideal containment b subset-of a.
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal number of generators of the quotient A/B, for B a subideal of A:
/// the count of minimal generators of A that lie outside B.
std::int64_t mu_quotient(const MonomialIdeal& a, const MonomialIdeal& b);

/// The same ideal viewed in a ring with `extra` more (unused) variables.
MonomialIdeal pad_variables(const MonomialIdeal& a, int extra);

}  // namespace frobcx
