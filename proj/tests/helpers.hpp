#pragma once

#include <vector>

#include "frobcx/frobenius.hpp"
#include "frobcx/stanley_reisner.hpp"

// Shared shorthand for building monomials and ideals in tests.

inline frobcx::Monomial mono(std::vector<frobcx::Exponent> e) {
  return frobcx::Monomial(std::move(e));
}

inline frobcx::MonomialIdeal ideal_of(int n,
                                      std::vector<std::vector<frobcx::Exponent>> rows) {
  std::vector<frobcx::Monomial> gens;
  for (auto& r : rows) gens.push_back(frobcx::Monomial(std::move(r)));
  return frobcx::MonomialIdeal(n, std::move(gens));
}

// Exponent codes: 0 -> 0, 1 -> q-1, 2 -> q. A code row doubles as the literal
// exponent vector at q = 2.
inline frobcx::Monomial sym(const std::vector<int>& code, frobcx::Exponent q) {
  std::vector<frobcx::Exponent> e;
  for (int c : code) e.push_back(c == 2 ? q : (c == 1 ? q - 1 : 0));
  return frobcx::Monomial(std::move(e));
}

inline frobcx::MonomialIdeal sym_ideal(int n, const std::vector<std::vector<int>>& codes,
                                       frobcx::Exponent q) {
  std::vector<frobcx::Monomial> gens;
  for (const auto& c : codes) gens.push_back(sym(c, q));
  return frobcx::MonomialIdeal(n, std::move(gens));
}

// (x1x5, x2x5, x2x3, x2x4) in five variables: four minimal generators of the
// colon live outside I^[q] and the full product, so mu = 4.
inline frobcx::SquareFreeIdeal example_a() {
  return frobcx::SquareFreeIdeal(ideal_of(5, {{1, 0, 0, 0, 1},
                                              {0, 1, 0, 0, 1},
                                              {0, 1, 1, 0, 0},
                                              {0, 1, 0, 1, 0}}));
}

// Colon generators of example_a as exponent codes, any q >= 2.
inline const std::vector<std::vector<int>> kExampleAColon = {
    {2, 0, 0, 0, 2}, {0, 2, 0, 0, 2}, {0, 2, 2, 0, 0},
    {0, 2, 0, 2, 0}, {1, 1, 0, 0, 2}, {0, 2, 1, 1, 1},
    {1, 1, 0, 2, 1}, {1, 1, 2, 0, 1}, {1, 1, 1, 1, 1}};

inline const std::vector<std::vector<int>> kExampleAJq = {
    {1, 1, 0, 0, 2}, {0, 2, 1, 1, 1}, {1, 1, 0, 2, 1}, {1, 1, 2, 0, 1}};

// (x1x2, x1x3, x2x4) in four variables, mu = 2, minimal support set.
inline frobcx::SquareFreeIdeal example_b() {
  return frobcx::SquareFreeIdeal(
      ideal_of(4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
}

inline const std::vector<std::vector<int>> kExampleBJq = {{2, 1, 1, 0}, {1, 2, 0, 1}};
