#pragma once

// Brute-force oracles for group-algebra indicators. They work directly from
// the group table and character values and never touch the integral /
// comultiplication / contraction pipeline they are used to check.

#include "hopfind/builtins.hpp"
#include "hopfind/reps.hpp"

namespace oracles {

using namespace hopfind;

/// (1/|G|) sum_g chi(g^m).
inline CycNum classical_indicator(const GroupTable& g, const Character& chi, unsigned m) {
  CycNum acc;
  for (unsigned x = 0; x < g.order; ++x) acc += chi.values[group_power(g, x, m)];
  return acc.scalar_times(Rational(1, static_cast<int>(g.order)));
}

/// (1/|G|) sum_g chi(g * tau(g) * tau^2(g) * ... * tau^{m-1}(g)) for a group
/// automorphism given as a permutation of elements. m = 2 is the
/// Bump-Ginzburg sum.
inline CycNum twisted_group_indicator(const GroupTable& g, const Character& chi, const std::vector<unsigned>& perm,
                                      unsigned m) {
  CycNum acc;
  for (unsigned x = 0; x < g.order; ++x) {
    unsigned prod = x, cur = x;
    for (unsigned s = 1; s < m; ++s) {
      cur = perm[cur];
      prod = g.mult[prod][cur];
    }
    acc += chi.values[prod];
  }
  return acc.scalar_times(Rational(1, static_cast<int>(g.order)));
}

/// #{ g : g^m = e }, the classical count matching the regular character.
inline unsigned count_mth_roots_of_identity(const GroupTable& g, unsigned m) {
  unsigned count = 0;
  for (unsigned x = 0; x < g.order; ++x)
    if (group_power(g, x, m) == g.identity) ++count;
  return count;
}

}  // namespace oracles
