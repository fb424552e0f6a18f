#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "rbsym/digraph.hpp"

namespace rbsym {

inline constexpr int kDefaultCanonicalCap = 8;

/// Representative of the isomorphism class of X.
///
/// Each relabeling Y of X is scored by its adjacency bitmask
///   sum over edges (u, v) of 2^((u-1)n + (v-1)),
/// and the relabeling with the numerically smallest mask is returned. The
/// comparison is done row by row from row n down to row 1, which is the same
/// order. Brute force over all n! relabelings with early exit.
[[nodiscard]] inline Digraph canonicalize(const Digraph& x, int cap = kDefaultCanonicalCap) {
  const int n = x.size();
  if (n > cap) {
    throw CapExceeded("canonical form of a " + std::to_string(n) + "-vertex digraph exceeds the cap of " +
                      std::to_string(cap));
  }
  if (n <= 1) return x;

  // old_of[k]: original vertex (0-based) that receives new label k+1.
  std::array<int, kMaxVertices> old_of{};
  std::array<int, kMaxVertices> new_of{};
  std::iota(old_of.begin(), old_of.begin() + n, 0);
  Digraph::Rows best = x.rows();
  Digraph::Rows candidate{};

  do {
    for (int k = 0; k < n; ++k) new_of[old_of[k]] = k;
    bool better = false;
    bool decided = false;
    for (int k = n - 1; k >= 0; --k) {
      Digraph::Row row = 0;
      for (Digraph::Row r = x.rows()[old_of[k]]; r != 0; r &= r - 1) row |= Digraph::Row{1} << new_of[std::countr_zero(r)];
      candidate[k] = row;
      if (!decided && row != best[k]) {
        decided = true;
        better = row < best[k];
        if (!better) break;
      }
    }
    if (better) best = candidate;
  } while (std::next_permutation(old_of.begin(), old_of.begin() + n));
  return Digraph::from_rows(n, best);
}

}  // namespace rbsym
