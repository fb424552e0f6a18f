#pragma once

#include <bit>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/checked.hpp"
#include "rbsym/composition.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/listings.hpp"
#include "rbsym/polynomial.hpp"
#include "rbsym/qsym.hpp"

namespace rbsym {

/// The (subset, composition-prefix) DP is O(4^n) time and O(3^n) memory.
inline constexpr int kDefaultSubsetDpCap = 14;

/// Coefficients indexed by the mask of I subset [n-1].
struct CoefficientTable {
  int degree = 0;
  std::vector<Integer> values;

  [[nodiscard]] Integer operator[](PositionMask i) const { return values[i]; }
  [[nodiscard]] Integer operator[](const DescentSet& s) const { return values[s.bits()]; }
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// lambda_I(X) = #{sigma : XDes(sigma) = I}, by enumerating all listings.
[[nodiscard]] inline CoefficientTable lambda_table(const Digraph& x, const EnumerationOptions& opts = {}) {
  return {x.size(), descent_set_counts(x, opts)};
}

/// mu_I(X) = zeta_{comp(I)}([X]): the sum over set compositions of type
/// comp(I) of the products of zeta over the blocks.
///
/// DP over pairs (S, J): S is the union of the blocks placed so far and J is
/// the partial-sum set of their sizes, a subset of [|S|-1]. Placing a block B
/// next moves (S, J) to (S + B, J + {|S|}) with weight zeta(X|_B).
[[nodiscard]] inline CoefficientTable mu_table(const Digraph& x, int cap = kDefaultSubsetDpCap) {
  const int n = x.size();
  if (n > cap) {
    throw CapExceeded("subset DP on " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(cap));
  }
  if (n == 0) return {0, {1}};
  const std::vector<Integer> zeta_of = zeta_by_subset(x);
  const VertexSet all = full_vertex_set(n);
  const std::size_t states = std::size_t{1} << n;

  // Rows are allocated on first write and released once expanded.
  std::vector<std::vector<Integer>> table(states);
  table[0] = {1};
  for (std::size_t s = 0; s < states; ++s) {
    const VertexSet placed = static_cast<VertexSet>(s);
    const int size = std::popcount(placed);
    const PositionMask cut = size == 0 ? 0 : PositionMask{1} << (size - 1);
    const VertexSet rest = all & ~placed;
    for (std::size_t j = 0; j < table[s].size(); ++j) {
      const Integer here = table[s][j];
      if (here == 0) continue;
      for (VertexSet b = rest & (0 - rest); b != 0; b = (b - rest) & rest) {
        std::vector<Integer>& target = table[placed | b];
        if (target.empty()) target.assign(std::size_t{1} << (size + std::popcount(b) - 1), 0);
        Integer& slot = target[j | cut];
        slot = checked::add(slot, checked::mul(here, zeta_of[b]));
      }
    }
    if (placed != all) std::vector<Integer>().swap(table[s]);
  }
  return {n, std::move(table[all])};
}

/// U_X = sum over listings of F_{XDes(sigma)}, by enumeration.
[[nodiscard]] inline QSymElem u_fundamental(const Digraph& x, const EnumerationOptions& opts = {}) {
  return QSymElem::from_dense(x.size(), Basis::fundamental, descent_set_counts(x, opts));
}

/// U_X in the M basis via the character zeta (the canonical morphism Psi).
[[nodiscard]] inline QSymElem u_monomial_via_zeta(const Digraph& x, int cap = kDefaultSubsetDpCap) {
  return QSymElem::from_dense(x.size(), Basis::monomial, mu_table(x, cap).values);
}

/// Every set composition F of the vertex set with |Sigma_V(F, X)|, in
/// enumeration order (blocks as increasing submasks).
[[nodiscard]] inline std::vector<std::pair<SetComposition, Integer>> friendly_expansion(
    const Digraph& x, int cap = kDefaultEnumerationCap) {
  check_enumeration_cap(x.size(), cap);
  const std::vector<Integer> zeta_of = zeta_by_subset(x);
  std::vector<std::pair<SetComposition, Integer>> out;
  for_each_set_composition(x.vertices(), [&](const std::vector<VertexSet>& blocks) {
    Integer c = 1;
    for (VertexSet b : blocks) c = checked::mul(c, zeta_of[b]);
    out.emplace_back(SetComposition(x.size(), blocks), c);
  });
  return out;
}

/// Sums a friendly expansion by type(F), giving M-basis coefficients.
[[nodiscard]] inline QSymElem aggregate_by_type(int degree,
                                                const std::vector<std::pair<SetComposition, Integer>>& expansion) {
  QSymElem::Terms terms;
  for (const auto& [fc, count] : expansion) {
    if (fc.degree() != degree) throw InvalidArgument("set composition of the wrong degree");
    Integer& slot = terms[subset_of_comp(fc.type()).bits()];
    slot = checked::add(slot, count);
  }
  return {degree, Basis::monomial, terms};
}

/// u_X(m) = mu_1 C(m,1) + ... + mu_n C(m,n) with mu_k the sum of mu_I over |I| = k-1.
[[nodiscard]] inline Polynomial rb_polynomial_binomial(const Digraph& x, int cap = kDefaultSubsetDpCap) {
  Polynomial p = principal_specialization(u_monomial_via_zeta(x, cap));
  if (!p.is_integral()) {
    throw Error("Redei-Berge polynomial " + p.to_string() + " has a non-integer coefficient");
  }
  return p;
}

}  // namespace rbsym
