#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rbsym/canonical.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/rational.hpp"
#include "rbsym/redei_berge.hpp"

namespace rbsym {

using DigraphPair = std::pair<Digraph, Digraph>;
using DigraphTriple = std::tuple<Digraph, Digraph, Digraph>;

[[nodiscard]] inline Digraph canonical_key(const Digraph& x) { return canonicalize(x); }
[[nodiscard]] inline DigraphPair canonical_key(const DigraphPair& k) {
  return {canonicalize(k.first), canonicalize(k.second)};
}
[[nodiscard]] inline DigraphTriple canonical_key(const DigraphTriple& k) {
  return {canonicalize(std::get<0>(k)), canonicalize(std::get<1>(k)), canonicalize(std::get<2>(k))};
}

/// Finite Q-linear combination of isomorphism classes (or tuples of them).
///
/// Every key is replaced by its canonical form on insertion, so equal classes
/// merge and zero coefficients are dropped.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const std::vector<std::pair<Key, Rational>>& terms) {
    for (const auto& [k, c] : terms) add(canonical_key(k), c);
  }

  static LinearCombination basis(const Key& k, const Rational& c = Rational(1)) {
    LinearCombination out;
    out.add(canonical_key(k), c);
    return out;
  }

  [[nodiscard]] const Terms& terms() const& { return terms_; }
  [[nodiscard]] Terms terms() && { return std::move(terms_); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] Rational coefficient(const Key& k) const {
    const auto it = terms_.find(canonical_key(k));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend LinearCombination operator+(const LinearCombination& a, const LinearCombination& b) {
    LinearCombination out = a;
    for (const auto& [k, c] : b.terms_) out.add(k, c);
    return out;
  }
  friend LinearCombination operator-(const LinearCombination& a) { return Rational(-1) * a; }
  friend LinearCombination operator-(const LinearCombination& a, const LinearCombination& b) { return a + (-b); }
  friend LinearCombination operator*(const Rational& s, const LinearCombination& a) {
    LinearCombination out;
    for (const auto& [k, c] : a.terms_) out.add(k, s * c);
    return out;
  }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  /// Accumulates c [k]; `k` must already be canonical.
  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  Terms terms_;
};

using DigraphCombination = LinearCombination<Digraph>;
using TensorCombination = LinearCombination<DigraphPair>;
using TripleTensor = LinearCombination<DigraphTriple>;

/// The unit [empty digraph].
[[nodiscard]] inline DigraphCombination unit() { return DigraphCombination::basis(Digraph()); }

/// Bilinear extension of the digraph product.
[[nodiscard]] inline DigraphCombination product_lin(const DigraphCombination& x, const DigraphCombination& y) {
  DigraphCombination out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add(canonicalize(product(a, b)), ca * cb);
  }
  return out;
}

/// Componentwise product on D (x) D: (a (x) b)(c (x) d) = ac (x) bd.
[[nodiscard]] inline TensorCombination product_lin(const TensorCombination& x, const TensorCombination& y) {
  TensorCombination out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      out.add({canonicalize(product(a.first, b.first)), canonicalize(product(a.second, b.second))}, ca * cb);
    }
  }
  return out;
}

/// Delta([X]) = sum over S subset V of [X|_S] (x) [X|_{V \ S}].
[[nodiscard]] inline TensorCombination coproduct(const DigraphCombination& x) {
  TensorCombination out;
  for (const auto& [g, c] : x.terms()) {
    const VertexSet all = g.vertices();
    for (VertexSet s = 0;; s = (s - all) & all) {
      out.add({canonicalize(restrict_to(g, s)), canonicalize(restrict_to(g, all & ~s))}, c);
      if (s == all) break;
    }
  }
  return out;
}

/// (Delta (x) id) applied to a tensor.
[[nodiscard]] inline TripleTensor coproduct_left(const TensorCombination& t) {
  TripleTensor out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [lr, c2] : coproduct(DigraphCombination::basis(k.first)).terms()) {
      out.add({lr.first, lr.second, k.second}, c * c2);
    }
  }
  return out;
}

/// (id (x) Delta) applied to a tensor.
[[nodiscard]] inline TripleTensor coproduct_right(const TensorCombination& t) {
  TripleTensor out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [lr, c2] : coproduct(DigraphCombination::basis(k.second)).terms()) {
      out.add({k.first, lr.first, lr.second}, c * c2);
    }
  }
  return out;
}

/// a (x) b  ->  b (x) a.
[[nodiscard]] inline TensorCombination swap_factors(const TensorCombination& t) {
  TensorCombination out;
  for (const auto& [k, c] : t.terms()) out.add({k.second, k.first}, c);
  return out;
}

/// epsilon: the coefficient of [empty digraph].
[[nodiscard]] inline Rational counit(const DigraphCombination& x) { return x.coefficient(Digraph()); }

namespace detail {

// S([X]) by peeling the first block off each set composition:
//   T(R) = - sum over nonempty B subset R of [X|_B] . T(R \ B),  T(empty) = [empty],
// so that T(V) = sum over all set compositions of (-1)^k [X|_V1 ... X|_Vk].
inline DigraphCombination takeuchi(const Digraph& x) {
  const VertexSet all = x.vertices();
  std::vector<std::optional<DigraphCombination>> memo(std::size_t{1} << x.size());
  memo[0] = unit();
  auto solve = [&](auto&& self, VertexSet r) -> const DigraphCombination& {
    if (memo[r]) return *memo[r];
    DigraphCombination acc;
    for (VertexSet b = r & (0 - r); b != 0; b = (b - r) & r) {
      const DigraphCombination block = DigraphCombination::basis(restrict_to(x, b), Rational(-1));
      acc = acc + product_lin(block, self(self, r & ~b));
    }
    memo[r] = std::move(acc);
    return *memo[r];
  };
  return solve(solve, all);
}

}  // namespace detail

/// Antipode by Takeuchi's formula, extended linearly.
[[nodiscard]] inline DigraphCombination antipode_takeuchi(const DigraphCombination& x) {
  DigraphCombination out;
  for (const auto& [g, c] : x.terms()) out = out + c * detail::takeuchi(g);
  return out;
}

/// mu o (S (x) id) o Delta; equals epsilon(x) [empty] by the antipode axiom.
[[nodiscard]] inline DigraphCombination antipode_convolution(const DigraphCombination& x) {
  DigraphCombination out;
  std::map<Digraph, DigraphCombination> antipode_of;
  for (const auto& [k, c] : coproduct(x).terms()) {
    auto it = antipode_of.find(k.first);
    if (it == antipode_of.end()) {
      it = antipode_of.emplace(k.first, antipode_takeuchi(DigraphCombination::basis(k.first))).first;
    }
    out = out + c * product_lin(it->second, DigraphCombination::basis(k.second));
  }
  return out;
}

/// Psi of each homogeneous component, keyed by degree.
[[nodiscard]] inline std::map<int, QSymElem> psi_by_degree(const DigraphCombination& x) {
  std::map<int, QSymElem> out;
  for (const auto& [g, c] : x.terms()) {
    if (!c.is_integer()) throw InvalidArgument("psi: coefficient " + c.str() + " is not an integer");
    const QSymElem image = c.to_integer() * u_monomial_via_zeta(g);
    auto [it, inserted] = out.try_emplace(g.size(), image);
    if (!inserted) it->second = it->second + image;
  }
  return out;
}

/// Psi(h) = sum over compositions alpha of zeta_alpha(h) M_alpha for homogeneous h.
[[nodiscard]] inline QSymElem psi(const DigraphCombination& x) {
  const std::map<int, QSymElem> parts = psi_by_degree(x);
  if (parts.empty()) return QSymElem(0, Basis::monomial);
  if (parts.size() > 1) throw InvalidArgument("psi expects a homogeneous combination");
  return parts.begin()->second;
}

}  // namespace rbsym
