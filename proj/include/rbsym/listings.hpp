#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/checked.hpp"
#include "rbsym/composition.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/parallel.hpp"

namespace rbsym {

/// Listing enumeration refuses digraphs above this many vertices by default.
inline constexpr int kDefaultEnumerationCap = 12;
/// Hamiltonian counting switches from enumeration to the subset DP above this.
inline constexpr int kEnumerationCrossover = 8;

struct EnumerationOptions {
  ExecPolicy exec{};
  int cap = kDefaultEnumerationCap;
};

inline void check_enumeration_cap(int n, int cap) {
  if (n > cap) {
    throw CapExceeded("listing enumeration on " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(cap));
  }
}

/// A V-listing: the order in which all vertices 1..n are visited.
class Listing {
 public:
  Listing() = default;
  explicit Listing(std::vector<Vertex> order) : order_(std::move(order)) {
    VertexSet seen = 0;
    const int n = static_cast<int>(order_.size());
    for (Vertex v : order_) {
      if (v < 1 || v > n || (seen & vertex_bit(v)) != 0) {
        throw InvalidArgument("listing is not a permutation of 1.." + std::to_string(n));
      }
      seen |= vertex_bit(v);
    }
  }
  Listing(std::initializer_list<Vertex> order) : Listing(std::vector<Vertex>(order)) {}

  [[nodiscard]] int size() const { return static_cast<int>(order_.size()); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return order_[i]; }
  [[nodiscard]] const std::vector<Vertex>& order() const& { return order_; }
  [[nodiscard]] std::vector<Vertex> order() && { return std::move(order_); }

  friend bool operator==(const Listing&, const Listing&) = default;

 private:
  std::vector<Vertex> order_;
};

[[nodiscard]] inline Listing reverse(const Listing& sigma) {
  std::vector<Vertex> r(sigma.order().rbegin(), sigma.order().rend());
  return Listing(std::move(r));
}

[[nodiscard]] inline PositionMask descent_mask(const Digraph& x, const Vertex* order, int n) {
  PositionMask m = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (x.out_row(order[i]) & vertex_bit(order[i + 1])) m |= PositionMask{1} << i;
  }
  return m;
}

/// XDes(sigma) = {i : (sigma_i, sigma_{i+1}) in E}.
[[nodiscard]] inline DescentSet x_descent_set(const Digraph& x, const Listing& sigma) {
  if (sigma.size() != x.size()) throw InvalidArgument("listing length does not match the vertex count");
  return {x.size(), descent_mask(x, sigma.order().data(), sigma.size())};
}

/// Calls visit(order, n) for every listing of 1..n whose first vertex is
/// `first`, in lexicographic order.
template <class Visit>
void for_each_listing_starting_with(int n, Vertex first, Visit&& visit) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  order[0] = first;
  for (int i = 1, v = 1; i < n; ++i, ++v) {
    if (v == first) ++v;
    order[static_cast<std::size_t>(i)] = v;
  }
  do {
    visit(order.data(), n);
  } while (std::next_permutation(order.begin() + 1, order.end()));
}

/// Calls visit(order, n) for every listing of 1..n in lexicographic order
/// (the single empty listing when n = 0).
template <class Visit>
void for_each_listing(int n, Visit&& visit) {
  if (n == 0) {
    visit(static_cast<const Vertex*>(nullptr), 0);
    return;
  }
  for (Vertex first = 1; first <= n; ++first) for_each_listing_starting_with(n, first, visit);
}

/// lambda_I(X) = #{sigma : XDes(sigma) = I}, indexed by the mask of I.
///
/// The listing space is split by first vertex across workers; per-task
/// tallies are summed in task order.
[[nodiscard]] inline std::vector<Integer> descent_set_counts(const Digraph& x, const EnumerationOptions& opts = {}) {
  const int n = x.size();
  check_enumeration_cap(n, opts.cap);
  const std::size_t width = std::size_t{1} << std::max(n - 1, 0);
  if (n == 0) return {1};
  std::vector<std::vector<Integer>> partial(static_cast<std::size_t>(n), std::vector<Integer>(width, 0));
  parallel_for(static_cast<std::size_t>(n), opts.exec.threads, [&](std::size_t task) {
    auto& tally = partial[task];
    for_each_listing_starting_with(n, static_cast<Vertex>(task) + 1,
                                   [&](const Vertex* order, int len) { ++tally[descent_mask(x, order, len)]; });
  });
  std::vector<Integer> total(width, 0);
  for (const auto& tally : partial) {
    for (std::size_t i = 0; i < width; ++i) total[i] = checked::add(total[i], tally[i]);
  }
  return total;
}

enum class HamMethod {
  automatic,            ///< enumeration up to kEnumerationCrossover vertices, DP above
  enumerate,            ///< walk all n! listings
  dynamic_programming,  ///< bitmask DP over (visited set, last vertex)
};

/// For every vertex subset S, the number of Hamiltonian paths of X|_S
/// (1 for S = empty). Runs in O(2^n n^2).
[[nodiscard]] inline std::vector<Integer> hamiltonian_paths_by_subset(const Digraph& x) {
  const int n = x.size();
  const std::size_t states = std::size_t{1} << n;
  // paths[S * n + v]: paths covering S that end at vertex v+1.
  std::vector<Integer> paths(states * static_cast<std::size_t>(std::max(n, 1)), 0);
  std::vector<Integer> per_subset(states, 0);
  per_subset[0] = 1;
  for (int v = 0; v < n; ++v) paths[(std::size_t{1} << v) * n + v] = 1;
  for (std::size_t s = 1; s < states; ++s) {
    Integer total = 0;
    for (VertexSet r = static_cast<VertexSet>(s); r != 0; r &= r - 1) {
      const int last = std::countr_zero(r);
      const Integer here = paths[s * n + last];
      if (here == 0) continue;
      total = checked::add(total, here);
      const VertexSet ext = x.out_row(last + 1) & ~static_cast<VertexSet>(s);
      for (VertexSet e = ext; e != 0; e &= e - 1) {
        const int next = std::countr_zero(e);
        Integer& slot = paths[(s | (std::size_t{1} << next)) * n + next];
        slot = checked::add(slot, here);
      }
    }
    per_subset[s] = total;
  }
  return per_subset;
}

[[nodiscard]] inline Integer count_hamiltonian_paths_enumerate(const Digraph& x, const EnumerationOptions& opts = {}) {
  const int n = x.size();
  check_enumeration_cap(n, opts.cap);
  if (n == 0) return 1;
  const PositionMask all = full_position_mask(n);
  std::vector<Integer> partial(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), opts.exec.threads, [&](std::size_t task) {
    Integer c = 0;
    for_each_listing_starting_with(n, static_cast<Vertex>(task) + 1, [&](const Vertex* order, int len) {
      if (descent_mask(x, order, len) == all) ++c;
    });
    partial[task] = c;
  });
  return std::accumulate(partial.begin(), partial.end(), Integer{0},
                         [](Integer a, Integer b) { return checked::add(a, b); });
}

[[nodiscard]] inline Integer count_hamiltonian_paths(const Digraph& x, HamMethod method = HamMethod::automatic,
                                                     const EnumerationOptions& opts = {}) {
  if (method == HamMethod::automatic) {
    method = x.size() <= kEnumerationCrossover ? HamMethod::enumerate : HamMethod::dynamic_programming;
  }
  if (method == HamMethod::enumerate) return count_hamiltonian_paths_enumerate(x, opts);
  return hamiltonian_paths_by_subset(x).back();
}

/// zeta([X]) = #{sigma : XDes(sigma) is empty}, i.e. the Hamiltonian paths of the complement.
[[nodiscard]] inline Integer zeta(const Digraph& x, HamMethod method = HamMethod::automatic,
                                  const EnumerationOptions& opts = {}) {
  if (method == HamMethod::automatic) {
    method = x.size() <= kEnumerationCrossover ? HamMethod::enumerate : HamMethod::dynamic_programming;
  }
  if (method == HamMethod::dynamic_programming) return hamiltonian_paths_by_subset(complement(x)).back();
  const int n = x.size();
  check_enumeration_cap(n, opts.cap);
  if (n == 0) return 1;
  std::vector<Integer> partial(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), opts.exec.threads, [&](std::size_t task) {
    Integer c = 0;
    for_each_listing_starting_with(n, static_cast<Vertex>(task) + 1, [&](const Vertex* order, int len) {
      if (descent_mask(x, order, len) == 0) ++c;
    });
    partial[task] = c;
  });
  return std::accumulate(partial.begin(), partial.end(), Integer{0},
                         [](Integer a, Integer b) { return checked::add(a, b); });
}

/// zeta([X|_S]) for every vertex subset S.
[[nodiscard]] inline std::vector<Integer> zeta_by_subset(const Digraph& x) {
  return hamiltonian_paths_by_subset(complement(x));
}

/// An ordered partition (V_1, ..., V_k) of 1..n into nonempty blocks.
class SetComposition {
 public:
  SetComposition() = default;
  SetComposition(int n, std::vector<VertexSet> blocks) : n_(n), blocks_(std::move(blocks)) {
    VertexSet seen = 0;
    for (VertexSet b : blocks_) {
      if (b == 0) throw InvalidArgument("set composition has an empty block");
      if ((b & seen) != 0) throw InvalidArgument("set composition blocks overlap");
      seen |= b;
    }
    if (seen != full_vertex_set(n)) throw InvalidArgument("set composition does not cover 1..n");
  }
  SetComposition(int n, std::initializer_list<std::initializer_list<Vertex>> blocks) : SetComposition(n, masks(blocks)) {}

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] std::size_t length() const { return blocks_.size(); }
  [[nodiscard]] const std::vector<VertexSet>& blocks() const& { return blocks_; }
  [[nodiscard]] std::vector<VertexSet> blocks() && { return std::move(blocks_); }

  /// type(F) = (|V_1|, ..., |V_k|).
  [[nodiscard]] Composition type() const {
    std::vector<int> parts;
    parts.reserve(blocks_.size());
    for (VertexSet b : blocks_) parts.push_back(std::popcount(b));
    return Composition(std::move(parts));
  }

  friend bool operator==(const SetComposition&, const SetComposition&) = default;
  friend auto operator<=>(const SetComposition&, const SetComposition&) = default;

 private:
  static std::vector<VertexSet> masks(std::initializer_list<std::initializer_list<Vertex>> blocks) {
    std::vector<VertexSet> out;
    for (const auto& b : blocks) {
      VertexSet m = 0;
      for (Vertex v : b) {
        if (v < 1 || v > kMaxVertices) throw InvalidArgument("vertex id out of range");
        m |= vertex_bit(v);
      }
      out.push_back(m);
    }
    return out;
  }

  int n_ = 0;
  std::vector<VertexSet> blocks_;
};

/// Calls visit(blocks) for every set composition of the vertex set `universe`,
/// blocks given as a vector of masks in order.
template <class Visit>
void for_each_set_composition(VertexSet universe, Visit&& visit) {
  std::vector<VertexSet> blocks;
  auto rec = [&](auto&& self, VertexSet rest) -> void {
    if (rest == 0) {
      visit(static_cast<const std::vector<VertexSet>&>(blocks));
      return;
    }
    // Nonempty submasks of rest, in increasing numeric order.
    for (VertexSet b = rest & (0 - rest);; b = (b - rest) & rest) {
      if (b == 0) break;
      blocks.push_back(b);
      self(self, rest & ~b);
      blocks.pop_back();
    }
  };
  rec(rec, universe);
}

/// f : V -> positive integers, stored as colors[v-1].
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_) {
      if (c < 1) throw InvalidArgument("colors must be positive integers");
    }
  }
  Coloring(std::initializer_list<int> colors) : Coloring(std::vector<int>(colors)) {}

  [[nodiscard]] int size() const { return static_cast<int>(colors_.size()); }
  [[nodiscard]] int operator()(Vertex v) const { return colors_[static_cast<std::size_t>(v - 1)]; }
  [[nodiscard]] const std::vector<int>& colors() const& { return colors_; }
  [[nodiscard]] std::vector<int> colors() && { return std::move(colors_); }

 private:
  std::vector<int> colors_;
};

/// delta_f(sigma): colors weakly increase along sigma and strictly increase
/// across every consecutive pair that is an edge of X.
[[nodiscard]] inline bool is_friendly(const Digraph& x, const Coloring& f, const Listing& sigma) {
  if (f.size() != x.size() || sigma.size() != x.size()) {
    throw InvalidArgument("coloring and listing must cover the vertex set");
  }
  for (int j = 0; j + 1 < sigma.size(); ++j) {
    const int a = f(sigma[j]);
    const int b = f(sigma[j + 1]);
    if (a > b) return false;
    if (a == b && x.has_edge(sigma[j], sigma[j + 1])) return false;
  }
  return true;
}

/// The color level sets of f ordered by increasing color.
[[nodiscard]] inline SetComposition compositional_type(const Coloring& f) {
  std::map<int, VertexSet> levels;
  for (Vertex v = 1; v <= f.size(); ++v) levels[f(v)] |= vertex_bit(v);
  std::vector<VertexSet> blocks;
  for (const auto& [color, block] : levels) blocks.push_back(block);
  return {f.size(), std::move(blocks)};
}

/// A coloring of compositional type F: block j gets color j.
[[nodiscard]] inline Coloring representative_coloring(const SetComposition& fc) {
  std::vector<int> colors(static_cast<std::size_t>(fc.degree()), 0);
  int color = 1;
  for (VertexSet b : fc.blocks()) {
    for (VertexSet r = b; r != 0; r &= r - 1) colors[static_cast<std::size_t>(std::countr_zero(r))] = color;
    ++color;
  }
  return Coloring(std::move(colors));
}

/// |Sigma_V(F, X)| as the product of zeta over the restrictions to the blocks.
[[nodiscard]] inline Integer count_friendly_listings(const Digraph& x, const SetComposition& fc) {
  if (fc.degree() != x.size()) throw InvalidArgument("set composition degree does not match the digraph");
  Integer c = 1;
  for (VertexSet b : fc.blocks()) c = checked::mul(c, zeta(restrict_to(x, b)));
  return c;
}

/// |Sigma_V(F, X)| by testing every listing against an F-coloring.
[[nodiscard]] inline Integer count_friendly_listings_direct(const Digraph& x, const SetComposition& fc,
                                                            const EnumerationOptions& opts = {}) {
  if (fc.degree() != x.size()) throw InvalidArgument("set composition degree does not match the digraph");
  check_enumeration_cap(x.size(), opts.cap);
  const Coloring f = representative_coloring(fc);
  Integer c = 0;
  for_each_listing(x.size(), [&](const Vertex* order, int n) {
    if (is_friendly(x, f, Listing(std::vector<Vertex>(order, order + n)))) ++c;
  });
  return c;
}

}  // namespace rbsym
