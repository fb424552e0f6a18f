#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/checked.hpp"

#ifndef RBSYM_MAX_VERTICES
#define RBSYM_MAX_VERTICES 16
#endif

namespace rbsym {

/// Compile-time vertex cap; adjacency rows are 32-bit masks.
inline constexpr int kMaxVertices = RBSYM_MAX_VERTICES;
static_assert(kMaxVertices >= 1 && kMaxVertices <= 32, "adjacency rows are 32-bit");

/// Vertex ids are 1-based.
using Vertex = int;

/// Set of vertices as a bitmask; vertex v is bit v-1.
using VertexSet = std::uint32_t;

[[nodiscard]] constexpr VertexSet vertex_bit(Vertex v) { return VertexSet{1} << (v - 1); }
[[nodiscard]] constexpr VertexSet full_vertex_set(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

struct Edge {
  Vertex source = 0;
  Vertex target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An unordered vertex pair {u, v} stored with u < v.
using UndirectedEdge = std::pair<Vertex, Vertex>;

/// Loop-free labeled digraph on the vertex set 1..n.
///
/// Stored as a dense adjacency matrix of bit rows: bit v-1 of row u-1 is set
/// iff (u, v) is an edge. Values are immutable after construction.
class Digraph {
 public:
  using Row = std::uint32_t;
  using Rows = std::array<Row, kMaxVertices>;

  Digraph() = default;

  /// Edgeless digraph on n vertices.
  explicit Digraph(int n) : n_(n) { check_size(n); }

  Digraph(int n, std::span<const Edge> edges) : Digraph(n) {
    for (const Edge& e : edges) {
      check_endpoints(e);
      Row& row = rows_[e.source - 1];
      if (row & vertex_bit(e.target)) {
        throw InvalidArgument("duplicate edge (" + std::to_string(e.source) + "," +
                              std::to_string(e.target) + ")");
      }
      row |= vertex_bit(e.target);
    }
  }

  Digraph(int n, std::initializer_list<Edge> edges)
      : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rejects loops and bits outside 1..n.
  static Digraph from_rows(int n, const Rows& rows) {
    Digraph g(n);
    const VertexSet all = full_vertex_set(n);
    for (int u = 0; u < kMaxVertices; ++u) {
      if (rows[u] == 0) continue;
      if (u >= n || (rows[u] & ~all) != 0) throw InvalidArgument("adjacency row outside the vertex range");
      if (rows[u] & vertex_bit(u + 1)) throw InvalidArgument("loop at vertex " + std::to_string(u + 1));
    }
    g.rows_ = rows;
    return g;
  }

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] VertexSet vertices() const { return full_vertex_set(n_); }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
    return u >= 1 && u <= n_ && v >= 1 && v <= n_ && (rows_[u - 1] & vertex_bit(v)) != 0;
  }
  [[nodiscard]] bool has_edge(const Edge& e) const { return has_edge(e.source, e.target); }

  /// Out-neighbourhood of u as a vertex mask.
  [[nodiscard]] Row out_row(Vertex u) const { return rows_[u - 1]; }
  [[nodiscard]] const Rows& rows() const { return rows_; }

  [[nodiscard]] std::size_t edge_count() const {
    std::size_t c = 0;
    for (int u = 0; u < n_; ++u) c += static_cast<std::size_t>(std::popcount(rows_[u]));
    return c;
  }

  /// Edges in lexicographic (source, target) order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 1; u <= n_; ++u) {
      for (Row r = rows_[u - 1]; r != 0; r &= r - 1) out.push_back({u, std::countr_zero(r) + 1});
    }
    return out;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;
  friend auto operator<=>(const Digraph&, const Digraph&) = default;

  static void check_size(int n) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    if (n > kMaxVertices) {
      throw CapExceeded("vertex count " + std::to_string(n) + " exceeds the compiled cap of " +
                        std::to_string(kMaxVertices));
    }
  }

 private:
  void check_endpoints(const Edge& e) const {
    if (e.source < 1 || e.source > n_ || e.target < 1 || e.target > n_) {
      throw InvalidArgument("edge (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                            ") has an endpoint outside 1.." + std::to_string(n_));
    }
    if (e.source == e.target) throw InvalidArgument("loop at vertex " + std::to_string(e.source));
  }

  int n_ = 0;
  Rows rows_{};
};

[[nodiscard]] inline Digraph complement(const Digraph& x) {
  Digraph::Rows rows{};
  const VertexSet all = x.vertices();
  for (int u = 0; u < x.size(); ++u) rows[u] = ~x.rows()[u] & all & ~vertex_bit(u + 1);
  return Digraph::from_rows(x.size(), rows);
}

[[nodiscard]] inline Digraph opposite(const Digraph& x) {
  Digraph::Rows rows{};
  for (const Edge& e : x.edges()) rows[e.target - 1] |= vertex_bit(e.source);
  return Digraph::from_rows(x.size(), rows);
}

/// Induced digraph together with the original label of each new vertex.
struct Restriction {
  Digraph graph;
  std::vector<Vertex> original;  ///< original[i] is the old label of new vertex i+1
};

/// Induced digraph on S, relabeled order-preservingly to 1..|S|.
[[nodiscard]] inline Restriction restrict_with_labels(const Digraph& x, VertexSet s) {
  if ((s & ~x.vertices()) != 0) throw InvalidArgument("restriction set contains a vertex outside 1..n");
  Restriction out{Digraph(std::popcount(s)), {}};
  std::array<int, kMaxVertices> new_label{};
  for (VertexSet r = s; r != 0; r &= r - 1) {
    const Vertex v = std::countr_zero(r) + 1;
    out.original.push_back(v);
    new_label[v - 1] = static_cast<int>(out.original.size());
  }
  Digraph::Rows rows{};
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Digraph::Row r = x.out_row(out.original[i]) & s; r != 0; r &= r - 1) {
      rows[i] |= vertex_bit(new_label[std::countr_zero(r)]);
    }
  }
  out.graph = Digraph::from_rows(static_cast<int>(out.original.size()), rows);
  return out;
}

[[nodiscard]] inline Digraph restrict_to(const Digraph& x, VertexSet s) { return restrict_with_labels(x, s).graph; }

[[nodiscard]] inline Digraph restrict_to(const Digraph& x, std::span<const Vertex> s) {
  VertexSet mask = 0;
  for (Vertex v : s) {
    if (v < 1 || v > x.size()) throw InvalidArgument("restriction set contains vertex " + std::to_string(v));
    mask |= vertex_bit(v);
  }
  return restrict_to(x, mask);
}

/// X·Y: Y's vertices are shifted by n_X and every X-vertex points to every Y-vertex.
[[nodiscard]] inline Digraph product(const Digraph& x, const Digraph& y) {
  const int n = x.size() + y.size();
  Digraph::check_size(n);
  Digraph::Rows rows{};
  const VertexSet y_block = full_vertex_set(n) & ~x.vertices();
  for (int u = 0; u < x.size(); ++u) rows[u] = x.rows()[u] | y_block;
  for (int u = 0; u < y.size(); ++u) rows[x.size() + u] = y.rows()[u] << x.size();
  return Digraph::from_rows(n, rows);
}

[[nodiscard]] inline Digraph delete_edge(const Digraph& x, const Edge& e) {
  if (!x.has_edge(e)) {
    throw InvalidArgument("cannot delete (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                          "): not an edge");
  }
  Digraph::Rows rows = x.rows();
  rows[e.source - 1] &= ~vertex_bit(e.target);
  return Digraph::from_rows(x.size(), rows);
}

/// X/e for e = (u, v). The merged vertex takes label min(u, v) and inherits the
/// in-edges of u and the out-edges of v; other labels are compacted in order.
[[nodiscard]] inline Digraph contract_edge(const Digraph& x, const Edge& e) {
  if (!x.has_edge(e)) {
    throw InvalidArgument("cannot contract (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                          "): not an edge");
  }
  const Vertex u = e.source;
  const Vertex v = e.target;
  const Vertex merged = std::min(u, v);
  const Vertex dropped = std::max(u, v);
  auto relabel = [&](Vertex w) { return w < dropped ? w : w - 1; };

  Digraph::Rows rows{};
  for (Vertex w = 1; w <= x.size(); ++w) {
    if (w == u || w == v) continue;
    const int nw = relabel(w);
    for (Digraph::Row r = x.out_row(w); r != 0; r &= r - 1) {
      const Vertex t = std::countr_zero(r) + 1;
      if (t == v) continue;
      rows[nw - 1] |= vertex_bit(t == u ? merged : relabel(t));
    }
    if (x.has_edge(v, w)) rows[merged - 1] |= vertex_bit(nw);
  }
  return Digraph::from_rows(x.size() - 1, rows);
}

[[nodiscard]] inline std::set<UndirectedEdge> underlying_graph(const Digraph& x) {
  std::set<UndirectedEdge> out;
  for (const Edge& e : x.edges()) out.emplace(std::min(e.source, e.target), std::max(e.source, e.target));
  return out;
}

[[nodiscard]] inline bool is_tournament(const Digraph& x) {
  for (Vertex u = 1; u <= x.size(); ++u) {
    for (Vertex v = u + 1; v <= x.size(); ++v) {
      if (x.has_edge(u, v) == x.has_edge(v, u)) return false;
    }
  }
  return true;
}

[[nodiscard]] inline Digraph complete_digraph(int n) { return complement(Digraph(n)); }

}  // namespace rbsym

template <>
struct std::hash<rbsym::Digraph> {
  std::size_t operator()(const rbsym::Digraph& g) const noexcept {
    // FNV-1a over the rows in use.
    std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(g.size());
    for (int u = 0; u < g.size(); ++u) {
      h ^= g.rows()[u];
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
