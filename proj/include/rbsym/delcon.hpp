#pragma once

#include <bit>
#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "rbsym/canonical.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/polynomial.hpp"

namespace rbsym {

enum class PivotRule {
  lex,         ///< lexicographically smallest (source, target)
  max_degree,  ///< largest deg(u) + deg(v) in the underlying graph, ties by lex
};

struct DelconOptions {
  PivotRule pivot = PivotRule::lex;
  /// Memo keys are canonical forms up to this many vertices, labeled digraphs above.
  int canonical_cutover = kDefaultCanonicalCap;
  std::size_t memo_capacity = std::size_t{1} << 22;
  /// Overrides the pivot of the top-level call only; must be an edge.
  std::optional<Edge> first_pivot;
};

[[nodiscard]] inline Edge choose_pivot(const Digraph& x, PivotRule rule) {
  const std::vector<Edge> edges = x.edges();
  if (edges.empty()) throw InvalidArgument("digraph has no edge to pivot on");
  if (rule == PivotRule::lex) return edges.front();
  std::vector<int> degree(static_cast<std::size_t>(x.size()) + 1, 0);
  for (const auto& [u, v] : underlying_graph(x)) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  Edge best = edges.front();
  int best_score = -1;
  for (const Edge& e : edges) {
    const int score = degree[static_cast<std::size_t>(e.source)] + degree[static_cast<std::size_t>(e.target)];
    if (score > best_score) {
      best = e;
      best_score = score;
    }
  }
  return best;
}

/// Digraph -> polynomial cache with atomic get-or-insert; safe to share
/// between threads. Inserting beyond the capacity throws CapExceeded.
class PolynomialMemo {
 public:
  explicit PolynomialMemo(std::size_t capacity) : capacity_(capacity) {}

  [[nodiscard]] std::optional<Polynomial> find(const Digraph& key) const {
    const std::shared_lock lock(mutex_);
    const auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns the stored value, which is `value` unless another thread won the race.
  Polynomial get_or_insert(const Digraph& key, Polynomial value) {
    const std::unique_lock lock(mutex_);
    const auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    if (map_.size() >= capacity_) {
      throw CapExceeded("deletion-contraction memo capacity of " + std::to_string(capacity_) + " exhausted");
    }
    return map_.emplace(key, std::move(value)).first->second;
  }

  [[nodiscard]] std::size_t size() const {
    const std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Digraph, Polynomial> map_;
};

/// u_X by the recursion u_X = u_{X \ e} - u_{X / e}, bottoming out at
/// edgeless digraphs on k vertices, whose polynomial is m(m+1)...(m+k-1).
class DeletionContraction {
 public:
  explicit DeletionContraction(DelconOptions opts = {}) : opts_(opts), memo_(opts.memo_capacity) {}

  [[nodiscard]] Polynomial operator()(const Digraph& x) {
    if (opts_.first_pivot) {
      if (!x.has_edge(*opts_.first_pivot)) {
        throw InvalidArgument("first pivot (" + std::to_string(opts_.first_pivot->source) + "," +
                              std::to_string(opts_.first_pivot->target) + ") is not an edge");
      }
      return split(x, *opts_.first_pivot);
    }
    return solve(x);
  }

  [[nodiscard]] std::size_t memo_size() const { return memo_.size(); }

 private:
  Polynomial solve(const Digraph& x) {
    if (x.edge_count() == 0) return edgeless(x.size());
    const Digraph key = x.size() <= opts_.canonical_cutover ? canonicalize(x, opts_.canonical_cutover) : x;
    if (auto hit = memo_.find(key)) return *hit;
    // Pivot on the key so that isomorphic inputs recurse identically.
    return memo_.get_or_insert(key, split(key, choose_pivot(key, opts_.pivot)));
  }

  Polynomial split(const Digraph& x, const Edge& e) { return solve(delete_edge(x, e)) - solve(contract_edge(x, e)); }

  const Polynomial& edgeless(int k) {
    while (static_cast<int>(rising_.size()) <= k) rising_.push_back(rising_factorial(static_cast<int>(rising_.size())));
    return rising_[static_cast<std::size_t>(k)];
  }

  DelconOptions opts_;
  PolynomialMemo memo_;
  std::vector<Polynomial> rising_;
};

[[nodiscard]] inline Polynomial rb_polynomial_delcon(const Digraph& x, const DelconOptions& opts = {}) {
  DeletionContraction solver(opts);
  return solver(x);
}

}  // namespace rbsym
