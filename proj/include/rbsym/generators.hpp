#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rbsym/digraph.hpp"

namespace rbsym {

enum class GeneratorKind {
  empty,              ///< D_n, no edges
  complete,           ///< all n(n-1) ordered pairs
  path,               ///< 1 -> 2 -> ... -> n
  cycle,              ///< 1 -> 2 -> ... -> n -> 1 (n >= 2)
  standard_descent,   ///< (i, j) for all j < i; X-descents are ordinary descents
  random,             ///< each ordered pair independently with probability p
  random_tournament,  ///< one uniformly random orientation per pair
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::empty;
  std::optional<int> n;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
};

[[nodiscard]] inline std::string_view kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::empty: return "empty";
    case GeneratorKind::complete: return "complete";
    case GeneratorKind::path: return "path";
    case GeneratorKind::cycle: return "cycle";
    case GeneratorKind::standard_descent: return "descent";
    case GeneratorKind::random: return "random";
    case GeneratorKind::random_tournament: return "random_tournament";
  }
  return "?";
}

[[nodiscard]] inline GeneratorKind parse_kind(std::string_view s) {
  for (GeneratorKind k : {GeneratorKind::empty, GeneratorKind::complete, GeneratorKind::path, GeneratorKind::cycle,
                          GeneratorKind::standard_descent, GeneratorKind::random,
                          GeneratorKind::random_tournament}) {
    if (kind_name(k) == s) return k;
  }
  throw InvalidArgument("unknown generator kind '" + std::string(s) + "'");
}

[[nodiscard]] inline bool is_random_kind(GeneratorKind k) {
  return k == GeneratorKind::random || k == GeneratorKind::random_tournament;
}

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
[[nodiscard]] inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Deterministic for a fixed (kind, n, p, seed). Random kinds draw from
/// std::mt19937_64 seeded with `seed`; the pair order is row-major (u, v).
[[nodiscard]] inline Digraph generate(GeneratorKind kind, int n, std::optional<std::uint64_t> seed = std::nullopt,
                                      double p = 0.5) {
  Digraph::check_size(n);
  if (is_random_kind(kind) && !seed) {
    throw InvalidArgument("generator '" + std::string(kind_name(kind)) + "' requires a seed");
  }
  std::vector<Edge> edges;
  switch (kind) {
    case GeneratorKind::empty:
      break;
    case GeneratorKind::complete:
      return complete_digraph(n);
    case GeneratorKind::path:
      for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
      break;
    case GeneratorKind::cycle:
      for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
      if (n > 2) edges.push_back({n, 1});
      if (n == 2) edges.push_back({2, 1});
      break;
    case GeneratorKind::standard_descent:
      for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = 1; j < i; ++j) edges.push_back({i, j});
      }
      break;
    case GeneratorKind::random: {
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
      std::mt19937_64 rng(*seed);
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
          if (u != v && unit_draw(rng) < p) edges.push_back({u, v});
        }
      }
      break;
    }
    case GeneratorKind::random_tournament: {
      std::mt19937_64 rng(*seed);
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
          if (rng() >> 63) {
            edges.push_back({u, v});
          } else {
            edges.push_back({v, u});
          }
        }
      }
      break;
    }
  }
  return {n, edges};
}

[[nodiscard]] inline Digraph generate(const GeneratorSpec& spec) {
  if (!spec.n) throw InvalidArgument("generator spec is missing the vertex count");
  return generate(spec.kind, *spec.n, spec.seed, spec.p);
}

/// Parses `kind:n[:p=float][:seed=int]`. The vertex count may be omitted
/// (`kind[:p=..][:seed=..]`) for callers that sweep n themselves.
[[nodiscard]] inline GeneratorSpec parse_generator_spec(std::string_view text) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  if (fields.empty() || fields[0].empty()) throw InvalidArgument("empty generator spec");

  GeneratorSpec spec;
  spec.kind = parse_kind(fields[0]);
  auto bad = [&](const std::string& f) {
    return InvalidArgument("malformed generator field '" + f + "' in '" + std::string(text) + "'");
  };
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::string& f = fields[i];
    std::size_t used = 0;
    try {
      if (f.rfind("p=", 0) == 0) {
        spec.p = std::stod(f.substr(2), &used);
        if (used != f.size() - 2) throw bad(f);
      } else if (f.rfind("seed=", 0) == 0) {
        if (f.size() == 5 || f[5] == '-') throw bad(f);
        spec.seed = std::stoull(f.substr(5), &used);
        if (used != f.size() - 5) throw bad(f);
      } else if (i == 1 && !f.empty() && f.find_first_not_of("0123456789") == std::string::npos) {
        spec.n = std::stoi(f);
      } else {
        throw bad(f);
      }
    } catch (const std::logic_error&) {
      throw bad(f);
    }
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
  return spec;
}

}  // namespace rbsym
