#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rbsym/digraph.hpp"

namespace rbsym {

/// Malformed digraph text; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline bool read_int_token(std::istringstream& in, long long& out) {
  std::string tok;
  if (!(in >> tok)) return false;
  std::size_t used = 0;
  try {
    out = std::stoll(tok, &used);
  } catch (const std::logic_error&) {
    return false;
  }
  return used == tok.size();
}

}  // namespace detail

// Text format:
//   first significant line: vertex count n
//   every further significant line: "u v" declaring the edge (u, v)
// A line is insignificant if it is empty/whitespace or its first
// non-blank character is '#'. Duplicate edges and loops are errors.
[[nodiscard]] inline Digraph parse_digraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (n < 0) {
      if (!detail::read_int_token(fields, a) || (fields >> extra)) {
        throw ParseError(lineno, "expected the vertex count");
      }
      if (a < 0) throw ParseError(lineno, "negative vertex count");
      if (a > kMaxVertices) {
        throw ParseError(lineno, "vertex count " + std::to_string(a) + " exceeds the compiled cap of " +
                                     std::to_string(kMaxVertices));
      }
      n = static_cast<int>(a);
      continue;
    }
    if (!detail::read_int_token(fields, a) || !detail::read_int_token(fields, b) || (fields >> extra)) {
      throw ParseError(lineno, "expected an edge \"u v\"");
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParseError(lineno, "edge endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) throw ParseError(lineno, "loop at vertex " + std::to_string(a));
    const Edge e{static_cast<Vertex>(a), static_cast<Vertex>(b)};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e) {
        throw ParseError(lineno, "duplicate edge " + std::to_string(a) + " " + std::to_string(b) +
                                     " (first declared on line " + std::to_string(edge_lines[i]) + ")");
      }
    }
    edges.push_back(e);
    edge_lines.push_back(lineno);
  }
  if (n < 0) throw ParseError(0, "missing vertex count");
  return {n, edges};
}

[[nodiscard]] inline Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

/// Writes n on the first line, then one "u v" line per edge in lexicographic order.
inline void write_digraph(std::ostream& out, const Digraph& x) {
  out << x.size() << '\n';
  for (const Edge& e : x.edges()) out << e.source << ' ' << e.target << '\n';
}

[[nodiscard]] inline std::string to_text(const Digraph& x) {
  std::ostringstream out;
  write_digraph(out, x);
  return out.str();
}

}  // namespace rbsym
