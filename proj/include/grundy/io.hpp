#pragma once

// Text formats: 0-indexed edge lists, DIMACS "p edge" files, and witness
// colorings ("v color" per line).

#include <algorithm>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

namespace grundy::io {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

enum class Format { Auto, EdgeList, Dimacs };

struct ParsedGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;
};

namespace detail {

inline bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline void strip_comment(std::string& line, char marker) {
  if (auto pos = line.find(marker); pos != std::string::npos) line.erase(pos);
}

inline ParsedGraph finish(int n, const std::vector<Edge>& edges, const std::vector<int>& lines) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == edges[i].second)
      throw ParseError(lines[i], "self-loop at vertex " + std::to_string(edges[i].first));
  ParsedGraph out;
  out.graph = Graph::from_edges(n, edges, &out.duplicate_edges);
  return out;
}

}  // namespace detail

// One "u v" pair per line, 0-indexed; '#' starts a comment. The vertex count
// is one more than the largest id mentioned.
inline ParsedGraph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<int> lines;
  int n = 0;
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    detail::strip_comment(line, '#');
    if (detail::blank(line)) continue;
    std::istringstream iss(line);
    long long u, v;
    std::string extra;
    if (!(iss >> u >> v) || (iss >> extra)) throw ParseError(ln, "expected two vertex ids");
    if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000)
      throw ParseError(ln, "vertex id out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    lines.push_back(ln);
    n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
  }
  return detail::finish(n, edges, lines);
}

// "c" comment lines, one "p edge n m" header, then "e u v" lines (1-indexed).
inline ParsedGraph read_dimacs(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<int> lines;
  std::optional<int> n;
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    if (detail::blank(line)) continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n) throw ParseError(ln, "duplicate problem line");
      std::string kind;
      long long nv, ne;
      if (!(iss >> kind >> nv >> ne) || (kind != "edge" && kind != "edges" && kind != "col") ||
          nv < 0 || ne < 0)
        throw ParseError(ln, "malformed problem line");
      n = static_cast<int>(nv);
    } else if (tag == "e") {
      if (!n) throw ParseError(ln, "edge before problem line");
      long long u, v;
      if (!(iss >> u >> v)) throw ParseError(ln, "malformed edge line");
      if (u < 1 || v < 1 || u > *n || v > *n) throw ParseError(ln, "vertex id out of range");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      lines.push_back(ln);
    } else {
      throw ParseError(ln, "unknown line type '" + tag + "'");
    }
  }
  if (!n) throw ParseError(ln, "missing problem line");
  return detail::finish(*n, edges, lines);
}

// DIMACS when the first meaningful line starts with 'p' or 'c'.
inline Format sniff_format(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (detail::blank(line)) continue;
    auto first = line.find_first_not_of(" \t");
    char c = line[first];
    if (c == '#') continue;
    return (c == 'p' || c == 'c') ? Format::Dimacs : Format::EdgeList;
  }
  return Format::EdgeList;
}

inline ParsedGraph read_graph(std::istream& in, Format format = Format::Auto) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (format == Format::Auto) format = sniff_format(text);
  std::istringstream body(text);
  return format == Format::Dimacs ? read_dimacs(body) : read_edge_list(body);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_witness(std::ostream& out, const GrundyColoring& c) {
  for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
}

// Reads "v color" lines for a graph on n vertices; every vertex must appear
// exactly once.
inline GrundyColoring read_witness(std::istream& in, int n) {
  GrundyColoring c;
  c.colors.assign(static_cast<std::size_t>(n), 0);
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    detail::strip_comment(line, '#');
    if (detail::blank(line)) continue;
    std::istringstream iss(line);
    long long v, col;
    if (!(iss >> v >> col)) throw ParseError(ln, "expected 'vertex color'");
    if (v < 0 || v >= n) throw ParseError(ln, "vertex id out of range");
    if (col < 1) throw ParseError(ln, "colors must be positive");
    if (c.colors[v]) throw ParseError(ln, "vertex listed twice");
    c.colors[v] = static_cast<int>(col);
    c.num_colors = std::max(c.num_colors, static_cast<int>(col));
  }
  for (int v = 0; v < n; ++v)
    if (!c.colors[v]) throw ParseError(ln, "vertex " + std::to_string(v) + " has no color");
  return c;
}

}  // namespace grundy::io
