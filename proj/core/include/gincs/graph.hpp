#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace gincs {

/// s-uniform hypergraph on [n]; edges are sorted s-subsets, stored sorted
/// and without duplicates.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws std::invalid_argument on a malformed edge.
  Hypergraph(int n, int s, std::vector<std::vector<int>> edges);

  static Hypergraph complete(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  bool has_edge(const std::vector<int>& sorted_edge) const;
  bool is_complete() const;

  std::string render() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int s_ = 2;
  std::vector<std::vector<int>> edges_;
};

/// Simple graph on [n].
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  static Graph path(int n);
  static Graph complete(int n);
  /// The graph whose edge set is the k-th subset (bitmask over all pairs of
  /// [n] in lexicographic order).
  static Graph from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  Hypergraph as_hypergraph() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Reads "n s" then one edge per line; '#' starts a comment. Throws
/// std::invalid_argument with a line number on malformed input.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
/// As read_hypergraph, but requires s = 2.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace gincs
