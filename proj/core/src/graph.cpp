#include "gincs/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gincs {

Hypergraph::Hypergraph(int n, int s, std::vector<std::vector<int>> edges) : n_(n), s_(s) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (s < 1) throw std::invalid_argument("uniformity must be positive");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != s) throw std::invalid_argument("edge size differs from the uniformity");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw std::invalid_argument("edge repeats a vertex");
    if (e.front() < 1 || e.back() > n) throw std::invalid_argument("edge vertex outside [n]");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Hypergraph Hypergraph::complete(int n, int s) {
  std::vector<std::vector<int>> edges;
  std::vector<int> e;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(e.size()) == s) {
      edges.push_back(e);
      return;
    }
    for (int v = next; v <= n; ++v) {
      e.push_back(v);
      self(self, v + 1);
      e.pop_back();
    }
  };
  rec(rec, 1);
  return Hypergraph(n, s, std::move(edges));
}

bool Hypergraph::has_edge(const std::vector<int>& sorted_edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

bool Hypergraph::is_complete() const { return *this == complete(n_, s_); }

std::string Hypergraph::render() const {
  std::string out = "{";
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k) out += ",";
    out += "{";
    for (std::size_t i = 0; i < edges_[k].size(); ++i) out += (i ? "," : "") + std::to_string(edges_[k][i]);
    out += "}";
  }
  return out + "}";
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graphs have no loops");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) throw std::invalid_argument("edge vertex outside [n]");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  return Graph(n, std::move(e));
}

Graph Graph::from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> e;
  int bit = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b, ++bit)
      if (mask >> bit & 1) e.emplace_back(a, b);
  return Graph(n, std::move(e));
}

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

Hypergraph Graph::as_hypergraph() const {
  std::vector<std::vector<int>> e;
  for (auto [a, b] : edges_) e.push_back({a, b});
  return Hypergraph(n_, 2, std::move(e));
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  int s = -1;
  std::vector<std::vector<int>> edges;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("hypergraph file line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> values;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoi(tok, &used));
        if (used != tok.size()) fail("not an integer: '" + tok + "'");
      } catch (const std::logic_error&) {
        fail("not an integer: '" + tok + "'");
      }
    }
    if (values.empty()) continue;
    if (n < 0) {
      if (values.size() != 2) fail("header must be 'n s'");
      n = values[0];
      s = values[1];
      continue;
    }
    if (static_cast<int>(values.size()) != s) fail("edge must list exactly s vertices");
    edges.push_back(std::move(values));
  }
  if (n < 0) throw std::invalid_argument("hypergraph file has no 'n s' header");
  try {
    return Hypergraph(n, s, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("hypergraph file: ") + e.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_hypergraph(in);
}

Graph read_graph(std::istream& in) {
  const Hypergraph h = read_hypergraph(in);
  if (h.s() != 2) throw std::invalid_argument("graph file must declare s = 2");
  std::vector<std::pair<int, int>> e;
  for (const auto& edge : h.edges()) e.emplace_back(edge[0], edge[1]);
  return Graph(h.n(), std::move(e));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.s() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

}  // namespace gincs
