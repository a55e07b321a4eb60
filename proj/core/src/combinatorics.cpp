#include "gincs/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gincs/hilbert.hpp"
#include "gincs/models.hpp"

namespace gincs {

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_to_vertices(Mask mask) {
  std::vector<int> out;
  for (int v = 0; mask >> v; ++v)
    if (mask >> v & 1) out.push_back(v + 1);
  return out;
}

Mask vertices_to_mask(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= Mask{1} << (v - 1);
  return m;
}

void check_cap(int n, int cap) {
  if (cap > 30) throw std::invalid_argument("enumeration cap above 30 is not supported");
  if (n > cap) throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

bool induced_connected(const std::vector<Mask>& adj, Mask set) {
  const Mask start = set & -set;
  Mask seen = start;
  Mask frontier = start;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask fresh = adj[v] & set & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == set;
}

}  // namespace

std::vector<std::vector<int>> connected_subsets(const Graph& g, int cap) {
  const int n = g.n();
  check_cap(n, cap);
  std::vector<Mask> adj(n, 0);
  for (auto [a, b] : g.edges()) {
    adj[a - 1] |= Mask{1} << (b - 1);
    adj[b - 1] |= Mask{1} << (a - 1);
  }
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& subset : subsets_of_size(n, k))
      if (induced_connected(adj, vertices_to_mask(subset))) out.push_back(subset);
  return out;
}

MonomialIdeal predict_gin_generators(const Graph& g, int m, std::uint32_t prime) {
  if (m < 2) throw std::invalid_argument("predicted gin needs m >= 2");
  const RingPtr ring = make_ring(RingConfig::uniform(std::max(g.n(), 1), m, prime));
  std::vector<Monomial> gens;
  for (const auto& a : connected_subsets(g)) {
    const int k = static_cast<int>(a.size());
    if (k < 2) continue;
    const int budget = m * (k - 1);
    std::vector<int> rows(k, 1);
    // odometer over [m]^k
    while (true) {
      int sum = 0;
      for (int r : rows) sum += r;
      if (sum <= budget) {
        Monomial u(ring->num_vars());
        for (int p = 0; p < k; ++p) u.set(ring->index(rows[p], a[p]), 1);
        gens.push_back(std::move(u));
      }
      int p = k - 1;
      while (p >= 0 && rows[p] == m) rows[p--] = 1;
      if (p < 0) break;
      ++rows[p];
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

DegreeFamily::DegreeFamily(std::vector<std::vector<int>> family) : sets(std::move(family)) {
  for (auto& a : sets) {
    if (a.empty()) throw std::invalid_argument("degree family sets must be nonempty");
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw std::invalid_argument("degree family set repeats an element");
  }
}

LabeledMultigraph build_label_graph(const DegreeFamily& family) {
  LabeledMultigraph g;
  g.vertices = family.size();
  for (int a = 0; a < family.size(); ++a)
    for (int b = a + 1; b < family.size(); ++b) {
      std::vector<int> meet;
      std::set_intersection(family.sets[a].begin(), family.sets[a].end(), family.sets[b].begin(),
                            family.sets[b].end(), std::back_inserter(meet));
      for (int j : meet) g.edges.push_back({a + 1, b + 1, j});
    }
  return g;
}

std::optional<LabelCycle> find_nonconstant_label_cycle(const LabeledMultigraph& graph) {
  const int r = graph.vertices;
  // Components of each label class become block nodes r, r+1, ...
  std::map<int, std::vector<const LabeledEdge*>> by_label;
  for (const auto& e : graph.edges) by_label[e.label].push_back(&e);

  struct Block {
    int label;
    std::vector<int> members;
  };
  std::vector<Block> blocks;
  std::vector<std::vector<int>> adj(r);  // bipartite adjacency, node ids as above
  for (const auto& [label, edges] : by_label) {
    std::vector<int> parent(r + 1);
    for (int v = 0; v <= r; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::set<int> touched;
    for (const LabeledEdge* e : edges) {
      parent[find(e->a)] = find(e->b);
      touched.insert(e->a);
      touched.insert(e->b);
    }
    std::map<int, int> root_block;
    for (int v : touched) {
      auto [it, fresh] = root_block.try_emplace(find(v), static_cast<int>(blocks.size()));
      if (fresh) blocks.push_back({label, {}});
      blocks[it->second].members.push_back(v);
    }
  }
  const int total = r + static_cast<int>(blocks.size());
  adj.resize(total);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int v : blocks[b].members) {
      adj[v - 1].push_back(r + b);
      adj[r + b].push_back(v - 1);
    }

  // DFS for a back edge in the (simple) bipartite graph
  std::vector<int> parent(total, -2);
  std::vector<int> depth(total, 0);
  std::vector<int> cycle_nodes;
  for (int root = 0; root < total && cycle_nodes.empty(); ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty() && cycle_nodes.empty()) {
      auto& [u, next] = stack.back();
      if (next == adj[u].size()) {
        stack.pop_back();
        continue;
      }
      const int w = adj[u][next++];
      if (w == parent[u]) continue;
      if (parent[w] == -2) {
        parent[w] = u;
        depth[w] = depth[u] + 1;
        stack.emplace_back(w, 0);
      } else if (depth[w] < depth[u]) {
        for (int x = u; x != w; x = parent[x]) cycle_nodes.push_back(x);
        cycle_nodes.push_back(w);
      }
    }
  }
  if (cycle_nodes.empty()) return std::nullopt;

  // Rotate so the walk starts at a set node, then expand each block hop into
  // a path of same-label edges.
  if (cycle_nodes.front() >= r) std::rotate(cycle_nodes.begin(), cycle_nodes.begin() + 1, cycle_nodes.end());
  LabelCycle out;
  const std::size_t len = cycle_nodes.size();
  for (std::size_t k = 0; k < len; k += 2) {
    const int from = cycle_nodes[k] + 1;
    const Block& block = blocks[cycle_nodes[k + 1] - r];
    const int to = cycle_nodes[(k + 2) % len] + 1;
    // BFS inside the block
    std::map<int, int> prev{{from, from}};
    std::queue<int> q;
    q.push(from);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const LabeledEdge* e : by_label[block.label]) {
        int w = 0;
        if (e->a == v) w = e->b;
        else if (e->b == v) w = e->a;
        else continue;
        if (prev.try_emplace(w, v).second) q.push(w);
      }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = prev.at(v)) path.push_back(v);
    std::reverse(path.begin(), path.end());
    int cur = from;
    for (int v : path) {
      out.vertices.push_back(cur);
      out.labels.push_back(block.label);
      cur = v;
    }
  }
  return out;
}

bool has_nonconstant_label_cycle(const LabeledMultigraph& graph) { return find_nonconstant_label_cycle(graph).has_value(); }

bool is_valid_label_cycle(const LabeledMultigraph& graph, const LabelCycle& cycle) {
  const std::size_t len = cycle.vertices.size();
  if (len < 2 || cycle.labels.size() != len) return false;
  if (std::all_of(cycle.labels.begin(), cycle.labels.end(), [&](int l) { return l == cycle.labels.front(); }))
    return false;
  for (std::size_t k = 0; k < len; ++k) {
    int a = cycle.vertices[k];
    int b = cycle.vertices[(k + 1) % len];
    if (a > b) std::swap(a, b);
    if (std::find(graph.edges.begin(), graph.edges.end(), LabeledEdge{a, b, cycle.labels[k]}) == graph.edges.end())
      return false;
  }
  return true;
}

std::optional<ForestTrace> forest_of_complete(const Hypergraph& h, int cap) {
  const int n = h.n();
  const int s = h.s();
  check_cap(n, cap);
  std::vector<Mask> edges;
  for (const auto& e : h.edges()) edges.push_back(vertices_to_mask(e));
  std::set<Mask> edge_set(edges.begin(), edges.end());

  // complete[B]: every s-subset of B is an edge (downward closed)
  std::vector<char> complete(std::size_t{1} << n, 0);
  for (Mask b = 0; b < (Mask{1} << n); ++b) {
    const int size = std::popcount(b);
    if (size < s) {
      complete[b] = 1;
    } else if (size == s) {
      complete[b] = edge_set.contains(b);
    } else {
      bool ok = true;
      for (Mask rest = b; rest && ok; rest &= rest - 1) ok = complete[b & ~(rest & -rest)];
      complete[b] = ok;
    }
  }

  struct Choice {
    Mask clique = 0;
    Mask shared = 0;
    Mask rest = 0;
  };
  std::unordered_map<Mask, std::optional<Choice>> memo;  // nullopt = not a forest; clique 0 = complete base

  auto solve = [&](auto&& self, Mask v) -> bool {
    if (auto it = memo.find(v); it != memo.end()) return it->second.has_value();
    if (complete[v]) {
      memo[v] = Choice{};
      return true;
    }
    memo[v] = std::nullopt;
    std::vector<Mask> inside;
    Mask support = 0;
    for (Mask e : edges)
      if ((e & ~v) == 0) {
        inside.push_back(e);
        support |= e;
      }
    std::vector<Mask> candidates;
    for (int x = 0; x < n; ++x)
      if ((v >> x & 1) && !(support >> x & 1)) candidates.push_back(Mask{1} << x);
    // inclusion-maximal complete clusters of size >= s inside v
    for (Mask b = v;; b = (b - 1) & v) {
      if (std::popcount(b) >= s && complete[b]) {
        bool maximal = true;
        for (Mask out = v & ~b; out && maximal; out &= out - 1) maximal = !complete[b | (out & -out)];
        if (maximal) candidates.push_back(b);
      }
      if (b == 0) break;
    }
    for (Mask b : candidates) {
      // edges leaving b must live in A = (v \ b) + shared
      Mask outer_support = 0;
      for (Mask e : inside)
        if ((e & ~b) != 0) outer_support |= e;
      const Mask shared = b & outer_support;
      if (std::popcount(shared) > 1) continue;
      const Mask rest = (v & ~b) | shared;
      if (rest == v) continue;
      if (self(self, rest)) {
        memo[v] = Choice{b, shared, rest};
        return true;
      }
    }
    return false;
  };

  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  if (!solve(solve, all)) return std::nullopt;
  ForestTrace trace;
  for (Mask v = all;;) {
    const Choice& c = *memo.at(v);
    if (c.clique == 0) {
      trace.base = mask_to_vertices(v);
      break;
    }
    ForestStep step{mask_to_vertices(c.clique), std::nullopt};
    if (c.shared) step.shared_vertex = std::countr_zero(c.shared) + 1;
    trace.steps.push_back(std::move(step));
    v = c.rest;
  }
  return trace;
}

bool is_forest_of_complete(const Hypergraph& h, int cap) { return forest_of_complete(h, cap).has_value(); }

Hypergraph obstruction_hypergraph(int m, int t, int n) {
  if (m < 3) throw std::invalid_argument("obstruction family needs m >= 3");
  if (t < 1) throw std::invalid_argument("obstruction family needs t >= 1");
  if ((t + 1) * (m - 1) + 1 > n) throw std::invalid_argument("obstruction family needs (t+1)(m-1)+1 <= n");
  std::vector<std::vector<int>> edges;
  auto window = [m](int start) {
    std::vector<int> w(m);
    for (int k = 0; k < m; ++k) w[k] = start + k;
    return w;
  };
  for (int l = 1; l <= t; ++l) edges.push_back(window(l * (m - 1) + 2 - m));
  std::vector<int> closing = window((t + 1) * (m - 1) + 2 - m);
  closing.erase(std::find(closing.begin(), closing.end(), (t + 1) * (m - 1) + 1));
  closing.insert(closing.begin(), 1);
  edges.push_back(std::move(closing));
  return Hypergraph(n, m, std::move(edges));
}

bool lead_coprime_regular_sequence(const std::vector<Polynomial>& gens, const TermOrder& order) {
  std::vector<Monomial> leads;
  for (const Polynomial& f : gens) {
    if (f.is_zero()) return false;
    leads.push_back(f.leading_term(order).monomial);
  }
  for (std::size_t a = 0; a < leads.size(); ++a)
    for (std::size_t b = a + 1; b < leads.size(); ++b)
      if (!leads[a].coprime(leads[b])) return false;
  return true;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::cs_maximal_minors: return "CS_MAXIMAL_MINORS";
    case Classification::cs_by_forest: return "CS_BY_FOREST";
    case Classification::not_cs_by_cycle: return "NOT_CS_BY_CYCLE";
    case Classification::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

ClassifyReport classify_hypergraph(const Hypergraph& h, int m, std::uint32_t prime, const Deadline& deadline) {
  ClassifyReport report;
  const int s = h.s();
  const int n = h.n();
  if (m < 1) throw std::invalid_argument("row count must be positive");
  if (s > m) {
    report.reason = "s exceeds m, the minor ideal is zero";
    return report;
  }
  if (h.is_complete() && (s == 1 || s == 2 || s == std::min(m, n))) {
    report.verdict = Classification::cs_maximal_minors;
    report.reason = "complete uniform hypergraph with s in {1, 2, min(m, n)}";
    return report;
  }
  if (s == m && n <= kEnumerationCap) {
    report.forest = forest_of_complete(h);
    if (report.forest) {
      report.verdict = Classification::cs_by_forest;
      report.reason = "forest of complete s-uniform hypergraphs with s = m";
      return report;
    }
  }

  // Each edge carries one generator per row s-subset, all of degree support e.
  const Ideal ideal = hypergraph_minor_ideal(h, m, prime);
  std::vector<std::vector<int>> supports;
  for (const Polynomial& f : ideal.gens()) {
    const Multidegree d = *f.multidegree();
    std::vector<int> a;
    for (int j = 0; j < static_cast<int>(d.size()); ++j)
      if (d[j] > 0) a.push_back(j + 1);
    supports.push_back(std::move(a));
  }
  const LabeledMultigraph graph = build_label_graph(DegreeFamily(std::move(supports)));
  report.cycle = find_nonconstant_label_cycle(graph);
  if (!report.cycle) {
    report.reason = "no cycle with non-constant labels; no combinatorial certificate applies";
    return report;
  }

  RegularSequenceCertificate cert;
  cert.generators = static_cast<int>(ideal.gens().size());
  cert.lead_coprime = lead_coprime_regular_sequence(ideal.gens(), TermOrder::lex());
  if (cert.lead_coprime) {
    cert.certified = true;
  } else {
    cert.codimension = codimension(initial_ideal(ideal, TermOrder::degrevlex(), deadline));
    cert.certified = *cert.codimension == cert.generators;
  }
  report.regular_sequence = cert;
  if (cert.certified) {
    report.verdict = Classification::not_cs_by_cycle;
    report.reason = "regular sequence whose degree supports have a cycle with non-constant labels";
  } else {
    report.reason = "label cycle present but the generators are not a regular sequence";
  }
  return report;
}

}  // namespace gincs
