#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the basic value types, so agreement is a real cross-check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gincs/graph.hpp"
#include "gincs/groebner.hpp"
#include "gincs/kpolynomial.hpp"
#include "gincs/polynomial.hpp"

namespace oracle {

using gincs::Monomial;
using gincs::Polynomial;
using gincs::RingPtr;
using gincs::Term;

/// Leibniz formula over all permutations; `vars[r][c]` are ring variable indices.
inline Polynomial leibniz(const RingPtr& ring, const std::vector<std::vector<int>>& vars) {
  const int s = static_cast<int>(vars.size());
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  const auto& f = ring->field();
  do {
    int inversions = 0;
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Monomial m(ring->num_vars());
    for (int r = 0; r < s; ++r) m = m * Monomial::variable(ring->num_vars(), vars[r][perm[r]]);
    terms.push_back({m, inversions % 2 ? f.neg(1) : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Minimal hitting sets of `supports` (sets of variable indices), by subset
/// enumeration over the union of the supports.
inline std::set<std::set<int>> minimal_transversals(const std::vector<std::set<int>>& supports) {
  std::set<int> all;
  for (const auto& s : supports) all.insert(s.begin(), s.end());
  const std::vector<int> u(all.begin(), all.end());
  std::vector<std::set<int>> hitting;
  for (std::uint32_t mask = 0; mask < (1u << u.size()); ++mask) {
    std::set<int> t;
    for (std::size_t k = 0; k < u.size(); ++k)
      if (mask >> k & 1u) t.insert(u[k]);
    bool hits = true;
    for (const auto& s : supports) {
      bool any = false;
      for (int v : s) any = any || t.count(v);
      hits = hits && any;
    }
    if (hits) hitting.push_back(t);
  }
  std::set<std::set<int>> out;
  for (const auto& t : hitting) {
    bool minimal = true;
    for (const auto& o : hitting)
      if (o != t && std::includes(t.begin(), t.end(), o.begin(), o.end())) minimal = false;
    if (minimal) out.insert(t);
  }
  return out;
}

inline std::set<std::set<int>> supports_of(const gincs::MonomialIdeal& j) {
  std::set<std::set<int>> out;
  for (const Monomial& m : j.gens()) {
    const auto s = m.support();
    out.insert(std::set<int>(s.begin(), s.end()));
  }
  return out;
}

/// Subsets A of [n] (1-based) whose induced subgraph is connected, by BFS.
inline std::set<std::vector<int>> connected_subsets(const gincs::Graph& g) {
  std::set<std::vector<int>> out;
  const int n = g.n();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> a;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) a.push_back(v + 1);
    std::set<int> seen{a.front()};
    std::vector<int> stack{a.front()};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : a)
        if (!seen.count(w) && g.adjacent(v, w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (seen.size() == a.size()) out.insert(a);
  }
  return out;
}

/// Generators of the predicted gin, minimalized by pairwise divisibility.
inline std::set<std::vector<int>> predicted_gin(const gincs::Graph& g, int m, const gincs::Ring& ring) {
  std::vector<std::vector<int>> raw;
  for (const auto& a : oracle::connected_subsets(g)) {
    if (a.size() < 2) continue;
    const int bound = m * (static_cast<int>(a.size()) - 1);
    std::vector<int> rows(a.size(), 1);
    while (true) {
      if (std::accumulate(rows.begin(), rows.end(), 0) <= bound) {
        std::vector<int> e(ring.num_vars(), 0);
        for (std::size_t k = 0; k < a.size(); ++k) e[ring.index(rows[k], a[k])] = 1;
        raw.push_back(e);
      }
      std::size_t k = 0;
      while (k < rows.size() && rows[k] == m) rows[k++] = 1;
      if (k == rows.size()) break;
      ++rows[k];
    }
  }
  auto divides = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  };
  std::set<std::vector<int>> out;
  for (const auto& u : raw) {
    bool minimal = true;
    for (const auto& v : raw)
      if (v != u && divides(v, u)) minimal = false;
    if (minimal) out.insert(u);
  }
  return out;
}

inline std::set<std::vector<int>> exponent_set(const gincs::MonomialIdeal& j) {
  std::set<std::vector<int>> out;
  for (const Monomial& m : j.gens()) {
    std::vector<int> e(m.num_vars());
    for (int k = 0; k < m.num_vars(); ++k) e[k] = m[k];
    out.insert(e);
  }
  return out;
}

/// dim_K (S/J)_d by enumerating every monomial of multidegree d.
inline std::int64_t hilbert_function(const gincs::MonomialIdeal& j, const std::vector<int>& d) {
  const gincs::Ring& ring = j.ring();
  std::int64_t count = 0;
  std::vector<int> e(ring.num_vars(), 0);
  std::function<void(int, int)> fill = [&](int col, int remaining) {
    // distribute `remaining` over the variables of column `col`, then move on
    if (col > ring.cols()) {
      if (!j.contains(Monomial(std::span<const int>(e)))) ++count;
      return;
    }
    std::vector<int> idx;
    for (int i = 1; i <= ring.block(col); ++i) idx.push_back(ring.index(i, col));
    std::function<void(std::size_t, int)> place = [&](std::size_t k, int left) {
      if (k + 1 == idx.size()) {
        e[idx[k]] = left;
        fill(col + 1, col < ring.cols() ? d[col] : 0);
        e[idx[k]] = 0;
        return;
      }
      for (int x = 0; x <= left; ++x) {
        e[idx[k]] = x;
        place(k + 1, left - x);
      }
      e[idx[k]] = 0;
    };
    place(0, remaining);
  };
  fill(1, d[0]);
  return count;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coefficient of Z^d in K(Z) / prod_j (1 - Z_j)^{m_j}.
inline std::int64_t series_coefficient(const gincs::KPolynomial& k, const std::vector<int>& blocks,
                                       const std::vector<int>& d) {
  std::int64_t total = 0;
  for (const auto& [e, c] : k.terms()) {
    std::int64_t term = c;
    for (std::size_t j = 0; j < d.size() && term != 0; ++j) {
      const int r = d[j] - e[j];
      term *= r < 0 ? 0 : binomial(r + blocks[j] - 1, blocks[j] - 1);
    }
    total += term;
  }
  return total;
}

/// Whether the labeled multigraph (edges as (a, b, label)) has a simple cycle
/// of length >= 2 with non-constant labels, by exhaustive edge-path search.
inline bool has_nonconstant_cycle(int vertices, const std::vector<std::tuple<int, int, int>>& edges) {
  const int e = static_cast<int>(edges.size());
  bool found = false;
  std::vector<bool> used_edge(e, false);
  std::vector<bool> on_path(vertices + 1, false);
  std::vector<int> labels;
  std::function<void(int, int)> walk = [&](int start, int v) {
    if (found) return;
    for (int k = 0; k < e && !found; ++k) {
      if (used_edge[k]) continue;
      auto [a, b, l] = edges[k];
      int w;
      if (a == v) w = b;
      else if (b == v) w = a;
      else continue;
      labels.push_back(l);
      used_edge[k] = true;
      if (w == start && labels.size() >= 2) {
        if (std::any_of(labels.begin(), labels.end(), [&](int x) { return x != labels.front(); })) found = true;
      } else if (w != start && !on_path[w]) {
        on_path[w] = true;
        walk(start, w);
        on_path[w] = false;
      }
      used_edge[k] = false;
      labels.pop_back();
    }
  };
  for (int v = 1; v <= vertices && !found; ++v) {
    on_path[v] = true;
    walk(v, v);
    on_path[v] = false;
  }
  return found;
}

/// The forest-of-complete definition, tried over every split B of the vertex set.
inline bool forest_of_complete(std::set<int> v, std::set<std::vector<int>> e, int s) {
  std::function<bool(const std::set<int>&, const std::set<std::vector<int>>&)> rec =
      [&](const std::set<int>& verts, const std::set<std::vector<int>>& edges) -> bool {
    const std::vector<int> vv(verts.begin(), verts.end());
    auto all_s_subsets = [&](const std::vector<int>& b) {
      std::set<std::vector<int>> out;
      const int n = static_cast<int>(b.size());
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != s) continue;
        std::vector<int> x;
        for (int k = 0; k < n; ++k)
          if (mask >> k & 1u) x.push_back(b[k]);
        out.insert(x);
      }
      return out;
    };
    if (edges == all_s_subsets(vv)) return true;
    const int n = static_cast<int>(vv.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> b;
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1u) b.push_back(vv[k]);
      const auto e2 = all_s_subsets(b);
      if (!std::includes(edges.begin(), edges.end(), e2.begin(), e2.end())) continue;
      std::set<std::vector<int>> e1;
      std::set_difference(edges.begin(), edges.end(), e2.begin(), e2.end(), std::inserter(e1, e1.end()));
      // A must hold the support of E_1 and every vertex outside B; it may
      // also take one vertex of B (isolated in (A, E_1))
      std::set<int> a;
      for (const auto& x : e1) a.insert(x.begin(), x.end());
      for (int x : vv)
        if (!std::binary_search(b.begin(), b.end(), x)) a.insert(x);
      int shared = 0;
      for (int x : b) shared += static_cast<int>(a.count(x));
      if (shared > 1) continue;
      std::vector<std::set<int>> choices{a};
      if (shared == 0)
        for (int x : b) {
          std::set<int> grown = a;
          grown.insert(x);
          choices.push_back(std::move(grown));
        }
      for (const auto& choice : choices)
        if (choice.size() < verts.size() && rec(choice, e1)) return true;
    }
    return false;
  };
  return rec(v, e);
}

inline std::vector<int> random_exponents(std::mt19937_64& rng, const std::vector<int>& bounds) {
  std::vector<int> e(bounds.size());
  for (std::size_t j = 0; j < bounds.size(); ++j) e[j] = std::uniform_int_distribution<int>(0, bounds[j])(rng);
  return e;
}

}  // namespace oracle
