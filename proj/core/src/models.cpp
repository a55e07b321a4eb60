#include "gincs/models.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gincs {

Grading parse_grading(const std::string& name) {
  if (name == "columns" || name == "cols") return Grading::columns;
  if (name == "rows") return Grading::rows;
  throw std::invalid_argument("unknown grading '" + name + "'");
}

std::string to_string(Grading g) { return g == Grading::columns ? "columns" : "rows"; }

GenericMatrix::GenericMatrix(int rows, int cols, std::uint32_t prime, Grading grading)
    : rows_(rows), cols_(cols), grading_(grading) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  ring_ = grading == Grading::columns ? make_ring(RingConfig::uniform(cols, rows, prime))
                                      : make_ring(RingConfig::uniform(rows, cols, prime));
}

Variable GenericMatrix::entry(int row, int col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) throw std::out_of_range("matrix entry out of bounds");
  return grading_ == Grading::columns ? Variable{row, col} : Variable{col, row};
}

Polynomial GenericMatrix::entry_poly(int row, int col) const { return Polynomial::variable(ring_, entry(row, col)); }

Polynomial minor(const GenericMatrix& x, const MinorSpec& spec) {
  const int s = spec.size();
  if (static_cast<int>(spec.cols.size()) != s) throw std::invalid_argument("minor needs as many rows as columns");
  if (s < 1 || s > 63) throw std::invalid_argument("minor size out of range");
  for (const auto* idx : {&spec.rows, &spec.cols}) {
    std::vector<int> sorted = *idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("minor indices must be distinct");
  }
  for (int r : spec.rows)
    if (r < 1 || r > x.rows()) throw std::out_of_range("minor row out of bounds");
  for (int c : spec.cols)
    if (c < 1 || c > x.cols()) throw std::out_of_range("minor column out of bounds");

  // memo[mask] = determinant of rows spec.rows[s - popcount(mask) ..] on the
  // columns selected by mask (positions into spec.cols)
  std::unordered_map<std::uint64_t, Polynomial> memo;
  auto det = [&](auto&& self, std::uint64_t mask) -> Polynomial {
    const int remaining = std::popcount(mask);
    if (remaining == 0) return Polynomial::constant(x.ring(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int row = spec.rows[s - remaining];
    Polynomial acc(x.ring());
    int position = 0;
    for (int c = 0; c < s; ++c) {
      if (!(mask >> c & 1)) continue;
      Polynomial term = x.entry_poly(row, spec.cols[c]) * self(self, mask & ~(std::uint64_t{1} << c));
      acc = position % 2 == 0 ? acc + term : acc - term;
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return det(det, (std::uint64_t{1} << s) - 1);
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  if (k >= 0 && k <= n) rec(rec, 1);
  return out;
}

Ideal hypergraph_minor_ideal(const Hypergraph& h, int m, std::uint32_t prime, Grading grading) {
  if (h.s() > m) throw std::invalid_argument("minor size s exceeds the number of rows m");
  const GenericMatrix x(m, std::max(h.n(), 1), prime, grading);
  std::vector<Polynomial> gens;
  const auto row_sets = subsets_of_size(m, h.s());
  for (const auto& e : h.edges())
    for (const auto& rows : row_sets) gens.push_back(minor(x, MinorSpec{rows, e}));
  return Ideal(x.ring(), std::move(gens));
}

Ideal binomial_edge_ideal(const Graph& g, int m, std::uint32_t prime, Grading grading) {
  if (m < 2) throw std::invalid_argument("binomial edge ideals need m >= 2 rows");
  return hypergraph_minor_ideal(g.as_hypergraph(), m, prime, grading);
}

Ideal minors_ideal(int m, int n, int s, std::uint32_t prime) {
  return hypergraph_minor_ideal(Hypergraph::complete(n, s), m, prime);
}

bool is_union_closed(const std::vector<std::vector<int>>& family) {
  std::set<std::vector<int>> members;
  for (auto a : family) {
    std::sort(a.begin(), a.end());
    members.insert(a);
  }
  for (const auto& a : members)
    for (const auto& b : members) {
      std::vector<int> meet;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
      if (meet.empty()) continue;
      std::vector<int> join;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(join));
      if (!members.contains(join)) return false;
    }
  return true;
}

Ideal degree_family_ideal(const Ideal& ideal, const std::vector<std::vector<int>>& family, const TermOrder& order) {
  if (family.empty()) throw std::invalid_argument("degree family must be nonempty");
  std::vector<Polynomial> gens;
  for (const auto& a : family) {
    auto part = component_basis(ideal, a, order);
    gens.insert(gens.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return Ideal(ideal.ring_ptr(), std::move(gens));
}

}  // namespace gincs
