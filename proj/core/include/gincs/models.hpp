#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gincs/graph.hpp"
#include "gincs/groebner.hpp"

namespace gincs {

enum class Grading { columns, rows };

Grading parse_grading(const std::string& name);
std::string to_string(Grading g);

/// Generic m x n matrix X. With row grading the ring is built on X^T, so
/// entry (i, j) of X is the ring variable x[j, i] and the engine still
/// grades by ring columns.
class GenericMatrix {
 public:
  GenericMatrix(int rows, int cols, std::uint32_t prime = kDefaultPrime, Grading grading = Grading::columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Grading grading() const { return grading_; }
  const RingPtr& ring() const { return ring_; }

  Variable entry(int row, int col) const;
  Polynomial entry_poly(int row, int col) const;

 private:
  int rows_;
  int cols_;
  Grading grading_;
  RingPtr ring_;
};

/// Row and column index lists of a square submatrix. Canonical specs are
/// strictly increasing; any order of distinct indices is accepted and the
/// determinant follows that order.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;
  int size() const { return static_cast<int>(rows.size()); }
};

/// Determinant of the selected submatrix by Laplace expansion along the
/// first listed row, memoizing sub-minors by column set. Throws
/// std::out_of_range / std::invalid_argument on a bad spec.
Polynomial minor(const GenericMatrix& x, const MinorSpec& spec);

/// All k-subsets of [n] in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

/// Generalized binomial edge ideal I_G(m): all 2-minors on columns {j,k} for
/// every edge, over all row pairs. Generators are sorted by column set, then
/// row set.
Ideal binomial_edge_ideal(const Graph& g, int m, std::uint32_t prime = kDefaultPrime,
                          Grading grading = Grading::columns);

/// I_H(m): all s-minors on the columns of each edge, over all row s-subsets.
/// Throws std::invalid_argument when s > m.
Ideal hypergraph_minor_ideal(const Hypergraph& h, int m, std::uint32_t prime = kDefaultPrime,
                             Grading grading = Grading::columns);

/// Ideal of all s-minors of the generic m x n matrix.
Ideal minors_ideal(int m, int n, int s, std::uint32_t prime = kDefaultPrime);

/// Whether A, B in F with A meet B nonempty implies A union B in F.
bool is_union_closed(const std::vector<std::vector<int>>& family);

/// Ideal generated by the component bases I_A for A in `family`.
Ideal degree_family_ideal(const Ideal& ideal, const std::vector<std::vector<int>>& family, const TermOrder& order);

}  // namespace gincs
