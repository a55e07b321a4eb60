#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gincs/graph.hpp"
#include "gincs/groebner.hpp"

namespace gincs {

constexpr int kEnumerationCap = 16;

/// Nonempty A of [n] with G_A connected, ordered by size, then
/// lexicographically. Throws std::invalid_argument when n exceeds `cap`.
std::vector<std::vector<int>> connected_subsets(const Graph& g, int cap = kEnumerationCap);

/// Monomials prod_{j in A} x[i_j, j] with sum i_j <= m(|A| - 1), over all
/// connected A with |A| >= 2, in S = K[x_ij] with m rows and n columns.
MonomialIdeal predict_gin_generators(const Graph& g, int m, std::uint32_t prime = kDefaultPrime);

/// Sequence A_1, ..., A_r of nonempty subsets of [n] (stored sorted).
struct DegreeFamily {
  DegreeFamily() = default;
  /// Throws std::invalid_argument on an empty set or a repeated element.
  explicit DegreeFamily(std::vector<std::vector<int>> sets);

  std::vector<std::vector<int>> sets;
  int size() const { return static_cast<int>(sets.size()); }
};

struct LabeledEdge {
  int a;  // 1-based positions in the family, a < b
  int b;
  int label;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct LabeledMultigraph {
  int vertices = 0;
  std::vector<LabeledEdge> edges;  // sorted by (a, b, label)
};

LabeledMultigraph build_label_graph(const DegreeFamily& family);

/// A closed walk v_0 -l_0- v_1 -l_1- ... v_{k-1} -l_{k-1}- v_0 through distinct
/// family positions whose labels are not all equal.
struct LabelCycle {
  std::vector<int> vertices;
  std::vector<int> labels;
};

/// Searches the set/label incidence graph (labels shared by at least two
/// sets) for a cycle; one exists iff G(A) has a cycle with non-constant
/// labels.
std::optional<LabelCycle> find_nonconstant_label_cycle(const LabeledMultigraph& graph);
bool has_nonconstant_label_cycle(const LabeledMultigraph& graph);

/// Witness check used by tests and the CLI: consecutive vertices are joined
/// by an edge with the stated label and the labels are not constant.
bool is_valid_label_cycle(const LabeledMultigraph& graph, const LabelCycle& cycle);

struct ForestStep {
  std::vector<int> clique;  // B, a complete cluster peeled off
  std::optional<int> shared_vertex;  // the vertex of A meet B, if any
};

struct ForestTrace {
  std::vector<ForestStep> steps;
  std::vector<int> base;  // the remaining complete hypergraph
};

/// Decides the recursive forest-of-complete condition; the trace lists the
/// peeled clusters in order. Throws std::invalid_argument when n > `cap`.
std::optional<ForestTrace> forest_of_complete(const Hypergraph& h, int cap = kEnumerationCap);
bool is_forest_of_complete(const Hypergraph& h, int cap = kEnumerationCap);

/// m-uniform windows [1]_m, [m]_m, ..., closed up by a last window whose top
/// vertex is replaced by 1. Throws std::invalid_argument unless m >= 3,
/// t >= 1 and (t+1)(m-1)+1 <= n.
Hypergraph obstruction_hypergraph(int m, int t, int n);

/// Pairwise coprime leading terms under `order`.
bool lead_coprime_regular_sequence(const std::vector<Polynomial>& gens, const TermOrder& order = TermOrder::lex());

enum class Classification { cs_maximal_minors, cs_by_forest, not_cs_by_cycle, unknown };

std::string to_string(Classification c);

struct RegularSequenceCertificate {
  int generators = 0;
  bool lead_coprime = false;
  std::optional<int> codimension;  // computed only when leads are not coprime
  bool certified = false;
};

struct ClassifyReport {
  Classification verdict = Classification::unknown;
  std::string reason;
  std::optional<ForestTrace> forest;
  std::optional<LabelCycle> cycle;
  std::optional<RegularSequenceCertificate> regular_sequence;
};

/// Combinatorial verdict on I_H(m). NOT_CS_BY_CYCLE needs both a label cycle
/// on the generator supports and a regular-sequence certificate.
ClassifyReport classify_hypergraph(const Hypergraph& h, int m, std::uint32_t prime = kDefaultPrime,
                                   const Deadline& deadline = {});

}  // namespace gincs
