#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gincs/field.hpp"

namespace gincs {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kCrossCheckPrime = 1000003;

/// Column count n, per-column block sizes m_1..m_n and the field characteristic.
struct RingConfig {
  std::vector<int> blocks;
  std::uint32_t prime = kDefaultPrime;

  static RingConfig uniform(int cols, int rows, std::uint32_t prime = kDefaultPrime);

  int cols() const { return static_cast<int>(blocks.size()); }
  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;

  friend bool operator==(const RingConfig&, const RingConfig&) = default;
};

/// x[row, col], both 1-based.
struct Variable {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Z^n-degree: one non-negative entry per column.
using Multidegree = std::vector<int>;

/// The polynomial ring K[x_ij | 1 <= j <= n, 1 <= i <= m_j] with the column grading.
///
/// Variables are numbered in row-major priority order
/// x11, x12, ..., x1n, x21, ... (columns with m_j < i are skipped), which is
/// also the default variable priority of every TermOrder.
class Ring {
 public:
  explicit Ring(RingConfig config);

  const RingConfig& config() const { return config_; }
  const PrimeField& field() const { return field_; }
  int cols() const { return config_.cols(); }
  int block(int col) const { return config_.blocks[col - 1]; }
  int num_vars() const { return static_cast<int>(vars_.size()); }

  /// Throws std::out_of_range outside the ring.
  int index(Variable v) const;
  int index(int row, int col) const { return index(Variable{row, col}); }
  bool contains(Variable v) const;
  Variable variable(int index) const { return vars_[index]; }
  int column_of(int index) const { return vars_[index].col; }

  std::string variable_name(int index) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.config_ == b.config_; }

 private:
  RingConfig config_;
  PrimeField field_;
  std::vector<Variable> vars_;
  std::vector<std::vector<int>> index_;  // [col-1][row-1]
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(RingConfig config);

/// Squarefree multidegree sum_{j in A} e_j; A holds 1-based columns.
Multidegree indicator_degree(int cols, const std::vector<int>& subset);

}  // namespace gincs
