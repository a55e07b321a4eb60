#pragma once

#include <cstdint>
#include <vector>

#include "gincs/linear_algebra.hpp"
#include "gincs/polynomial.hpp"

namespace gincs {

/// An element of GL_{m_1} x ... x GL_{m_n} acting on the column blocks:
/// x_{ij} -> sum_k g^{(j)}_{ik} x_{kj}.
class BlockChange {
 public:
  static BlockChange identity(RingPtr ring);
  /// Dense random invertible blocks, deterministic in `seed`.
  static BlockChange random(RingPtr ring, std::uint64_t seed);
  /// Throws std::invalid_argument on shape mismatch or a singular block.
  static BlockChange from_blocks(RingPtr ring, std::vector<Matrix> blocks);

  const std::vector<Matrix>& blocks() const { return blocks_; }
  const Ring& ring() const { return *ring_; }

  BlockChange inverse() const;
  Polynomial apply(const Polynomial& f) const;

  friend bool operator==(const BlockChange& a, const BlockChange& b) {
    return *a.ring_ == *b.ring_ && a.blocks_ == b.blocks_;
  }

 private:
  BlockChange(RingPtr ring, std::vector<Matrix> blocks) : ring_(std::move(ring)), blocks_(std::move(blocks)) {}

  RingPtr ring_;
  std::vector<Matrix> blocks_;
};

}  // namespace gincs
