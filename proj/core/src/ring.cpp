#include "gincs/ring.hpp"

#include <stdexcept>

namespace gincs {

RingConfig RingConfig::uniform(int cols, int rows, std::uint32_t prime) {
  RingConfig c;
  c.blocks.assign(cols < 0 ? 0 : cols, rows);
  c.prime = prime;
  return c;
}

void RingConfig::validate() const {
  if (blocks.empty()) throw std::invalid_argument("ring needs at least one column");
  for (int m : blocks)
    if (m < 1) throw std::invalid_argument("block sizes must be positive");
  if (prime <= 2 || !is_prime(prime))
    throw std::invalid_argument("prime must be an odd prime, got " + std::to_string(prime));
}

Ring::Ring(RingConfig config) : config_(std::move(config)), field_((config_.validate(), config_.prime)) {
  int max_rows = 0;
  for (int m : config_.blocks) max_rows = std::max(max_rows, m);
  index_.resize(config_.blocks.size());
  for (std::size_t j = 0; j < config_.blocks.size(); ++j) index_[j].assign(config_.blocks[j], -1);
  for (int i = 1; i <= max_rows; ++i) {
    for (int j = 1; j <= cols(); ++j) {
      if (i > block(j)) continue;
      index_[j - 1][i - 1] = static_cast<int>(vars_.size());
      vars_.push_back({i, j});
    }
  }
  if (vars_.size() > 65535) throw std::invalid_argument("too many variables");
}

bool Ring::contains(Variable v) const {
  return v.col >= 1 && v.col <= cols() && v.row >= 1 && v.row <= block(v.col);
}

int Ring::index(Variable v) const {
  if (!contains(v))
    throw std::out_of_range("variable x[" + std::to_string(v.row) + "," + std::to_string(v.col) +
                            "] outside the ring");
  return index_[v.col - 1][v.row - 1];
}

std::string Ring::variable_name(int index) const {
  const Variable v = vars_[index];
  return "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
}

RingPtr make_ring(RingConfig config) { return std::make_shared<const Ring>(std::move(config)); }

Multidegree indicator_degree(int cols, const std::vector<int>& subset) {
  Multidegree d(cols, 0);
  for (int j : subset) {
    if (j < 1 || j > cols) throw std::out_of_range("column outside the ring");
    d[j - 1] += 1;
  }
  return d;
}

}  // namespace gincs
