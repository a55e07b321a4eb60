#include "gincs/block_change.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace gincs {

namespace {

constexpr int kMaxResample = 64;

}  // namespace

BlockChange BlockChange::identity(RingPtr ring) {
  std::vector<Matrix> blocks;
  for (int j = 1; j <= ring->cols(); ++j) blocks.push_back(Matrix::identity(ring->block(j)));
  return BlockChange(std::move(ring), std::move(blocks));
}

BlockChange BlockChange::random(RingPtr ring, std::uint64_t seed) {
  // Raw engine output mod p keeps draws identical across standard libraries.
  std::mt19937_64 gen(seed);
  const PrimeField& f = ring->field();
  std::vector<Matrix> blocks;
  for (int j = 1; j <= ring->cols(); ++j) {
    const int m = ring->block(j);
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxResample) throw std::logic_error("could not draw an invertible block");
      Matrix g(m, m);
      for (Coeff& c : g.data) c = static_cast<Coeff>(gen() % f.characteristic());
      if (rank(f, g) == m) {
        blocks.push_back(std::move(g));
        break;
      }
    }
  }
  return BlockChange(std::move(ring), std::move(blocks));
}

BlockChange BlockChange::from_blocks(RingPtr ring, std::vector<Matrix> blocks) {
  if (static_cast<int>(blocks.size()) != ring->cols()) throw std::invalid_argument("one block per column required");
  for (int j = 1; j <= ring->cols(); ++j) {
    const Matrix& g = blocks[j - 1];
    if (g.rows != ring->block(j) || g.cols != ring->block(j)) throw std::invalid_argument("block has the wrong size");
    if (rank(ring->field(), g) != g.rows) throw std::invalid_argument("block is singular");
  }
  return BlockChange(std::move(ring), std::move(blocks));
}

BlockChange BlockChange::inverse() const {
  std::vector<Matrix> inv;
  for (const Matrix& g : blocks_) inv.push_back(*gincs::inverse(ring_->field(), g));
  return BlockChange(ring_, std::move(inv));
}

Polynomial BlockChange::apply(const Polynomial& f) const {
  const Ring& r = *ring_;
  const PrimeField& field = r.field();
  const int nv = r.num_vars();

  // images[v] = list of (variable index, coefficient)
  std::vector<std::vector<std::pair<int, Coeff>>> images(nv);
  for (int v = 0; v < nv; ++v) {
    const Variable var = r.variable(v);
    const Matrix& g = blocks_[var.col - 1];
    for (int k = 1; k <= g.cols; ++k) {
      const Coeff c = g.at(var.row - 1, k - 1);
      if (c != 0) images[v].emplace_back(r.index(k, var.col), c);
    }
  }

  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  std::vector<std::pair<Monomial, Coeff>> partial, next;
  for (const Term& t : f.terms()) {
    partial.assign(1, {Monomial(nv), t.coeff});
    for (int v : t.monomial.support()) {
      for (int e = 0; e < t.monomial[v]; ++e) {
        std::unordered_map<Monomial, Coeff, MonomialHash> step;
        for (const auto& [m, c] : partial)
          for (const auto& [w, gc] : images[v]) {
            Coeff& slot = step[m * Monomial::variable(nv, w)];
            slot = field.add(slot, field.mul(c, gc));
          }
        next.clear();
        for (auto& [m, c] : step)
          if (c != 0) next.emplace_back(m, c);
        partial.swap(next);
      }
    }
    for (const auto& [m, c] : partial) {
      Coeff& slot = acc[m];
      slot = field.add(slot, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Polynomial::from_terms(ring_, std::move(terms));
}

}  // namespace gincs
