#include "gincs/term_order.hpp"

#include <stdexcept>

namespace gincs {

TermOrder TermOrder::with_priority(Kind kind, const Ring& ring, const std::vector<Variable>& priority) {
  if (static_cast<int>(priority.size()) != ring.num_vars())
    throw std::invalid_argument("priority must list every variable exactly once");
  std::vector<int> order;
  std::vector<int> seen(ring.num_vars(), -1);
  for (std::size_t pos = 0; pos < priority.size(); ++pos) {
    const int idx = ring.index(priority[pos]);
    if (seen[idx] >= 0) throw std::invalid_argument("priority repeats a variable");
    seen[idx] = static_cast<int>(pos);
    order.push_back(idx);
  }
  for (int j = 1; j <= ring.cols(); ++j)
    for (int i = 1; i < ring.block(j); ++i)
      if (seen[ring.index(i, j)] > seen[ring.index(i + 1, j)])
        throw std::invalid_argument("priority must rank x[i,j] above x[i+1,j]");
  bool identity = true;
  for (std::size_t pos = 0; pos < order.size(); ++pos) identity = identity && order[pos] == static_cast<int>(pos);
  if (identity) order.clear();
  return TermOrder(kind, std::move(order));
}

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  throw std::invalid_argument("unknown term order '" + name + "'");
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const int n = a.num_vars();
  if (kind_ == Kind::degrevlex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (order_.empty()) {
    if (kind_ == Kind::lex) {
      for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    } else {
      for (int i = n - 1; i >= 0; --i)
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  if (kind_ == Kind::lex) {
    for (int v : order_)
      if (a[v] != b[v]) return a[v] <=> b[v];
  } else {
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

}  // namespace gincs
