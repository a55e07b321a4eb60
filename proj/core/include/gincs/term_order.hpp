#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gincs/monomial.hpp"
#include "gincs/ring.hpp"

namespace gincs {

/// Lex or degrevlex with respect to a variable priority.
///
/// The priority always ranks x_{1j} > x_{2j} > ... > x_{m_j j} within every
/// column. The default priority is the ring's row-major variable numbering.
class TermOrder {
 public:
  enum class Kind { lex, degrevlex };

  static TermOrder lex() { return TermOrder(Kind::lex, {}); }
  static TermOrder degrevlex() { return TermOrder(Kind::degrevlex, {}); }
  /// `priority` lists every ring variable once, highest first. Throws
  /// std::invalid_argument if it is not a permutation or breaks the
  /// within-column constraint.
  static TermOrder with_priority(Kind kind, const Ring& ring, const std::vector<Variable>& priority);
  /// Throws std::invalid_argument on anything but "lex" or "degrevlex".
  static TermOrder parse(const std::string& name);

  Kind kind() const { return kind_; }
  bool default_priority() const { return order_.empty(); }
  std::string name() const { return kind_ == Kind::lex ? "lex" : "degrevlex"; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  TermOrder(Kind kind, std::vector<int> order) : kind_(kind), order_(std::move(order)) {}

  Kind kind_;
  std::vector<int> order_;  // variable indices, highest priority first; empty = identity
};

}  // namespace gincs
