#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gincs/monomial.hpp"
#include "gincs/ring.hpp"
#include "gincs/term_order.hpp"

namespace gincs {

struct Term {
  Monomial monomial;
  Coeff coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept sorted by the canonical
/// monomial order (descending) with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Collects like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, Variable v);
  static Polynomial monomial(RingPtr ring, Monomial m, Coeff c = 1);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;

  /// Leading term under `order`; throws std::logic_error on the zero polynomial.
  const Term& leading_term(const TermOrder& order) const;
  Polynomial monic(const TermOrder& order) const;

  /// Common multidegree of all terms, or nullopt when the polynomial is not
  /// Z^n-homogeneous. The zero polynomial has no degree.
  std::optional<Multidegree> multidegree() const;
  int total_degree() const;
  /// Indices of the variables that occur.
  std::vector<int> variables() const;

  std::string render() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace gincs
