#pragma once

#include <vector>

#include "gincs/groebner.hpp"
#include "gincs/kpolynomial.hpp"

namespace gincs {

/// Monomial ideal of T = K[y_1..y_n] whose minimal generators have exponent
/// vectors bounded component-wise by `bounds` (the block sizes of S).
class BoundedMonomialIdeal {
 public:
  /// Minimalizes; throws ContractError when a generator exceeds the bounds.
  BoundedMonomialIdeal(std::vector<int> bounds, std::vector<std::vector<int>> gens);

  const std::vector<int>& bounds() const { return bounds_; }
  const std::vector<std::vector<int>>& gens() const { return gens_; }
  int num_vars() const { return static_cast<int>(bounds_.size()); }

  /// The same ideal inside the ring with blocks (1,...,1), where y_j = x[1,j].
  MonomialIdeal as_monomial_ideal() const;
  std::string render() const;

  friend bool operator==(const BoundedMonomialIdeal&, const BoundedMonomialIdeal&) = default;

 private:
  std::vector<int> bounds_;
  std::vector<std::vector<int>> gens_;
};

/// K_{S/J} by the pivot recursion K_{S/J} = K_{S/(J+(x))} + Z^{deg x} K_{S/(J:x)},
/// pivoting on a variable that occurs in the most generators.
KPolynomial k_polynomial_monomial(const MonomialIdeal& ideal);

/// K_{S/I} from the initial ideal under `order`.
KPolynomial k_polynomial(const Ideal& ideal, const TermOrder& order, const Deadline& deadline = {});

/// K_I = 1 - K_{T/I} for an ideal of T.
KPolynomial k_polynomial_of_ideal(const BoundedMonomialIdeal& ideal);

/// y^a -> prod_j x[1,j] x[2,j] ... x[a_j,j] in the ring `s`; the bounds of
/// `ideal` must equal the block sizes of `s`.
MonomialIdeal polarize(const BoundedMonomialIdeal& ideal, const RingPtr& s);

/// Minimal transversals of the generator supports. Throws ContractError on
/// non-squarefree input.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

MonomialIdeal psi(const BoundedMonomialIdeal& ideal, const RingPtr& s);

/// Depolarized Alexander dual. Throws ContractError unless the input is
/// radical, Borel-fixed and depolarizable.
BoundedMonomialIdeal psi_inverse(const MonomialIdeal& ideal);

/// Checks K_{S/J}(1 - Z) == K_I(Z). Throws ContractError when J is not in Brad(S).
bool verify_jande(const BoundedMonomialIdeal& i, const MonomialIdeal& j);

/// K_{S/(I+J)} == K_{S/I} * K_{S/J} for ideals generated in disjoint
/// variables. Throws ContractError when the generator supports meet.
bool k_multiplicativity_check(const Ideal& i, const Ideal& j, const TermOrder& order);

/// Codimension of a monomial ideal: the smallest number of variables meeting
/// every generator support. The unit ideal reports num_vars + 1.
int codimension(const MonomialIdeal& ideal);

}  // namespace gincs
