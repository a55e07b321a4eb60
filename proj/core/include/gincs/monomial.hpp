#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gincs/ring.hpp"

namespace gincs {

/// Dense exponent vector indexed by ring variable index.
///
/// All monomials that meet in an operation must come from rings with the same
/// variable count. Exponents are capped at 255; exceeding the cap throws
/// std::overflow_error.
class Monomial {
 public:
  using Exponent = std::uint8_t;
  static constexpr int kMaxExponent = 255;

  Monomial() = default;
  /// The constant monomial 1 in a ring with `num_vars` variables.
  explicit Monomial(int num_vars);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int num_vars, int index, int power = 1);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int index) const { return exps_[index]; }
  bool is_one() const { return degree_ == 0; }
  std::uint64_t mask() const { return mask_; }

  void set(int index, int power);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_squarefree() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws std::invalid_argument when `divisor` does not divide.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  std::vector<int> support() const;
  Multidegree multidegree(const Ring& ring) const;
  std::string render(const Ring& ring) const;

  /// Canonical total order: lexicographic on exponents in variable index order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.mask_ == b.mask_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  void refresh();

  boost::container::small_vector<Exponent, 48> exps_;
  int degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace gincs
