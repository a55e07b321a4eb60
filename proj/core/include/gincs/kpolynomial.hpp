#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gincs {

/// Integer polynomial in Z_1..Z_n, stored sparsely with exact int64
/// coefficients. Terms iterate in lexicographic order of exponent vectors.
class KPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit KPolynomial(int n) : n_(n) {}
  static KPolynomial constant(int n, std::int64_t c);
  static KPolynomial monomial(int n, Exponents e, std::int64_t c = 1);

  int num_vars() const { return n_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const Exponents& e) const;

  KPolynomial operator+(const KPolynomial& o) const;
  KPolynomial operator-(const KPolynomial& o) const;
  KPolynomial operator*(const KPolynomial& o) const;
  /// Multiplies by Z^e.
  KPolynomial shifted(const Exponents& e) const;
  /// Substitutes Z_i -> 1 - Z_i for every i, expanding exactly.
  KPolynomial one_minus() const;
  std::int64_t evaluate_at_ones() const;

  std::string render() const;

  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

 private:
  void add_term(const Exponents& e, std::int64_t c);

  int n_;
  std::map<Exponents, std::int64_t> terms_;
};

}  // namespace gincs
