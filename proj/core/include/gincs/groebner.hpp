#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gincs/polynomial.hpp"
#include "gincs/term_order.hpp"

namespace gincs {

/// Wall-clock budget checked cooperatively by long computations.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
  }
  static Deadline none() { return {}; }
  bool expired() const { return at_ && std::chrono::steady_clock::now() > *at_; }
  /// Throws Timeout when expired.
  void check() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Ideal generated by monomials; stores its minimal generators only.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  /// Minimalizes `gens` and sorts them canonically.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  static MonomialIdeal unit(RingPtr ring);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  MonomialIdeal operator+(const MonomialIdeal& other) const;

  std::string render() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.ring_ == *b.ring_ && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

struct GroebnerStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t product_criterion = 0;
  std::uint64_t chain_criterion = 0;
};

/// Division by `divisors` in list order: each step uses the first divisor
/// whose leading term divides the current term. The remainder has no term
/// divisible by any leading term of `divisors`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order);

/// Reduced Groebner basis (monic, sorted by ascending leading term).
///
/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// product and chain criteria and the normal selection strategy (lowest
/// lcm degree first, ties by the term order). When every input is
/// Z^n-homogeneous, each new basis element is asserted to be homogeneous.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                                   const Deadline& deadline = {}, GroebnerStats* stats = nullptr);

/// Finitely generated ideal with a per-order cache of reduced Groebner bases.
/// Copies share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  /// Zero generators are dropped.
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  const std::vector<Polynomial>& groebner_basis(const TermOrder& order, const Deadline& deadline = {}) const;

  Ideal operator+(const Ideal& other) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<TermOrder, std::shared_ptr<const std::vector<Polynomial>>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool same_order(const TermOrder& a, const TermOrder& b);

MonomialIdeal initial_ideal(const Ideal& ideal, const TermOrder& order, const Deadline& deadline = {});

/// Leading terms found before the first non-squarefree one. For homogeneous
/// input the pairs are processed by degree, so every returned generator is a
/// minimal generator of in(I); `complete` is false when the run stopped early
/// on a non-squarefree leading term.
struct PartialInitialIdeal {
  MonomialIdeal ideal;
  bool complete;
};
PartialInitialIdeal initial_ideal_until_nonsquarefree(const Ideal& ideal, const TermOrder& order,
                                                      const Deadline& deadline = {});
MonomialIdeal leading_term_ideal(std::span<const Polynomial> polys, const TermOrder& order);

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const TermOrder& order);
/// True when every generator of `small` lies in `big`.
bool ideal_contains(const Ideal& big, const Ideal& small, const TermOrder& order);
bool ideals_equal(const Ideal& a, const Ideal& b, const TermOrder& order);

/// Basis of the degree-A component I_A: all products prod_{j in A} x_{i_j j}
/// are reduced modulo the Groebner basis and the kernel of the coefficient
/// map is returned in echelon form, so leading terms are pairwise distinct
/// and span in(I_A). `subset` holds 1-based columns.
std::vector<Polynomial> component_basis(const Ideal& ideal, const std::vector<int>& subset, const TermOrder& order);

}  // namespace gincs
