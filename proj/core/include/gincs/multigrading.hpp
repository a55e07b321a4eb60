#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gincs/block_change.hpp"
#include "gincs/groebner.hpp"

namespace gincs {

/// Outcome of sampling in_>(gI) over several random block changes g.
struct GinReport {
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
  std::string order;
  std::vector<std::uint64_t> sample_seeds;  // seed + k, k = 1..samples
  std::vector<MonomialIdeal> per_sample;
  /// False for a sample cut short at its first non-squarefree leading term;
  /// its ideal then holds only minimal generators of in(gI) found so far.
  std::vector<bool> complete;
  bool stable = false;  // all samples complete and equal
  std::optional<MonomialIdeal> gin;  // set iff stable

  int samples() const { return static_cast<int>(per_sample.size()); }
};

Ideal apply_block_change(const Ideal& ideal, const BlockChange& g);

/// Draws BlockChange::random(seed + k) for k = 1..samples, applies it to the
/// generators and records the initial ideal. Samples run concurrently and
/// are stored in sample order. With `stop_on_nonsquarefree` a sample stops
/// at its first non-squarefree leading term.
GinReport multigraded_gin(const Ideal& ideal, const TermOrder& order, int samples, std::uint64_t seed,
                          const Deadline& deadline = {}, bool stop_on_nonsquarefree = false);

/// True iff every minimal generator is squarefree.
bool is_radical_monomial(const MonomialIdeal& ideal);

/// Condition (BF) on minimal generators: for every generator u, every x_{ij}
/// dividing u and every k < i, x_{kj} * u / x_{ij} lies in the ideal.
/// Throws ContractError on non-radical input.
bool is_borel_fixed(const MonomialIdeal& ideal);

/// Radical and Borel-fixed.
bool in_brad(const MonomialIdeal& ideal);

/// Every minimal generator has multidegree with entries <= 1.
bool multidegree_multiplicity_free(const MonomialIdeal& ideal);

enum class CsStatus { cs_certified, not_cs, inconclusive };

std::string to_string(CsStatus s);

struct CsVerdict {
  CsStatus status = CsStatus::inconclusive;
  std::uint32_t prime = 0;
  /// CS_CERTIFIED: a radical Borel-fixed in(gI). NOT_CS: minimal generators
  /// of a non-radical in(gI), partial when `witness_complete` is false.
  std::optional<MonomialIdeal> witness;
  bool witness_complete = true;
  std::optional<std::uint64_t> witness_seed;
  /// "unstable_samples" or "radical_not_borel" when INCONCLUSIVE.
  std::string reason;
  GinReport report;
};

/// Field-relative CS test from sampled initial ideals. Throws ContractError
/// when the ideal is not Z^n-homogeneous.
CsVerdict check_cs(const Ideal& ideal, const TermOrder& order, int samples, std::uint64_t seed,
                   const Deadline& deadline = {});

/// Replaces `v` by the linear form `target` (same column, not involving v, or
/// zero) and returns the ideal in the ring with x_{v.row, v.col} removed;
/// rows below v in its column move up by one.
Ideal substitute_linear(const Ideal& ideal, Variable v, const Polynomial& target);

}  // namespace gincs
