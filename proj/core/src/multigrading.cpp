#include "gincs/multigrading.hpp"

#include <algorithm>
#include <future>

#include "gincs/errors.hpp"

namespace gincs {

Ideal apply_block_change(const Ideal& ideal, const BlockChange& g) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.gens().size());
  for (const Polynomial& f : ideal.gens()) gens.push_back(g.apply(f));
  return Ideal(ideal.ring_ptr(), std::move(gens));
}

GinReport multigraded_gin(const Ideal& ideal, const TermOrder& order, int samples, std::uint64_t seed,
                          const Deadline& deadline, bool stop_on_nonsquarefree) {
  if (samples < 1) throw std::invalid_argument("at least one sample is required");
  GinReport report;
  report.seed = seed;
  report.prime = ideal.ring().config().prime;
  report.order = order.name();

  auto run = [&](std::uint64_t s) {
    const BlockChange g = BlockChange::random(ideal.ring_ptr(), s);
    const Ideal moved = apply_block_change(ideal, g);
    if (stop_on_nonsquarefree && moved.is_homogeneous()) return initial_ideal_until_nonsquarefree(moved, order, deadline);
    return PartialInitialIdeal{initial_ideal(moved, order, deadline), true};
  };

  std::vector<std::future<PartialInitialIdeal>> jobs;
  for (int k = 1; k <= samples; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    report.sample_seeds.push_back(s);
    jobs.push_back(std::async(samples > 1 ? std::launch::async : std::launch::deferred, run, s));
  }
  for (auto& job : jobs) {
    PartialInitialIdeal p = job.get();
    report.per_sample.push_back(std::move(p.ideal));
    report.complete.push_back(p.complete);
  }

  report.stable = std::all_of(report.complete.begin(), report.complete.end(), [](bool c) { return c; }) &&
                  std::all_of(report.per_sample.begin(), report.per_sample.end(),
                              [&](const MonomialIdeal& j) { return j == report.per_sample.front(); });
  if (report.stable) report.gin = report.per_sample.front();
  return report;
}

bool is_radical_monomial(const MonomialIdeal& ideal) {
  return std::all_of(ideal.gens().begin(), ideal.gens().end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
  if (!is_radical_monomial(ideal)) throw ContractError("Borel test requires a radical monomial ideal");
  const Ring& ring = ideal.ring();
  for (const Monomial& u : ideal.gens()) {
    for (int v : u.support()) {
      const Variable x = ring.variable(v);
      const Monomial rest = u / Monomial::variable(ring.num_vars(), v);
      for (int k = 1; k < x.row; ++k) {
        const Monomial moved = rest * Monomial::variable(ring.num_vars(), ring.index(k, x.col));
        if (!ideal.contains(moved)) return false;
      }
    }
  }
  return true;
}

bool in_brad(const MonomialIdeal& ideal) { return is_radical_monomial(ideal) && is_borel_fixed(ideal); }

bool multidegree_multiplicity_free(const MonomialIdeal& ideal) {
  for (const Monomial& m : ideal.gens()) {
    const Multidegree d = m.multidegree(ideal.ring());
    if (std::any_of(d.begin(), d.end(), [](int e) { return e > 1; })) return false;
  }
  return true;
}

std::string to_string(CsStatus s) {
  switch (s) {
    case CsStatus::cs_certified:
      return "CS_CERTIFIED";
    case CsStatus::not_cs:
      return "NOT_CS";
    case CsStatus::inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

CsVerdict check_cs(const Ideal& ideal, const TermOrder& order, int samples, std::uint64_t seed,
                   const Deadline& deadline) {
  if (!ideal.is_homogeneous()) throw ContractError("check_cs requires a Z^n-homogeneous ideal");
  CsVerdict verdict;
  verdict.prime = ideal.ring().config().prime;
  verdict.report = multigraded_gin(ideal, order, samples, seed, deadline, true);
  const GinReport& r = verdict.report;

  for (int k = 0; k < r.samples(); ++k) {
    if (!is_radical_monomial(r.per_sample[k])) {
      verdict.status = CsStatus::not_cs;
      verdict.witness = r.per_sample[k];
      verdict.witness_complete = r.complete[k];
      verdict.witness_seed = r.sample_seeds[k];
      return verdict;
    }
  }
  for (int k = 0; k < r.samples(); ++k) {
    if (is_borel_fixed(r.per_sample[k])) {
      verdict.status = CsStatus::cs_certified;
      verdict.witness = r.per_sample[k];
      verdict.witness_seed = r.sample_seeds[k];
      return verdict;
    }
  }
  verdict.status = CsStatus::inconclusive;
  verdict.reason = r.stable ? "radical_not_borel" : "unstable_samples";
  return verdict;
}

Ideal substitute_linear(const Ideal& ideal, Variable v, const Polynomial& target) {
  const Ring& ring = ideal.ring();
  const int vi = ring.index(v);
  if (!(target.ring() == ring)) throw std::invalid_argument("substitution target from a different ring");
  for (const Term& t : target.terms()) {
    if (t.monomial.degree() != 1 || t.monomial.multidegree(ring) != Monomial::variable(ring.num_vars(), vi).multidegree(ring))
      throw std::invalid_argument("substitution target must be a linear form in the column of the variable");
    if (t.monomial[vi] != 0) throw std::invalid_argument("substitution target must not involve the variable");
  }
  if (ring.block(v.col) < 2) throw std::invalid_argument("cannot remove the only variable of a column");

  RingConfig smaller = ring.config();
  smaller.blocks[v.col - 1] -= 1;
  const RingPtr out_ring = make_ring(smaller);

  auto rename = [&](int idx) {
    Variable w = ring.variable(idx);
    if (w.col == v.col && w.row > v.row) --w.row;
    return Polynomial::variable(out_ring, w);
  };
  std::vector<Polynomial> images;
  for (int idx = 0; idx < ring.num_vars(); ++idx) {
    if (idx != vi) {
      images.push_back(rename(idx));
      continue;
    }
    Polynomial img(out_ring);
    for (const Term& t : target.terms())
      img = img + rename(t.monomial.support().front()).scaled(t.coeff);
    images.push_back(img);
  }

  std::vector<Polynomial> gens;
  for (const Polynomial& f : ideal.gens()) {
    Polynomial acc(out_ring);
    for (const Term& t : f.terms()) {
      Polynomial prod = Polynomial::constant(out_ring, t.coeff);
      for (int idx : t.monomial.support())
        for (int e = 0; e < t.monomial[idx]; ++e) prod = prod * images[idx];
      acc = acc + prod;
    }
    gens.push_back(acc);
  }
  return Ideal(out_ring, std::move(gens));
}

}  // namespace gincs
