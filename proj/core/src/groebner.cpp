#include "gincs/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gincs/errors.hpp"
#include "gincs/linear_algebra.hpp"

namespace gincs {

void Deadline::check() const {
  if (expired()) throw Timeout();
}

// ---------------------------------------------------------------------------
// MonomialIdeal

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (Monomial& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); }))
      out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const Monomial& m : gens)
    if (m.num_vars() != ring_->num_vars()) throw std::invalid_argument("monomial does not belong to the ring");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const int nv = ring->num_vars();
  return MonomialIdeal(std::move(ring), {Monomial(nv)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(ring_, std::move(all));
}

std::string MonomialIdeal::render() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].render(*ring_);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Engine internals: polynomials kept sorted descending by the active order.

namespace {

using Terms = std::vector<Term>;

struct Engine {
  const Ring& ring;
  const PrimeField& field;
  const TermOrder& order;
  const Deadline& deadline;

  Terms sorted(const Polynomial& p) const {
    Terms t = p.terms();
    if (!(order.kind() == TermOrder::Kind::lex && order.default_priority()))
      std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
    return t;
  }

  void make_monic(Terms& t) const {
    if (t.empty() || t.front().coeff == 1) return;
    const Coeff s = field.inv(t.front().coeff);
    for (Term& x : t) x.coeff = field.mul(x.coeff, s);
  }

  // f[from..] - c * m * g[1..]; g must be monic with leading term m' where m*m' = f[from-1] (cancelled).
  Terms sub_mul(const Terms& f, std::size_t from, Coeff c, const Monomial& m, const Terms& g) const {
    Terms out;
    out.reserve(f.size() - from + g.size());
    std::size_t a = from;
    std::size_t b = 1;
    while (a < f.size() || b < g.size()) {
      if (b == g.size()) {
        out.push_back(f[a++]);
        continue;
      }
      Monomial gm = g[b].monomial * m;
      if (a == f.size()) {
        out.push_back({std::move(gm), field.neg(field.mul(c, g[b].coeff))});
        ++b;
        continue;
      }
      const auto cmp = order.compare(f[a].monomial, gm);
      if (cmp > 0) {
        out.push_back(f[a++]);
      } else if (cmp < 0) {
        out.push_back({std::move(gm), field.neg(field.mul(c, g[b].coeff))});
        ++b;
      } else {
        const Coeff v = field.sub(f[a].coeff, field.mul(c, g[b].coeff));
        if (v != 0) out.push_back({std::move(gm), v});
        ++a;
        ++b;
      }
    }
    return out;
  }

  const Terms* find_reducer(const Monomial& u, const std::vector<const Terms*>& reducers) const {
    for (const Terms* g : reducers)
      if (g->front().monomial.divides(u)) return g;
    return nullptr;
  }

  // Reduces f by the monic reducers (first divisor wins). When `full` is false
  // only the head is reduced.
  // Sparse accumulator plus a max-heap of its monomials; every key of `acc`
  // sits in the heap exactly once.
  Terms reduce(Terms f, const std::vector<const Terms*>& reducers, bool full) const {
    if (f.empty()) return f;
    if (!full && find_reducer(f.front().monomial, reducers) == nullptr) return f;
    auto heap_less = [this](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; };
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(f.size() * 2);
    std::vector<Monomial> heap;
    heap.reserve(f.size() * 2);
    for (Term& t : f) {
      acc.emplace(t.monomial, t.coeff);
      heap.push_back(std::move(t.monomial));
    }
    std::make_heap(heap.begin(), heap.end(), heap_less);

    Terms done;
    std::uint32_t steps = 0;
    while (!heap.empty()) {
      if ((++steps & 0x3f) == 0) deadline.check();
      std::pop_heap(heap.begin(), heap.end(), heap_less);
      Monomial u = std::move(heap.back());
      heap.pop_back();
      auto it = acc.find(u);
      const Coeff c = it->second;
      acc.erase(it);
      if (c == 0) continue;
      const Terms* g = find_reducer(u, reducers);
      if (g == nullptr) {
        done.push_back({std::move(u), c});
        if (!full) break;
        continue;
      }
      const Monomial m = u / g->front().monomial;
      for (std::size_t k = 1; k < g->size(); ++k) {
        Monomial w = (*g)[k].monomial * m;
        auto [slot, fresh] = acc.try_emplace(w, 0);
        slot->second = field.sub(slot->second, field.mul(c, (*g)[k].coeff));
        if (fresh) {
          heap.push_back(std::move(w));
          std::push_heap(heap.begin(), heap.end(), heap_less);
        }
      }
    }
    if (!full) {
      // the rest of the accumulator is the tail, in any order
      for (auto& [mono, coeff] : acc)
        if (coeff != 0) done.push_back({mono, coeff});
      std::sort(done.begin() + (done.empty() ? 0 : 1), done.end(),
                [this](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
    }
    return done;
  }

  Polynomial to_polynomial(const RingPtr& ring_ptr, Terms t) const {
    return Polynomial::from_terms(ring_ptr, std::move(t));
  }
};

struct Pair {
  int i;  // basis index, or input index when j < 0
  int j;
  Monomial lcm;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order) {
  const Deadline none;
  Engine eng{f.ring(), f.ring().field(), order, none};
  std::vector<Terms> store;
  store.reserve(divisors.size());
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("zero divisor polynomial");
    Terms t = eng.sorted(g);
    eng.make_monic(t);
    store.push_back(std::move(t));
  }
  std::vector<const Terms*> reducers;
  for (const Terms& t : store) reducers.push_back(&t);
  return eng.to_polynomial(f.ring_ptr(), eng.reduce(eng.sorted(f), reducers, true));
}

namespace {

// With `stop_on_nonsquarefree` the loop returns the active elements as soon as
// one of them gets a non-squarefree leading term (homogeneous input only).
std::vector<Polynomial> buchberger_impl(std::span<const Polynomial> gens, const TermOrder& order,
                                        const Deadline& deadline, GroebnerStats* stats, bool stop_on_nonsquarefree,
                                        bool* stopped) {
  if (stopped) *stopped = false;
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  if (gens.empty()) return {};
  const RingPtr ring_ptr = gens.front().ring_ptr();
  const Ring& ring = *ring_ptr;
  Engine eng{ring, ring.field(), order, deadline};

  bool homogeneous = true;
  std::vector<Terms> inputs;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (!(g.ring() == ring)) throw std::invalid_argument("generators live in different rings");
    homogeneous = homogeneous && g.multidegree().has_value();
    Terms t = eng.sorted(g);
    eng.make_monic(t);
    inputs.push_back(std::move(t));
  }

  std::vector<Terms> basis;
  std::vector<bool> active;
  // Reducers sorted by ascending leading term; rebuilt on insertion.
  std::vector<const Terms*> reducers;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    const auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j < 0 || b.j < 0) {
      if ((a.j < 0) != (b.j < 0)) return a.j < 0;  // inputs before S-pairs
    }
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  for (std::size_t k = 0; k < inputs.size(); ++k) queue.insert({static_cast<int>(k), -1, inputs[k].front().monomial});

  auto lead = [&](int k) -> const Monomial& { return basis[k].front().monomial; };

  auto check_homogeneous = [&](const Terms& t) {
    if (!homogeneous) return;
    const Multidegree d = t.front().monomial.multidegree(ring);
    for (const Term& x : t)
      if (x.monomial.multidegree(ring) != d)
        throw std::logic_error("Groebner engine produced a non-homogeneous element from homogeneous input");
  };

  auto install = [&](Terms h) {
    const int hi = static_cast<int>(basis.size());
    basis.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = lead(hi);

    // Gebauer-Moeller update.
    std::vector<std::pair<int, Monomial>> cand;
    for (int g = 0; g < hi; ++g)
      if (active[g]) cand.emplace_back(g, lh.lcm(lead(g)));
    std::vector<bool> keep(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool ok = lh.coprime(lead(cand[a].first));
      if (!ok) {
        ok = true;
        for (std::size_t b = 0; b < cand.size() && ok; ++b) {
          if (b == a) continue;
          const bool later_in_c = b > a;
          const bool in_d = b < a && keep[b];
          if ((later_in_c || in_d) && cand[b].second.divides(cand[a].second)) ok = false;
        }
      }
      keep[a] = ok;
      if (!ok) ++st.chain_criterion;
    }
    for (auto it = queue.begin(); it != queue.end();) {
      if (it->j >= 0 && lh.divides(it->lcm) && lead(it->i).lcm(lh) != it->lcm && lead(it->j).lcm(lh) != it->lcm) {
        ++st.chain_criterion;
        it = queue.erase(it);
      } else {
        ++it;
      }
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (lh.coprime(lead(cand[a].first))) {
        ++st.product_criterion;
        continue;
      }
      queue.insert({cand[a].first, hi, cand[a].second});
    }
    for (int g = 0; g < hi; ++g)
      if (active[g] && lh.divides(lead(g))) active[g] = false;

    reducers.clear();
    for (int g = 0; g <= hi; ++g)
      if (active[g]) reducers.push_back(&basis[g]);
    std::sort(reducers.begin(), reducers.end(),
              [&](const Terms* a, const Terms* b) { return order.compare(a->front().monomial, b->front().monomial) < 0; });
  };

  while (!queue.empty()) {
    deadline.check();
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    Terms s;
    if (p.j < 0) {
      s = inputs[p.i];
    } else {
      const Terms& f = basis[p.i];
      const Terms& g = basis[p.j];
      const Monomial mf = p.lcm / f.front().monomial;
      const Monomial mg = p.lcm / g.front().monomial;
      Terms ff;
      ff.reserve(f.size());
      for (const Term& t : f) ff.push_back({t.monomial * mf, t.coeff});
      // ff - mg*g with both heads cancelling
      s = eng.sub_mul(ff, 1, 1, mg, g);
    }
    ++st.pairs_reduced;
    Terms r = eng.reduce(std::move(s), reducers, false);
    if (r.empty()) {
      ++st.zero_reductions;
      continue;
    }
    eng.make_monic(r);
    check_homogeneous(r);
    const bool squarefree = r.front().monomial.is_squarefree();
    install(std::move(r));
    if (stop_on_nonsquarefree && homogeneous && !squarefree) {
      if (stopped) *stopped = true;
      std::vector<Polynomial> partial;
      for (std::size_t g = 0; g < basis.size(); ++g)
        if (active[g]) partial.push_back(eng.to_polynomial(ring_ptr, basis[g]));
      return partial;
    }
  }

  // Interreduce the minimal basis.
  std::vector<int> idx;
  for (std::size_t g = 0; g < basis.size(); ++g)
    if (active[g]) idx.push_back(static_cast<int>(g));
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return order.compare(lead(a), lead(b)) < 0; });
  std::vector<Polynomial> out;
  for (int k : idx) {
    std::vector<const Terms*> others;
    for (int o : idx)
      if (o != k) others.push_back(&basis[o]);
    Terms tail(basis[k].begin() + 1, basis[k].end());
    Terms reduced = eng.reduce(std::move(tail), others, true);
    reduced.insert(reduced.begin(), basis[k].front());
    out.push_back(eng.to_polynomial(ring_ptr, std::move(reduced)));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const TermOrder& order, const Deadline& deadline,
                                   GroebnerStats* stats) {
  return buchberger_impl(gens, order, deadline, stats, false, nullptr);
}

PartialInitialIdeal initial_ideal_until_nonsquarefree(const Ideal& ideal, const TermOrder& order,
                                                      const Deadline& deadline) {
  bool stopped = false;
  const auto basis = buchberger_impl(ideal.gens(), order, deadline, nullptr, true, &stopped);
  if (basis.empty()) return {MonomialIdeal(ideal.ring_ptr()), true};
  return {leading_term_ideal(basis, order), !stopped};
}

// ---------------------------------------------------------------------------
// Ideal

bool same_order(const TermOrder& a, const TermOrder& b) {
  if (a.kind() != b.kind() || a.default_priority() != b.default_priority()) return false;
  return a.default_priority();  // custom priorities are never shared
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (Polynomial& g : gens) {
    if (!(g.ring() == *ring_)) throw std::invalid_argument("generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.multidegree().has_value(); });
}

const std::vector<Polynomial>& Ideal::groebner_basis(const TermOrder& order, const Deadline& deadline) const {
  {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, basis] : cache_->bases)
      if (same_order(o, order)) return *basis;
  }
  auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, order, deadline));
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, b] : cache_->bases)
    if (same_order(o, order)) return *b;
  cache_->bases.emplace_back(order, basis);
  return *basis;
}

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(all));
}

MonomialIdeal leading_term_ideal(std::span<const Polynomial> polys, const TermOrder& order) {
  if (polys.empty()) throw std::invalid_argument("leading_term_ideal needs a ring; pass at least one polynomial");
  std::vector<Monomial> leads;
  for (const Polynomial& p : polys) leads.push_back(p.leading_term(order).monomial);
  return MonomialIdeal(polys.front().ring_ptr(), std::move(leads));
}

MonomialIdeal initial_ideal(const Ideal& ideal, const TermOrder& order, const Deadline& deadline) {
  const auto& gb = ideal.groebner_basis(order, deadline);
  if (gb.empty()) return MonomialIdeal(ideal.ring_ptr());
  return leading_term_ideal(gb, order);
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const TermOrder& order) {
  if (f.is_zero()) return true;
  const auto& gb = ideal.groebner_basis(order);
  if (gb.empty()) return false;
  return normal_form(f, gb, order).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small, const TermOrder& order) {
  return std::all_of(small.gens().begin(), small.gens().end(),
                     [&](const Polynomial& g) { return ideal_membership(g, big, order); });
}

bool ideals_equal(const Ideal& a, const Ideal& b, const TermOrder& order) {
  return ideal_contains(a, b, order) && ideal_contains(b, a, order);
}

std::vector<Polynomial> component_basis(const Ideal& ideal, const std::vector<int>& subset, const TermOrder& order) {
  if (subset.empty()) throw std::invalid_argument("component_basis needs a nonempty column set");
  const Ring& ring = ideal.ring();
  const RingPtr& rp = ideal.ring_ptr();
  std::vector<int> cols = subset;
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw std::invalid_argument("component_basis expects a set of columns");
  for (int j : cols)
    if (j < 1 || j > ring.cols()) throw std::out_of_range("column outside the ring");

  // All squarefree-degree monomials prod_{j in A} x_{i_j j}.
  std::vector<Monomial> monos{Monomial(ring.num_vars())};
  for (int j : cols) {
    std::vector<Monomial> next;
    for (const Monomial& m : monos)
      for (int i = 1; i <= ring.block(j); ++i) next.push_back(m * Monomial::variable(ring.num_vars(), ring.index(i, j)));
    monos = std::move(next);
  }
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });

  const auto& gb = ideal.groebner_basis(order);
  if (gb.empty()) return {};

  // Column k of the coefficient map holds NF(monos[k]) over the remainder monomials.
  std::vector<Polynomial> nfs;
  std::vector<Monomial> rem;
  for (const Monomial& m : monos) {
    nfs.push_back(normal_form(Polynomial::monomial(rp, m), gb, order));
    for (const Term& t : nfs.back().terms()) rem.push_back(t.monomial);
  }
  std::sort(rem.begin(), rem.end());
  rem.erase(std::unique(rem.begin(), rem.end()), rem.end());
  Matrix map(static_cast<int>(rem.size()), static_cast<int>(monos.size()));
  for (std::size_t k = 0; k < nfs.size(); ++k)
    for (const Term& t : nfs[k].terms()) {
      const auto row = std::lower_bound(rem.begin(), rem.end(), t.monomial) - rem.begin();
      map.at(static_cast<int>(row), static_cast<int>(k)) = t.coeff;
    }
  const PrimeField& f = ring.field();
  auto kernel = nullspace(f, std::move(map));
  if (kernel.empty()) return {};
  Matrix kmat(static_cast<int>(kernel.size()), static_cast<int>(monos.size()));
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) kmat.at(static_cast<int>(r), static_cast<int>(c)) = kernel[r][c];
  const auto pivots = row_reduce(f, kmat);
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> terms;
    for (int c = 0; c < kmat.cols; ++c)
      if (kmat.at(static_cast<int>(r), c) != 0) terms.push_back({monos[c], kmat.at(static_cast<int>(r), c)});
    out.push_back(Polynomial::from_terms(rp, std::move(terms)));
  }
  return out;
}

}  // namespace gincs
