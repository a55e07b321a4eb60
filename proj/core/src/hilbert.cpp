#include "gincs/hilbert.hpp"

#include <algorithm>

#include "gincs/errors.hpp"
#include "gincs/multigrading.hpp"

namespace gincs {

namespace {

std::vector<std::vector<int>> minimal_exponents(std::vector<std::vector<int>> gens) {
  auto divides = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (h != g && divides(h, g)) redundant = true;
    if (!redundant) out.push_back(g);
  }
  return out;
}

RingPtr t_ring(int n) { return make_ring(RingConfig::uniform(n, 1)); }

// Monomial ideal quotient J : x and sum J + (x).
std::vector<Monomial> colon_variable(const std::vector<Monomial>& gens, int var) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const Monomial& g : gens) {
    Monomial h = g;
    if (h[var] > 0) h.set(var, h[var] - 1);
    out.push_back(std::move(h));
  }
  return out;
}

KPolynomial k_recursive(const Ring& ring, std::vector<Monomial> gens) {
  const int n = ring.cols();
  if (gens.empty()) return KPolynomial::constant(n, 1);
  // minimalize
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> mins;
  for (Monomial& g : gens)
    if (std::none_of(mins.begin(), mins.end(), [&](const Monomial& h) { return h.divides(g); })) mins.push_back(std::move(g));
  if (mins.front().is_one()) return KPolynomial(n);

  std::vector<int> count(ring.num_vars(), 0);
  for (const Monomial& g : mins)
    for (int v : g.support()) ++count[v];
  const int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[pivot] <= 1) {
    // pairwise coprime generators
    KPolynomial k = KPolynomial::constant(n, 1);
    for (const Monomial& g : mins) k = k * (KPolynomial::constant(n, 1) - KPolynomial::monomial(n, g.multidegree(ring)));
    return k;
  }
  const Monomial x = Monomial::variable(ring.num_vars(), pivot);
  std::vector<Monomial> with_x{x};
  for (const Monomial& g : mins)
    if (g[pivot] == 0) with_x.push_back(g);
  KPolynomial k = k_recursive(ring, std::move(with_x));
  return k + k_recursive(ring, colon_variable(mins, pivot)).shifted(x.multidegree(ring));
}

}  // namespace

BoundedMonomialIdeal::BoundedMonomialIdeal(std::vector<int> bounds, std::vector<std::vector<int>> gens)
    : bounds_(std::move(bounds)) {
  for (const auto& g : gens) {
    if (g.size() != bounds_.size()) throw std::invalid_argument("exponent vector has the wrong length");
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] < 0 || g[j] > bounds_[j])
        throw ContractError("generator exponent exceeds the bound m_" + std::to_string(j + 1));
  }
  gens_ = minimal_exponents(std::move(gens));
}

MonomialIdeal BoundedMonomialIdeal::as_monomial_ideal() const {
  const RingPtr t = t_ring(num_vars());
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.emplace_back(std::span<const int>(g));
  return MonomialIdeal(t, std::move(gens));
}

std::string BoundedMonomialIdeal::render() const {
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ", ";
    std::string mono;
    for (int j = 0; j < num_vars(); ++j) {
      if (gens_[k][j] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "y" + std::to_string(j + 1);
      if (gens_[k][j] > 1) mono += "^" + std::to_string(gens_[k][j]);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out + ")";
}

KPolynomial k_polynomial_monomial(const MonomialIdeal& ideal) { return k_recursive(ideal.ring(), ideal.gens()); }

KPolynomial k_polynomial(const Ideal& ideal, const TermOrder& order, const Deadline& deadline) {
  return k_polynomial_monomial(initial_ideal(ideal, order, deadline));
}

KPolynomial k_polynomial_of_ideal(const BoundedMonomialIdeal& ideal) {
  return KPolynomial::constant(ideal.num_vars(), 1) - k_polynomial_monomial(ideal.as_monomial_ideal());
}

MonomialIdeal polarize(const BoundedMonomialIdeal& ideal, const RingPtr& s) {
  if (static_cast<int>(ideal.bounds().size()) != s->cols() || ideal.bounds() != s->config().blocks)
    throw ContractError("polarization bounds must equal the block sizes of S");
  std::vector<Monomial> gens;
  for (const auto& a : ideal.gens()) {
    Monomial m(s->num_vars());
    for (int j = 1; j <= s->cols(); ++j)
      for (int i = 1; i <= a[j - 1]; ++i) m.set(s->index(i, j), 1);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(s, std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!is_radical_monomial(ideal)) throw ContractError("Alexander dual requires a squarefree monomial ideal");
  const Ring& ring = ideal.ring();
  const int nv = ring.num_vars();
  std::vector<Monomial> dual{Monomial(nv)};
  for (const Monomial& u : ideal.gens()) {
    const std::vector<int> prime = u.support();
    std::vector<Monomial> next;
    for (const Monomial& d : dual) {
      if (!d.coprime(u)) {
        next.push_back(d);
        continue;
      }
      for (int v : prime) next.push_back(d * Monomial::variable(nv, v));
    }
    dual = MonomialIdeal(ideal.ring_ptr(), std::move(next)).gens();
  }
  return MonomialIdeal(ideal.ring_ptr(), std::move(dual));
}

MonomialIdeal psi(const BoundedMonomialIdeal& ideal, const RingPtr& s) { return alexander_dual(polarize(ideal, s)); }

BoundedMonomialIdeal psi_inverse(const MonomialIdeal& ideal) {
  if (!is_radical_monomial(ideal) || !is_borel_fixed(ideal))
    throw ContractError("psi inverse requires a radical Borel-fixed monomial ideal");
  const Ring& ring = ideal.ring();
  const MonomialIdeal dual = alexander_dual(ideal);
  std::vector<std::vector<int>> gens;
  for (const Monomial& m : dual.gens()) {
    std::vector<int> a(ring.cols(), 0);
    for (int j = 1; j <= ring.cols(); ++j) {
      int top = 0;
      for (int i = 1; i <= ring.block(j); ++i) {
        if (m[ring.index(i, j)] == 0) continue;
        if (i != top + 1) throw ContractError("Alexander dual generator is not a polarization");
        top = i;
      }
      a[j - 1] = top;
    }
    gens.push_back(std::move(a));
  }
  return BoundedMonomialIdeal(ring.config().blocks, std::move(gens));
}

bool verify_jande(const BoundedMonomialIdeal& i, const MonomialIdeal& j) {
  if (!in_brad(j)) throw ContractError("verify_jande requires J in Brad(S)");
  if (i.num_vars() != j.ring().cols()) return false;
  return k_polynomial_monomial(j).one_minus() == k_polynomial_of_ideal(i);
}

bool k_multiplicativity_check(const Ideal& i, const Ideal& j, const TermOrder& order) {
  std::vector<bool> used(i.ring().num_vars(), false);
  for (const Polynomial& f : i.gens())
    for (int v : f.variables()) used[v] = true;
  for (const Polynomial& f : j.gens())
    for (int v : f.variables())
      if (used[v]) throw ContractError("ideals must be generated in disjoint sets of variables");
  return k_polynomial(i + j, order) == k_polynomial(i, order) * k_polynomial(j, order);
}

int codimension(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return 0;
  if (ideal.is_unit()) return ideal.ring().num_vars() + 1;
  std::vector<Monomial> supports;
  for (const Monomial& g : ideal.gens()) {
    Monomial r(ideal.ring().num_vars());
    for (int v : g.support()) r.set(v, 1);
    supports.push_back(std::move(r));
  }
  const MonomialIdeal dual = alexander_dual(MonomialIdeal(ideal.ring_ptr(), std::move(supports)));
  int best = ideal.ring().num_vars();
  for (const Monomial& m : dual.gens()) best = std::min(best, m.degree());
  return best;
}

}  // namespace gincs
