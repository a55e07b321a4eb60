#include "gincs/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gincs {

namespace {

bool canonical_desc(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const PrimeField& f = p.ring_->field();
  std::sort(terms.begin(), terms.end(), canonical_desc);
  for (Term& t : terms) {
    if (t.monomial.num_vars() != p.ring_->num_vars())
      throw std::invalid_argument("monomial does not belong to the ring");
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff % f.characteristic() != 0) {
      p.terms_.push_back({std::move(t.monomial), t.coeff % f.characteristic()});
    }
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const Coeff r = ring->field().reduce(c);
  Polynomial p(ring);
  if (r != 0) p.terms_.push_back({Monomial(ring->num_vars()), r});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, Variable v) {
  const int idx = ring->index(v);
  return monomial(ring, Monomial::variable(ring->num_vars(), idx), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coeff c) {
  Polynomial p(ring);
  c %= ring->field().characteristic();
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  const PrimeField& f = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      r.terms_.push_back(*b++);
    } else {
      const Coeff c = f.add(a->coeff, b->coeff);
      if (c != 0) r.terms_.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::scaled(Coeff c) const {
  const PrimeField& f = ring_->field();
  c %= f.characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = f.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  Polynomial r = scaled(c);
  for (Term& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  const PrimeField& f = ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : other.terms_) {
      Coeff& slot = acc[a.monomial * b.monomial];
      slot = f.add(slot, f.mul(a.coeff, b.coeff));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  std::sort(out.begin(), out.end(), canonical_desc);
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  if (order.kind() == TermOrder::Kind::lex && order.default_priority()) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_term(order).coeff));
}

std::optional<Multidegree> Polynomial::multidegree() const {
  if (terms_.empty()) return std::nullopt;
  Multidegree d = terms_.front().monomial.multidegree(*ring_);
  for (const Term& t : terms_)
    if (t.monomial.multidegree(*ring_) != d) return std::nullopt;
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::vector<int> Polynomial::variables() const {
  std::vector<bool> used(ring_->num_vars(), false);
  for (const Term& t : terms_)
    for (int v : t.monomial.support()) used[v] = true;
  std::vector<int> out;
  for (int v = 0; v < ring_->num_vars(); ++v)
    if (used[v]) out.push_back(v);
  return out;
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  const PrimeField& f = ring_->field();
  std::string out;
  for (const Term& t : terms_) {
    std::int64_t c = f.balanced(t.coeff);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.monomial.is_one()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += t.monomial.render(*ring_);
    }
  }
  return out;
}

}  // namespace gincs
