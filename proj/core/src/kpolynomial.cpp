#include "gincs/kpolynomial.hpp"

#include <stdexcept>

namespace gincs {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("K-polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("K-polynomial coefficient overflow");
  return r;
}

}  // namespace

KPolynomial KPolynomial::constant(int n, std::int64_t c) { return monomial(n, Exponents(n, 0), c); }

KPolynomial KPolynomial::monomial(int n, Exponents e, std::int64_t c) {
  if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector has the wrong length");
  KPolynomial p(n);
  p.add_term(e, c);
  return p;
}

std::int64_t KPolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void KPolynomial::add_term(const Exponents& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

KPolynomial KPolynomial::operator+(const KPolynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("K-polynomials over different variable counts");
  KPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

KPolynomial KPolynomial::operator-(const KPolynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("K-polynomials over different variable counts");
  KPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

KPolynomial KPolynomial::operator*(const KPolynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("K-polynomials over different variable counts");
  KPolynomial r(n_);
  Exponents e(n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, checked_mul(ca, cb));
    }
  return r;
}

KPolynomial KPolynomial::shifted(const Exponents& s) const {
  KPolynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (int i = 0; i < n_; ++i) f[i] += s[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

KPolynomial KPolynomial::one_minus() const {
  KPolynomial r(n_);
  for (const auto& [e, c] : terms_) {
    // c * prod_i (1 - Z_i)^{e_i}
    KPolynomial part = constant(n_, c);
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      KPolynomial factor(n_);
      std::int64_t binom = 1;
      for (int k = 0; k <= e[i]; ++k) {
        Exponents x(n_, 0);
        x[i] = k;
        factor.add_term(x, (k % 2 == 0) ? binom : -binom);
        binom = checked_mul(binom, e[i] - k) / (k + 1);
      }
      part = part * factor;
    }
    r = r + part;
  }
  return r;
}

std::int64_t KPolynomial::evaluate_at_ones() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

std::string KPolynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "Z" + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
  }
  return out;
}

}  // namespace gincs
