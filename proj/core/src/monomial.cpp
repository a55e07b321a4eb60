#include "gincs/monomial.hpp"

#include <stdexcept>

namespace gincs {

namespace {

Monomial::Exponent checked(int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > Monomial::kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(int num_vars) : exps_(num_vars, 0) {}

Monomial::Monomial(std::span<const int> exponents) : exps_(exponents.size(), 0) {
  for (std::size_t i = 0; i < exponents.size(); ++i) exps_[i] = checked(exponents[i]);
  refresh();
}

Monomial Monomial::variable(int num_vars, int index, int power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(int index, int power) {
  exps_.at(index) = checked(power);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    degree_ += exps_[i];
    mask_ |= std::uint64_t{1} << (i % 64);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (mask_ & ~other.mask_) != 0) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (Exponent e : exps_)
    if (e > 1) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial division is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

Multidegree Monomial::multidegree(const Ring& ring) const {
  Multidegree d(ring.cols(), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) d[ring.column_of(static_cast<int>(i)) - 1] += exps_[i];
  return d;
}

std::string Monomial::render(const Ring& ring) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable_name(static_cast<int>(i));
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  return a.exps_.size() <=> b.exps_.size();
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gincs
