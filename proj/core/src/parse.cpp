#include "gincs/parse.hpp"

#include <cctype>
#include <cstdint>

#include "gincs/errors.hpp"

namespace gincs {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
    }
    return v;
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int small_int(Cursor& c, std::uint64_t limit) {
  const std::uint64_t v = c.number();
  if (v > limit) c.fail("index or exponent too large");
  return static_cast<int>(v);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Cursor c(text);
  const PrimeField& f = ring->field();
  std::vector<Term> terms;
  if (c.done()) c.fail("empty expression");
  bool first = true;
  while (!c.done()) {
    bool negative = false;
    if (c.accept('+')) {
    } else if (c.accept('-')) {
      negative = true;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;

    Coeff coeff = 1;
    Monomial mono(ring->num_vars());
    bool factor_expected = true;
    while (factor_expected) {
      const char ch = c.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = f.mul(coeff, static_cast<Coeff>(c.number() % f.characteristic()));
      } else if (ch == 'x') {
        c.accept('x');
        c.expect('[');
        const int row = small_int(c, 1u << 20);
        c.expect(',');
        const int col = small_int(c, 1u << 20);
        c.expect(']');
        int power = 1;
        if (c.accept('^')) power = small_int(c, Monomial::kMaxExponent);
        const int idx = ring->index(Variable{row, col});
        mono = mono * Monomial::variable(ring->num_vars(), idx, power);
      } else {
        c.fail("expected a coefficient or a variable x[i,j]");
      }
      factor_expected = c.accept('*');
    }
    terms.push_back({std::move(mono), negative ? f.neg(coeff) : coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<int> parse_t_monomial(std::string_view text, int n) {
  Cursor c(text);
  std::vector<int> exps(n, 0);
  if (c.done()) c.fail("empty monomial");
  bool factor_expected = true;
  while (factor_expected) {
    const char ch = c.peek();
    if (ch == '1') {
      if (c.number() != 1) c.fail("only the constant 1 is allowed");
    } else if (ch == 'y') {
      c.accept('y');
      const std::size_t at = c.pos();
      const int j = small_int(c, 1u << 20);
      if (j < 1 || j > n) throw ParseError("variable y" + std::to_string(j) + " outside T", at);
      int power = 1;
      if (c.accept('^')) power = small_int(c, Monomial::kMaxExponent);
      exps[j - 1] += power;
    } else {
      c.fail("expected a variable yJ");
    }
    factor_expected = c.accept('*');
  }
  if (!c.done()) c.fail("trailing input");
  return exps;
}

}  // namespace gincs
