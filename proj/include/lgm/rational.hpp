#pragma once

#include <gmp.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lgm {

// Arbitrary-precision rational with value semantics. Kept canonical (reduced,
// positive denominator) by routing every mutation through mpq_*.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }  // NOLINT: implicit on purpose
  Rational(long num, unsigned long den);
  explicit Rational(std::string_view text);  // "p" or "p/q", q > 0 after reduction

  Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  static Rational factorial(unsigned long n);
  static Rational binomial(unsigned long n, unsigned long k);

  Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const;
  Rational inverse() const;
  Rational pow(long e) const;  // e < 0 requires nonzero base

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const;
  int sgn() const { return mpq_sgn(q_); }

  std::string str() const;  // "p/q", "/q" omitted when q == 1
  std::size_t hash() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }

 private:
  mpq_t q_;
};

}  // namespace lgm
