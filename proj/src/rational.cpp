#include "lgm/rational.hpp"

#include <cctype>

#include "lgm/errors.hpp"

namespace lgm {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, unsigned long den) {
  if (den == 0) throw input_error("rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, den);
  mpq_canonicalize(q_);
}

Rational::Rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw input_error("bad rational literal: '" + std::string(text) + "'");
  mpq_init(q_);
  mpz_set_str(mpq_numref(q_), std::string(num).c_str(), 10);
  mpz_set_str(mpq_denref(q_), std::string(den).c_str(), 10);
  if (mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw input_error("rational with zero denominator: '" + std::string(text) + "'");
  }
  if (neg) mpq_neg(q_, q_);
  mpq_canonicalize(q_);
}

Rational Rational::factorial(unsigned long n) {
  Rational r;
  mpz_fac_ui(mpq_numref(r.q_), n);
  return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  Rational r;
  if (k > n) return r;
  mpz_bin_uiui(mpq_numref(r.q_), n, k);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw invariant_error("rational division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::operator-() const {
  Rational r(*this);
  mpq_neg(r.q_, r.q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw invariant_error("inverse of zero");
  Rational r(*this);
  mpq_inv(r.q_, r.q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

std::string Rational::str() const {
  char* raw = mpq_get_str(nullptr, 10, q_);
  std::string out(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, out.size() + 1);
  return out;
}

std::size_t Rational::hash() const {
  // Cheap but adequate: fold the low limbs of numerator and denominator.
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](unsigned long v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  mix(mpz_get_ui(mpq_numref(q_)));
  mix(static_cast<unsigned long>(mpz_sgn(mpq_numref(q_)) + 2));
  mix(mpz_get_ui(mpq_denref(q_)));
  return h;
}

}  // namespace lgm
