#include "lgm/ratfun.hpp"

#include <utility>

#include "lgm/errors.hpp"

namespace lgm {

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw invariant_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::constant(den_.vars(), Rational(1));
    return;
  }
  // Extract monomial contents: shift den so its componentwise-min exponent is
  // zero, fold the compensating monomial into num, and scale den's leading
  // coefficient to 1.
  Exps shift = den_.min_exps();
  Rational lead = den_.terms().front().coeff;
  Exps neg = shift;
  for (int& x : neg) x = -x;
  den_ = den_.mul_monomial(neg, lead.inverse());
  num_ = num_.mul_monomial(neg, lead.inverse());
}

RationalFunction RationalFunction::of(LaurentPolynomial num) {
  LaurentPolynomial one = LaurentPolynomial::constant(num.vars(), Rational(1));
  return RationalFunction(std::move(num), std::move(one));
}

RationalFunction RationalFunction::of(LaurentPolynomial num, LaurentPolynomial den) {
  if (!(*num.vars() == *den.vars()))
    throw invariant_error("variable sets differ in rational function");
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::constant(const VarsPtr& vars, Rational c) {
  return of(LaurentPolynomial::constant(vars, std::move(c)));
}

RationalFunction RationalFunction::variable(const VarsPtr& vars, std::string_view name) {
  return of(LaurentPolynomial::variable(vars, name));
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw invariant_error("inverse of the zero function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return constant(vars(), Rational(1));
  RationalFunction base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  RationalFunction acc = constant(vars(), Rational(1));
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction::of(a.num_ + b.num_, a.den_);
  return RationalFunction::of(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::of(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool RationalFunction::equals_constant(const Rational& c) const {
  return num_ == den_.scaled(c);
}

std::optional<LaurentPolynomial> RationalFunction::to_laurent() const {
  return exact_quotient(num_, den_);
}

LaurentPolynomial RationalFunction::expect_laurent(std::string_view what) const {
  auto p = to_laurent();
  if (!p) throw invariant_error(std::string(what) + " is not a Laurent polynomial");
  return *p;
}

bool RationalFunction::depends_on(std::string_view name) const {
  auto idx = vars()->find(name);
  if (!idx) return false;
  if (!num_.depends_on(*idx) && !den_.depends_on(*idx)) return false;
  // Rename the variable to a fresh one and cross-multiply: the value is free
  // of `name` iff num(x) * den(x') == num(x') * den(x).
  std::vector<std::string> names = vars()->names();
  std::string fresh = std::string(name) + "#";
  while (vars()->contains(fresh)) fresh += "#";
  names.push_back(fresh);
  VarsPtr ext = make_vars(std::move(names));
  auto renamed = [&](const LaurentPolynomial& p) {
    std::vector<Term> ts = p.terms();
    std::size_t from = *idx, to = ext->index_of(fresh);
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      Exps e(ext->size(), 0);
      for (std::size_t i = 0; i < t.exps.size(); ++i) e[i] = t.exps[i];
      e[to] = e[from];
      e[from] = 0;
      out.push_back({std::move(e), t.coeff});
    }
    return LaurentPolynomial::from_terms(ext, std::move(out));
  };
  LaurentPolynomial n0 = num_.with_vars(ext), d0 = den_.with_vars(ext);
  return !(n0 * renamed(den_) == renamed(num_) * d0);
}

RationalFunction RationalFunction::substituted(const Substitution& s) const {
  const VarsPtr& target = s.target;
  // Precompute the image of each source variable.
  std::vector<RationalFunction> image;
  image.reserve(vars()->size());
  for (std::size_t i = 0; i < vars()->size(); ++i) {
    const std::string& n = vars()->name(i);
    auto it = s.map.find(n);
    if (it != s.map.end()) {
      if (!(*it->second.vars() == *target))
        image.push_back(it->second.with_vars(target));
      else
        image.push_back(it->second);
    } else {
      image.push_back(RationalFunction::variable(target, n));
    }
  }
  const std::size_t nv = vars()->size();
  // den() is content-free with leading coefficient 1, so a trivial (monomial)
  // denominator is exactly the constant 1.
  std::vector<char> den_one(nv);
  for (std::size_t i = 0; i < nv; ++i) den_one[i] = image[i].den().is_constant();
  // Cached powers of the image numerators and denominators.
  std::vector<std::map<int, LaurentPolynomial>> npow(nv), dpow(nv);
  auto powc = [](std::map<int, LaurentPolynomial>& cache, const LaurentPolynomial& base,
                 int e) -> const LaurentPolynomial& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, base.pow(static_cast<unsigned>(e))).first->second;
  };
  auto mul_into = [](LaurentPolynomial& p, const LaurentPolynomial& f) {
    if (f.is_monomial())
      p = p.mul_monomial(f.terms().front().exps, f.terms().front().coeff);
    else
      p = p * f;
  };
  // All terms are put over the one common denominator
  //   D = prod_i num_i^nmax_i * den_i^pmax_i,
  // so the i-th factor of a scaled term is num_i^(nmax_i + e) * den_i^(pmax_i - e);
  // nothing is ever recomputed and denominators cannot compound.
  auto apply = [&](const LaurentPolynomial& p) {
    std::vector<int> pmax(nv, 0), nmax(nv, 0);
    for (const auto& t : p.terms())
      for (std::size_t i = 0; i < nv; ++i) {
        pmax[i] = std::max(pmax[i], t.exps[i]);
        nmax[i] = std::max(nmax[i], -t.exps[i]);
      }
    LaurentPolynomial dcom = LaurentPolynomial::constant(target, Rational(1));
    for (std::size_t i = 0; i < nv; ++i) {
      if (nmax[i] > 0) mul_into(dcom, powc(npow[i], image[i].num(), nmax[i]));
      if (pmax[i] > 0 && !den_one[i]) mul_into(dcom, powc(dpow[i], image[i].den(), pmax[i]));
    }
    LaurentPolynomial acc = LaurentPolynomial::zero(target);
    for (const auto& t : p.terms()) {
      LaurentPolynomial term = LaurentPolynomial::constant(target, t.coeff);
      for (std::size_t i = 0; i < nv; ++i) {
        int en = nmax[i] + t.exps[i];
        if (en > 0) mul_into(term, powc(npow[i], image[i].num(), en));
        if (!den_one[i]) {
          int ed = pmax[i] - t.exps[i];
          if (ed > 0) mul_into(term, powc(dpow[i], image[i].den(), ed));
        }
      }
      acc = acc + term;
    }
    return RationalFunction::of(std::move(acc), std::move(dcom));
  };
  RationalFunction r = apply(num_) / apply(den_);
  // Opportunistic reduction: pipeline values are usually Laurent, and keeping
  // them in num-only form stops denominators from compounding across steps.
  if (!r.den_.is_monomial())
    if (auto p = r.to_laurent()) return RationalFunction::of(std::move(*p));
  return r;
}

RationalFunction RationalFunction::with_vars(const VarsPtr& target) const {
  return RationalFunction(num_.with_vars(target), den_.with_vars(target));
}

}  // namespace lgm
