#include "lgm/laurent.hpp"

#include <algorithm>
#include <utility>

#include "lgm/errors.hpp"

namespace lgm {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw input_error("empty variable name");
    if (!index_.emplace(names_[i], i).second)
      throw input_error("duplicate variable name: " + names_[i]);
  }
}

std::optional<std::size_t> VariableSet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableSet::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw input_error("unknown variable: " + std::string(name));
  return *i;
}

VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<VariableSet>(std::move(names));
}

VarsPtr merge_vars(const VarsPtr& a, const VarsPtr& b) {
  std::vector<std::string> names = a->names();
  for (const auto& n : b->names())
    if (!a->contains(n)) names.push_back(n);
  std::sort(names.begin(), names.end());
  return make_vars(std::move(names));
}

int total_degree(const Exps& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int compare_grlex(const Exps& a, const Exps& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

LaurentPolynomial LaurentPolynomial::zero(VarsPtr vars) {
  return LaurentPolynomial(std::move(vars));
}

LaurentPolynomial LaurentPolynomial::constant(VarsPtr vars, Rational c) {
  LaurentPolynomial p(vars);
  if (!c.is_zero()) p.terms_.push_back({Exps(vars->size(), 0), std::move(c)});
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(VarsPtr vars, std::string_view name, int exp) {
  Exps e(vars->size(), 0);
  e[vars->index_of(name)] = exp;
  return monomial(std::move(vars), std::move(e), Rational(1));
}

LaurentPolynomial LaurentPolynomial::monomial(VarsPtr vars, Exps exps, Rational c) {
  if (exps.size() != vars->size()) throw invariant_error("monomial exponent arity mismatch");
  LaurentPolynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({std::move(exps), std::move(c)});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(VarsPtr vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exps.size() != vars->size()) throw invariant_error("term exponent arity mismatch");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_grlex(a.exps, b.exps) < 0; });
  LaurentPolynomial p(std::move(vars));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  }
  return p;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exps) == 0 &&
                            *std::max_element(terms_[0].exps.begin(), terms_[0].exps.end()) == 0);
}

bool LaurentPolynomial::depends_on(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.exps[var] != 0) return true;
  return false;
}

const Rational* LaurentPolynomial::coeff_of(const Exps& e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, const Exps& key) { return compare_grlex(t.exps, key) < 0; });
  if (it != terms_.end() && it->exps == e) return &it->coeff;
  return nullptr;
}

Rational LaurentPolynomial::constant_coefficient() const {
  const Rational* c = coeff_of(Exps(vars_->size(), 0));
  return c ? *c : Rational(0);
}

LaurentPolynomial LaurentPolynomial::operator-() const { return scaled(Rational(-1)); }

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
  LaurentPolynomial p(vars_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

LaurentPolynomial LaurentPolynomial::mul_monomial(const Exps& e, const Rational& c) const {
  if (e.size() != vars_->size()) throw invariant_error("monomial exponent arity mismatch");
  LaurentPolynomial p(vars_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) t.exps[i] += e[i];
    t.coeff *= c;
  }
  // A monomial shift can reorder grlex ties only through the degree part,
  // which shifts uniformly, so the order is preserved. Still easy to be safe:
  return from_terms(vars_, std::move(p.terms_));
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!(*a.vars_ == *b.vars_)) throw invariant_error("variable sets differ in '+'");
  std::vector<Term> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    int c = compare_grlex(ia->exps, ib->exps);
    if (c < 0)
      merged.push_back(*ia++);
    else if (c > 0)
      merged.push_back(*ib++);
    else {
      Rational s = ia->coeff + ib->coeff;
      if (!s.is_zero()) merged.push_back({ia->exps, std::move(s)});
      ++ia, ++ib;
    }
  }
  merged.insert(merged.end(), ia, a.terms_.end());
  merged.insert(merged.end(), ib, b.terms_.end());
  LaurentPolynomial p(a.vars_);
  p.terms_ = std::move(merged);
  return p;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!(*a.vars_ == *b.vars_)) throw invariant_error("variable sets differ in '*'");
  std::map<Exps, Rational, decltype([](const Exps& x, const Exps& y) {
             return compare_grlex(x, y) < 0;
           })>
      acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Exps e = ta.exps;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += tb.exps[i];
      auto [it, fresh] = acc.try_emplace(std::move(e), ta.coeff);
      if (fresh)
        it->second *= tb.coeff;
      else
        it->second += ta.coeff * tb.coeff;
    }
  LaurentPolynomial p(a.vars_);
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
  return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial acc = constant(vars_, Rational(1));
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!(*a.vars_ == *b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::with_vars(const VarsPtr& target) const {
  std::vector<int> where(vars_->size(), -1);
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if (auto j = target->find(vars_->name(i))) where[i] = static_cast<int>(*j);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exps e(target->size(), 0);
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (where[i] < 0)
        throw input_error("variable " + vars_->name(i) + " missing from target set");
      e[where[i]] = t.exps[i];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Exps LaurentPolynomial::min_exps() const {
  Exps m(vars_->size(), 0);
  if (terms_.empty()) return m;
  m = terms_[0].exps;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
  return m;
}

std::optional<LaurentPolynomial> exact_quotient(const LaurentPolynomial& num,
                                                const LaurentPolynomial& den) {
  if (den.is_zero()) throw invariant_error("division by zero polynomial");
  const VarsPtr& vars = num.vars();
  if (!(*vars == *den.vars())) throw invariant_error("variable sets differ in division");
  if (num.is_zero()) return LaurentPolynomial::zero(vars);

  if (den.is_monomial()) {
    const Term& d = den.terms()[0];
    Exps neg = d.exps;
    for (int& x : neg) x = -x;
    return num.mul_monomial(neg, d.coeff.inverse());
  }

  // Shift both into the polynomial ring (all exponents >= 0), then divide by
  // leading terms. Leading terms multiply, so when den | num the remainder
  // chain stays divisible and strictly decreases in grlex; otherwise it hits
  // a leading term that den's cannot divide.
  Exps mn = num.min_exps(), md = den.min_exps();
  Exps neg_mn = mn, neg_md = md;
  for (int& x : neg_mn) x = -x;
  for (int& x : neg_md) x = -x;
  LaurentPolynomial rem = num.mul_monomial(neg_mn, Rational(1));
  LaurentPolynomial d = den.mul_monomial(neg_md, Rational(1));

  const Term& lead_d = d.terms().front();
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lead_r = rem.terms().front();
    Exps q = lead_r.exps;
    bool ok = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] -= lead_d.exps[i];
      if (q[i] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    Rational c = lead_r.coeff / lead_d.coeff;
    quotient.push_back({q, c});
    rem = rem - d.mul_monomial(q, c);
  }
  // Undo the shifts: num/den = (rem_shift / den_shift) * x^(mn - md).
  Exps shift = mn;
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= md[i];
  return LaurentPolynomial::from_terms(vars, std::move(quotient))
      .mul_monomial(shift, Rational(1));
}

}  // namespace lgm
