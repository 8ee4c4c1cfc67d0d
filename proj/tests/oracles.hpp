#pragma once

// Reference implementations the library is tested against. Written for
// obviousness, not speed: a dense-map Laurent multiply for constant terms
// and a Caratheodory hull-membership check by exhaustive subset solving.

#include <map>
#include <optional>
#include <vector>

#include "lgm/laurent.hpp"

namespace lgm::oracles {

using Table = std::map<Exps, Rational>;

inline Table table_of(const LaurentPolynomial& f) {
  Table t;
  for (const Term& term : f.terms()) t[term.exps] = term.coeff;
  return t;
}

inline Table table_mul(const Table& a, const Table& b) {
  Table out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.emplace(std::move(e), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Constant term of f^j by repeated naive multiplication.
inline Rational naive_constant_term(const LaurentPolynomial& f, unsigned j) {
  std::size_t n = f.vars()->names().size();
  Table acc{{Exps(n, 0), Rational(1)}};
  Table base = table_of(f);
  for (unsigned i = 0; i < j; ++i) acc = table_mul(acc, base);
  auto it = acc.find(Exps(n, 0));
  return it == acc.end() ? Rational(0) : it->second;
}

// Solves sum lambda_i * pts[i] = p, sum lambda_i = 1 by Gaussian elimination,
// for an affinely independent subset; nullopt when singular or inconsistent.
inline std::optional<std::vector<Rational>> affine_solve(
    const std::vector<Exps>& pts, const Exps& p) {
  std::size_t d = p.size(), m = pts.size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = Rational(pts[c][r]);
    a[r][m] = Rational(p[r]);
  }
  for (std::size_t c = 0; c <= m; ++c) a[d][c] = Rational(1);
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_row(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t r = rank;
    while (r <= d && a[r][c].is_zero()) ++r;
    if (r > d) return std::nullopt;  // affinely dependent subset: let a
                                     // smaller one handle this target
    std::swap(a[rank], a[r]);
    for (std::size_t rr = 0; rr <= d; ++rr) {
      if (rr == rank || a[rr][c].is_zero()) continue;
      Rational f = a[rr][c] / a[rank][c];
      for (std::size_t cc = c; cc <= m; ++cc) a[rr][cc] -= f * a[rank][cc];
    }
    pivot_row[c] = rank++;
  }
  for (std::size_t r = rank; r <= d; ++r)
    if (!a[r][m].is_zero()) return std::nullopt;
  std::vector<Rational> lambda(m);
  for (std::size_t c = 0; c < m; ++c)
    lambda[c] = a[pivot_row[c]][m] / a[pivot_row[c]][c];
  return lambda;
}

// p in conv(points), by Caratheodory: some affinely independent subset of at
// most dim+1 points combines to p with nonnegative weights. Exponential in
// the point count; use on small inputs only.
inline bool in_hull_oracle(const Exps& p, const std::vector<Exps>& points) {
  std::size_t d = p.size();
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (!idx.empty()) {
      std::vector<Exps> sub;
      for (std::size_t i : idx) sub.push_back(points[i]);
      if (auto lambda = affine_solve(sub, p)) {
        bool ok = true;
        for (const Rational& l : *lambda) ok = ok && l.sgn() >= 0;
        if (ok) return true;
      }
    }
    if (idx.size() == d + 1) return false;
    for (std::size_t i = from; i < points.size(); ++i) {
      idx.push_back(i);
      if (self(self, i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace lgm::oracles
