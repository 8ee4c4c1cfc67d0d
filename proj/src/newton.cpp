#include "lgm/newton.hpp"

#include <algorithm>

#include "lgm/errors.hpp"

namespace lgm {
namespace {

// Dense tableau simplex over exact rationals, Bland's rule. Problems here
// are tiny (tens of support points, a handful of coordinates).
struct Tableau {
  std::size_t m, n;                     // constraint rows, variable columns
  std::vector<std::vector<Rational>> t; // (m+1) x (n+1); row m = reduced costs, col n = rhs
  std::vector<std::size_t> basis;       // basic variable per row

  Rational& at(std::size_t i, std::size_t j) { return t[i][j]; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = t[pr][pc].inverse();
    for (auto& v : t[pr]) v *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pr || t[i][pc].is_zero()) continue;
      Rational factor = t[i][pc];
      for (std::size_t j = 0; j <= n; ++j) t[i][j] -= factor * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Zero out reduced costs of basic columns after (re)setting the objective.
  void price_out() {
    for (std::size_t i = 0; i < m; ++i) {
      if (t[m][basis[i]].is_zero()) continue;
      Rational factor = t[m][basis[i]];
      for (std::size_t j = 0; j <= n; ++j) t[m][j] -= factor * t[i][j];
    }
  }

  // Maximize; returns false on unboundedness (never expected here).
  bool optimize(std::size_t usable_cols) {
    for (;;) {
      std::size_t pc = n;
      for (std::size_t j = 0; j < usable_cols; ++j)
        if (t[m][j].sgn() > 0) { pc = j; break; }
      if (pc == n) return true;
      std::size_t pr = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][pc].sgn() <= 0) continue;
        if (pr == m) { pr = i; continue; }
        Rational cur = t[i][n] / t[i][pc], best = t[pr][n] / t[pr][pc];
        if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
      }
      if (pr == m) return false;
      pivot(pr, pc);
    }
  }
};

// Feasibility of {x >= 0, A x = b}; optionally maximize c.x afterwards and
// report the optimum. A is m x n.
struct LpResult {
  bool feasible = false;
  Rational objective;
};

LpResult solve_lp(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  const std::vector<Rational>* c) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i].sgn() < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }

  Tableau tab;
  tab.m = m;
  tab.n = n + m;  // artificials in columns n..n+m-1
  tab.t.assign(m + 1, std::vector<Rational>(tab.n + 1, Rational(0)));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
    tab.t[i][n + i] = Rational(1);
    tab.t[i][tab.n] = b[i];
    tab.basis[i] = n + i;
  }
  // Phase 1: maximize -(sum of artificials).
  for (std::size_t i = 0; i < m; ++i) tab.t[m][n + i] = Rational(-1);
  tab.price_out();
  if (!tab.optimize(tab.n)) throw invariant_error("phase-1 simplex unbounded");
  if (!tab.t[m][tab.n].is_zero()) return {};

  // Drive leftover artificials out of the basis (they sit at value 0).
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    std::size_t pc = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!tab.t[i][j].is_zero()) { pc = j; break; }
    if (pc < n) tab.pivot(i, pc);
    // else: redundant row; harmless to leave, its artificial stays at 0.
  }

  LpResult res;
  res.feasible = true;
  if (c) {
    for (std::size_t j = 0; j <= tab.n; ++j) tab.t[m][j] = Rational(0);
    for (std::size_t j = 0; j < n; ++j) tab.t[m][j] = (*c)[j];
    tab.price_out();
    if (!tab.optimize(n)) throw invariant_error("phase-2 simplex unbounded");
    res.objective = -tab.t[m][tab.n];
  }
  return res;
}

std::vector<Exps> support_of(const LaurentPolynomial& f) {
  std::vector<Exps> pts;
  pts.reserve(f.term_count());
  for (const auto& t : f.terms()) pts.push_back(t.exps);
  return pts;
}

// Rank over Q of the set {p - points[0]}.
std::size_t affine_rank(const std::vector<Exps>& points) {
  if (points.size() <= 1) return 0;
  const std::size_t d = points[0].size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> r(d);
    for (std::size_t c = 0; c < d; ++c)
      r[c] = Rational(static_cast<long>(points[i][c]) - points[0][c]);
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    Rational inv = rows[rank][col].inverse();
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (std::size_t c = 0; c < d; ++c) rows[i][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool point_in_hull(const Exps& p, const std::vector<Exps>& points) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  const std::size_t n = points.size();
  // lambda >= 0, sum lambda_i = 1, sum lambda_i * points_i = p.
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> b(d + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) a[c][i] = Rational(points[i][c]);
    a[d][i] = Rational(1);
  }
  for (std::size_t c = 0; c < d; ++c) b[c] = Rational(p[c]);
  b[d] = Rational(1);
  return solve_lp(std::move(a), std::move(b), nullptr).feasible;
}

Polytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw input_error("newton polytope of the zero polynomial");
  std::vector<Exps> pts = support_of(f);
  Polytope verts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Exps> others;
    others.reserve(pts.size() - 1);
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (k != i) others.push_back(pts[k]);
    if (!point_in_hull(pts[i], others)) verts.push_back(pts[i]);
  }
  std::sort(verts.begin(), verts.end(),
            [](const Exps& x, const Exps& y) { return compare_grlex(x, y) < 0; });
  return verts;
}

bool origin_in_interior(const std::vector<Exps>& points) {
  if (points.empty()) return false;
  const std::size_t d = points[0].size();
  if (d == 0) return true;
  if (affine_rank(points) != d) return false;
  // Substitute lambda_i = t_i + delta: maximize delta subject to
  //   sum t_i p_i + delta * (sum p_i) = 0,  sum t_i + n*delta = 1,  t,delta >= 0.
  // Optimum > 0 iff 0 is a strictly positive convex combination of all
  // points, i.e. lies in the relative interior of the hull.
  const std::size_t n = points.size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(n + 1, Rational(0)));
  std::vector<Rational> b(d + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      a[c][i] = Rational(points[i][c]);
      a[c][n] += Rational(points[i][c]);
    }
    a[d][i] = Rational(1);
  }
  a[d][n] = Rational(static_cast<long>(n));
  b[d] = Rational(1);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  LpResult res = solve_lp(std::move(a), std::move(b), &c);
  return res.feasible && res.objective.sgn() > 0;
}

}  // namespace lgm
