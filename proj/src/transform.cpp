#include "lgm/transform.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lgm/errors.hpp"
#include "lgm/io.hpp"

namespace lgm {
namespace {

using RF = RationalFunction;

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += x;
  }
  return out;
}

// Coefficient of name^e, as a polynomial over the remaining variables.
LaurentPolynomial coeff_at(const LaurentPolynomial& p, std::size_t idx, int e,
                           const VarsPtr& target) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.exps[idx] != e) continue;
    Exps ne;
    ne.reserve(t.exps.size() - 1);
    for (std::size_t c = 0; c < t.exps.size(); ++c)
      if (c != idx) ne.push_back(t.exps[c]);
    out.push_back({std::move(ne), t.coeff});
  }
  return LaurentPolynomial::from_terms(target, std::move(out));
}

// Removes a variable the value does not depend on from the representation.
// With num = f*den coefficientwise in that variable, f is the ratio of the
// coefficients at den's top power; the result is compared back against the
// input, so a wrong dependence claim cannot slip through.
RF project_out(const RF& r, const std::string& name) {
  const VariableSet& vs = *r.vars();
  std::size_t idx = vs.index_of(name);
  std::vector<std::string> names;
  names.reserve(vs.size() - 1);
  for (std::size_t c = 0; c < vs.size(); ++c)
    if (c != idx) names.push_back(vs.name(c));
  VarsPtr target = make_vars(std::move(names));
  int top = std::numeric_limits<int>::min();
  for (const auto& t : r.den().terms()) top = std::max(top, t.exps[idx]);
  RF out = RF::of(coeff_at(r.num(), idx, top, target),
                  coeff_at(r.den(), idx, top, target));
  if (out.with_vars(r.vars()) != r)
    throw invariant_error("projection of " + name + " changed the value");
  return out;
}

std::vector<Arrow> arrows_minus(const std::vector<Arrow>& all,
                                const std::vector<Arrow>& drop) {
  std::vector<Arrow> out;
  for (const auto& a : all)
    if (std::find(drop.begin(), drop.end(), a) == drop.end()) out.push_back(a);
  return out;
}

VarsPtr drop_and_extend(const VarsPtr& vars, const std::string& main_var,
                        bool add_u) {
  std::vector<std::string> names;
  names.reserve(vars->size());
  for (const auto& n : vars->names())
    if (n != main_var) names.push_back(n);
  if (add_u && !vars->contains("U")) names.push_back("U");
  std::sort(names.begin(), names.end());
  return make_vars(std::move(names));
}

RF unit_rhs(const VarsPtr& vars, bool u_deform) {
  RF one = RF::constant(vars, Rational(1));
  if (!u_deform) return one;
  return one - RF::variable(vars, "U");
}

// Cheap normalization attempt; keeping values in num-only form stops
// denominators from compounding through later arithmetic.
RF reduced(RF r) {
  if (r.den().is_constant()) return r;
  if (auto p = r.to_laurent()) return RF::of(std::move(*p));
  return r;
}

// First basic index not yet consumed, read off the surviving quiver.
int derived_r(const Quiver& q) {
  int r = q.k;
  for (const auto& a : q.arrows)
    if (a.vertical() && a.tail.j == 1) r = std::min(r, a.tail.i);
  return r;
}

Triplet retriplet(const Triplet& t, const std::vector<Arrow>& removed,
                  const Substitution& bind) {
  Triplet nt;
  nt.k = t.k;
  nt.kind = t.kind;
  nt.quiver.k = t.k;
  nt.quiver.vertices = t.quiver.vertices;
  nt.quiver.arrows = arrows_minus(t.quiver.arrows, removed);
  nt.vars = bind.target;
  for (const auto& [v, rf] : t.labels) nt.labels.insert_or_assign(v, rf.substituted(bind));
  return nt;
}

void certify_step(const Triplet& t, const Block& b, const Substitution& bind,
                  const Triplet& nt, const std::string& lemma,
                  const TransformOptions& opts) {
  RF unit = unit_rhs(bind.target, opts.u_deform);
  // The new labels are the substituted old ones, so the pullback of each
  // arrow ratio is the ratio of new labels; assembling the certificates from
  // those keeps every denominator the size of a single label.
  RF fb = RF::constant(bind.target, Rational(0));
  for (const Arrow& a : b.arrows)
    fb = fb + nt.label(a.head) / nt.label(a.tail);
  if (fb != unit)
    throw invariant_error(lemma + ": pullback of the block equation is not " +
                          std::string(opts.u_deform ? "1 - U" : "1"));
  // With the block equation pulled back to the unit, psi*F = F' + unit holds
  // exactly when the surviving arrows are old-minus-block: both sides are then
  // the same sum of new-label ratios.  Compare the arrow sets directly.
  std::vector<Arrow> rest = arrows_minus(t.quiver.arrows, b.arrows);
  bool same = rest.size() == nt.quiver.arrows.size();
  for (const Arrow& a : rest)
    same = same && std::find(nt.quiver.arrows.begin(), nt.quiver.arrows.end(),
                             a) != nt.quiver.arrows.end();
  if (!same)
    throw invariant_error(lemma + ": pullback of F does not split as F' + " +
                          std::string(opts.u_deform ? "(1 - U)" : "1"));
  if (!opts.u_deform)
    superpotential(nt).expect_laurent("superpotential after " + lemma);
}

TransformStep make_step(const Triplet& t, const Block& b,
                        std::optional<std::string> weight_var,
                        std::string main_var, Substitution bind,
                        BlockHistory after, const std::string& lemma,
                        const TransformOptions& opts) {
  Triplet nt = retriplet(t, b.arrows, bind);
  std::size_t expected =
      t.vars->size() - 1 + (opts.u_deform && !t.vars->contains("U") ? 1 : 0);
  if (nt.vars->size() != expected)
    throw invariant_error(lemma + ": variable count did not drop by one");
  if (opts.strict) certify_step(t, b, bind, nt, lemma, opts);
  TransformStep st{b,
                   std::move(weight_var),
                   std::move(main_var),
                   std::move(bind),
                   std::move(after),
                   std::move(nt)};
  return st;
}

struct LemmaData {
  std::string lemma;
  std::vector<Arrow> lhs;  // arrows isolated on the left of the block equation
  std::string weight_var;  // u
  std::string main_var;    // eliminated
  std::map<std::string, long> wt;
  bool telescope = false;  // vertical case: the auxiliary factor T equals H
};

long weight_of(const std::map<std::string, long>& wt, const std::string& n) {
  auto it = wt.find(n);
  return it == wt.end() ? 0 : it->second;
}

// Common three-phase elimination: weighting sigma isolates the eliminated
// variable inside the block equation, the equation is solved for it, and the
// solution is threaded through a torus change making the result Laurent.
TransformStep engine_step(const Triplet& t, const Block& b, const LemmaData& L,
                          const BlockHistory& after,
                          const TransformOptions& opts) {
  const VarsPtr& V = t.vars;
  if (!V->contains(L.weight_var) || !V->contains(L.main_var))
    throw invariant_error(L.lemma + ": expected variables are missing");
  for (const auto& a : L.lhs)
    if (std::find(b.arrows.begin(), b.arrows.end(), a) == b.arrows.end())
      throw invariant_error(L.lemma + ": isolated arrow is not in the block");

  Substitution sigma;
  sigma.target = V;
  for (const auto& [n, w] : L.wt) {
    if (w == 0 || n == L.weight_var || !V->contains(n)) continue;
    sigma.map.emplace(n, RF::variable(V, n) * RF::variable(V, L.weight_var).pow(w));
  }

  RF u_old = RF::variable(V, L.weight_var);
  RF main_old = RF::variable(V, L.main_var);
  RF lhs = assemble_rational_function(t, L.lhs).substituted(sigma) * main_old * u_old;
  std::vector<Arrow> rest = arrows_minus(b.arrows, L.lhs);
  RF g = RF::constant(V, Rational(0));
  if (!rest.empty())
    g = u_old * assemble_rational_function(t, rest).substituted(sigma);
  for (const RF* part : {&lhs, &g})
    if (part->depends_on(L.weight_var) || part->depends_on(L.main_var))
      throw invariant_error(L.lemma +
                            ": weighting did not isolate the eliminated variable");

  VarsPtr target = drop_and_extend(V, L.main_var, opts.u_deform);
  RF h = reduced(project_out(lhs, L.main_var).with_vars(target));
  RF g2 = reduced(project_out(g, L.main_var).with_vars(target));
  RF u_new = RF::variable(target, L.weight_var);
  RF tele = L.telescope ? h : RF::constant(target, Rational(1));
  RF w_hat = reduced(u_new * tele + g2);
  long wmain = weight_of(L.wt, L.main_var);

  RF main_img = [&]() -> RF {
    if (opts.u_deform) {
      RF unit = unit_rhs(target, true);
      return h * w_hat.pow(wmain) / (unit * w_hat - g2);
    }
    if (L.telescope) return w_hat.pow(wmain) / u_new;
    return h * w_hat.pow(wmain) / u_new;
  }();

  Substitution bind;
  bind.target = target;
  bind.map.emplace(L.main_var, reduced(std::move(main_img)));
  bind.map.emplace(L.weight_var, w_hat);
  for (const auto& [n, w] : L.wt) {
    if (n == L.main_var || n == L.weight_var || w == 0 || !V->contains(n)) continue;
    bind.map.emplace(n, reduced(RF::variable(target, n) * w_hat.pow(w)));
  }
  return make_step(t, b, L.weight_var, L.main_var, std::move(bind), after,
                   L.lemma, opts);
}

void require_stage(const Triplet& t, const BlockHistory& h, VerifyStage stage,
                   const std::string& what) {
  VerifyReport rep = verify_triplet_conditions(t, h, stage);
  if (!rep.ok)
    throw invariant_error(what + "; violated conditions: " + join(rep.violations));
}

}  // namespace

VerifyReport verify_triplet_conditions(const Triplet& t, const BlockHistory& h,
                                       VerifyStage stage) {
  VerifyReport rep;
  auto bad = [&rep](const char* id) {
    rep.ok = false;
    for (const auto& v : rep.violations)
      if (v == id) return;
    rep.violations.push_back(id);
  };
  const int k = t.k;
  auto vname = [](int i, int j) { return grid_var_name(i, j); };
  auto var = [&](int i, int j) { return RF::variable(t.vars, vname(i, j)); };
  RF one = RF::constant(t.vars, Rational(1));

  if (!(t.label({0, 1}) == t.label({k, 3}))) bad("anchor");

  if (stage == VerifyStage::Initial) {
    Triplet ref = build_initial_triplet(k, t.kind);
    if (!(*t.vars == *ref.vars)) {
      bad("vars");
      return rep;
    }
    std::vector<Arrow> a = t.quiver.arrows, b = ref.quiver.arrows;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b || t.quiver.vertices != ref.quiver.vertices) bad("i");
    for (const auto& [v, rf] : ref.labels)
      if (!(t.label(v) == rf.with_vars(t.vars))) bad("iii");
    return rep;
  }

  const int r = derived_r(t.quiver);
  if (stage == VerifyStage::Vertical && r != k) bad("i");

  {
    Quiver q0 = build_quiver(k);
    std::set<Arrow> dropped;
    for (int s = 0; s < r; ++s)
      for (const auto& a : basic_horizontal_arrows(k, s)) dropped.insert(a);
    std::vector<Arrow> expected;
    for (const auto& a : q0.arrows)
      if (!dropped.count(a)) expected.push_back(a);
    std::vector<Arrow> got = t.quiver.arrows;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got != expected) bad("i");
  }

  HistoryCheck hc = validate_block_history(h, r);
  if (!hc.ok) {
    bad("history");
    return rep;
  }
  const int gamma = h.gamma;
  std::set<int> inM(h.M.begin(), h.M.end());
  std::set<int> inW(h.W.begin(), h.W.end());

  {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back(vname(i, 1));
    for (int i = 1; i <= gamma - 1; ++i)
      if (!inM.count(i)) names.push_back(vname(i, 2));
    for (int i = r; i <= k - 1; ++i) names.push_back(vname(i, 2));
    std::sort(names.begin(), names.end());
    if (names != t.vars->names()) {
      bad("vars");
      return rep;  // the remaining conditions read these variables
    }
  }

  if (!t.label({k, 2}).equals_constant(Rational(1))) bad("ii");

  for (int i = r; i <= k; ++i) {
    if (!(t.label({i, 1}) == var(i, 1))) bad("iii");
    if (i <= k - 1 && !(t.label({i, 2}) == var(i, 2))) bad("iii");
  }

  // Rbar is the label of (i,1) with its own variable divided out unless the
  // row was a weight row.
  auto rbar = [&](int i) -> RF {
    RF r1 = t.label({i, 1});
    if (inW.count(i)) return r1;
    return r1 / var(i, 1);
  };
  for (int i = 1; i <= gamma - 1; ++i) {
    if (!inM.count(i)) {
      if (!(t.label({i, 2}) == var(i, 2) * rbar(i))) bad("vi");
    } else {
      auto it = inW.upper_bound(i);
      if (it == inW.end()) {
        bad("vii");
        continue;
      }
      RF upper = t.vars->contains(vname(i + 1, 2)) ? var(i + 1, 2) : one;
      if (!(t.label({i, 2}) == upper / var(*it, 1) * rbar(i))) bad("vii");
    }
  }

  auto tail_sum = [&](int m) {  // a_{m,1} + ... + a_{r,1}
    RF s = var(m, 1);
    for (int q = m + 1; q <= r; ++q) s = s + var(q, 1);
    return s;
  };
  for (int i = gamma; i <= r - 1; ++i) {
    if (!(t.label({i, 1}) == tail_sum(i))) bad("viii");
    RF prod = r < k ? var(r, 2) : one;
    for (int m = i; m <= r - 1; ++m) prod = prod * tail_sum(m) / var(m, 1);
    if (!(t.label({i, 2}) == prod)) bad("ix");
  }

  auto lau = t.label({k, 3}).to_laurent();
  if (!lau) {
    bad("x");
    return rep;
  }
  const VariableSet& vs = *t.vars;
  for (int i = r + 1; i <= k; ++i)
    for (int j = 1; j <= 2; ++j)
      if (auto ix = vs.find(vname(i, j)))
        if (lau->depends_on(*ix)) bad("x");
  std::size_t ir1 = vs.index_of(vname(r, 1));
  std::optional<std::size_t> ir2;
  if (r < k) ir2 = vs.index_of(vname(r, 2));
  for (const auto& term : lau->terms()) {
    if (term.exps[ir1] < 0 || (ir2 && term.exps[*ir2] < 0)) {
      bad("x");
      break;
    }
  }

  std::vector<std::size_t> col2;
  for (int i = 1; i <= gamma - 1; ++i)
    if (!inM.count(i))
      if (auto ix = vs.find(vname(i, 2))) col2.push_back(*ix);
  if (gamma == r && r < k) col2.push_back(vs.index_of(vname(r, 2)));
  for (const auto& term : lau->terms()) {
    long s = 0;
    for (std::size_t ix : col2) s += term.exps[ix];
    if (s > 0) {
      bad("xi");
      break;
    }
  }

  if (stage == VerifyStage::Horizontal) {
    WeightFunction lam = build_mwgamma_weighting(h, r, k);
    for (const auto& term : lau->terms())
      if (lambda_degree(lam, vs, term.exps) != 1) {
        bad("xii");
        break;
      }
  } else if (stage == VerifyStage::Vertical) {
    WeightFunction lam = build_mwgamma_weighting(h, k, k);
    for (const auto& term : lau->terms())
      if (lambda_degree(lam, vs, term.exps) < 0) {
        bad("xii");
        break;
      }
  }
  return rep;
}

TransformStep apply_horizontal_start(const Triplet& t, const Block& b,
                                     const TransformOptions& opts) {
  const int k = t.k, s = b.size;
  const std::string lemma = "horizontal start lemma";
  if (b.kind != BlockKind::Horizontal || b.start_row != 0 || s < 1 || s > k)
    throw invariant_error(lemma + ": block must cover basics 0..s-1 with s <= k");
  if (opts.strict) require_stage(t, {}, VerifyStage::Initial, lemma);

  if (s == 1) {
    BlockHistory after;  // (empty, empty, 1)
    Substitution bind;
    bind.target = drop_and_extend(t.vars, "a", opts.u_deform);
    RF img = RF::variable(bind.target, grid_var_name(1, 1));
    if (opts.u_deform) img = img / unit_rhs(bind.target, true);
    bind.map.emplace("a", img);
    TransformStep st =
        make_step(t, b, std::nullopt, "a", std::move(bind), after, lemma, opts);
    if (opts.strict && !opts.u_deform)
      require_stage(st.triplet_after, after, VerifyStage::Horizontal,
                    lemma + " postcondition");
    return st;
  }

  LemmaData L;
  L.lemma = lemma;
  L.lhs = {Arrow{{0, 1}, {1, 1}}};
  L.weight_var = grid_var_name(s - 1, 1);
  L.main_var = "a";
  for (int i = 1; i <= s; ++i) {
    L.wt[grid_var_name(i, 1)] = s - i;
    if (i <= k - 1) L.wt[grid_var_name(i, 2)] = s - i;
  }
  L.wt["a"] = s;
  BlockHistory after{{}, {s - 1}, s};
  TransformStep st = engine_step(t, b, L, after, opts);
  if (opts.strict && !opts.u_deform)
    require_stage(st.triplet_after, after, VerifyStage::Horizontal,
                  lemma + " postcondition");
  return st;
}

TransformStep apply_horizontal_wide(const Triplet& t, const Block& b,
                                    const BlockHistory& h,
                                    const TransformOptions& opts) {
  const int k = t.k, d = b.size, r = b.start_row, s = r + d;
  const std::string lemma = "wide horizontal lemma";
  if (b.kind != BlockKind::Horizontal || d < 2)
    throw invariant_error(lemma + ": needs a horizontal block of size >= 2");
  if (r < 1 || s > k)
    throw invariant_error(lemma + ": block must cover basics r..r+d-1 inside 1..k-1");
  if (h.gamma != r) throw invariant_error(lemma + ": needs gamma == r");
  if (opts.strict) require_stage(t, h, VerifyStage::Horizontal, lemma);

  LemmaData L;
  L.lemma = lemma;
  L.lhs = {Arrow{{r, 2}, {r + 1, 2}}};
  L.weight_var = grid_var_name(s - 1, 1);
  L.main_var = grid_var_name(r, 2);
  for (int i = r; i <= s; ++i) {
    L.wt[grid_var_name(i, 1)] = s - i;
    if (i <= k - 1) L.wt[grid_var_name(i, 2)] = s - i;
  }
  BlockHistory after = h;
  after.M.push_back(r);
  after.W.push_back(s - 1);
  after.gamma = s;
  TransformStep st = engine_step(t, b, L, after, opts);
  if (opts.strict && !opts.u_deform)
    require_stage(st.triplet_after, after, VerifyStage::Horizontal,
                  lemma + " postcondition");
  return st;
}

TransformStep apply_horizontal_basic(const Triplet& t, const Block& b,
                                     const BlockHistory& h,
                                     const TransformOptions& opts) {
  const int k = t.k, r = b.start_row;
  const std::string lemma = "narrow horizontal lemma";
  if (b.kind != BlockKind::Horizontal || b.size != 1)
    throw invariant_error(lemma + ": needs a horizontal block of size 1");
  if (r < 1 || r > k - 1)
    throw invariant_error(lemma + ": basic index must lie in 1..k-1");
  if (h.gamma > r) throw invariant_error(lemma + ": needs gamma <= r");
  if (opts.strict) require_stage(t, h, VerifyStage::Horizontal, lemma);

  std::string main_var = grid_var_name(r, 2);
  Substitution bind;
  bind.target = drop_and_extend(t.vars, main_var, opts.u_deform);
  RF x = RF::variable(bind.target, grid_var_name(r, 1));
  RF y = RF::variable(bind.target, grid_var_name(r + 1, 1));
  RF z = bind.target->contains(grid_var_name(r + 1, 2))
             ? RF::variable(bind.target, grid_var_name(r + 1, 2))
             : RF::constant(bind.target, Rational(1));
  RF shift = x + y;
  RF img = opts.u_deform ? z * shift / (unit_rhs(bind.target, true) * shift - y)
                         : z * shift / x;
  bind.map.emplace(grid_var_name(r, 1), shift);
  bind.map.emplace(main_var, std::move(img));
  TransformStep st =
      make_step(t, b, std::nullopt, main_var, std::move(bind), h, lemma, opts);
  if (opts.strict && !opts.u_deform)
    require_stage(st.triplet_after, h, VerifyStage::Horizontal,
                  lemma + " postcondition");
  return st;
}

TransformStep apply_mixed_start(const Triplet& t, const Block& b,
                                const TransformOptions& opts) {
  const int k = t.k;
  const std::string lemma = "mixed start lemma";
  if (b.kind != BlockKind::Mixed || b.start_row != 0 || b.size != k + 1)
    throw invariant_error(lemma + ": needs the full mixed block of size k+1");
  if (opts.strict) require_stage(t, {}, VerifyStage::Initial, lemma);

  LemmaData L;
  L.lemma = lemma;
  L.lhs = {Arrow{{0, 1}, {1, 1}}};
  L.weight_var = grid_var_name(k - 1, 2);
  L.main_var = "a";
  for (int i = 1; i <= k; ++i) {
    L.wt[grid_var_name(i, 1)] = k + 1 - i;
    if (i <= k - 1) L.wt[grid_var_name(i, 2)] = k - i;
  }
  L.wt["a"] = k + 1;
  return engine_step(t, b, L, BlockHistory{}, opts);
}

TransformStep apply_mixed(const Triplet& t, const Block& b,
                          const BlockHistory& h, const TransformOptions& opts) {
  const int k = t.k, r = b.start_row, d = b.size;
  const std::string lemma = "mixed lemma";
  if (b.kind != BlockKind::Mixed || r < 1 || r + d != k + 1)
    throw invariant_error(lemma + ": needs the terminal mixed block of size k+1-r");
  if (h.gamma != r) throw invariant_error(lemma + ": needs gamma == r");
  if (opts.strict) require_stage(t, h, VerifyStage::Mixed, lemma);

  LemmaData L;
  L.lemma = lemma;
  L.lhs = {Arrow{{r, 1}, {r + 1, 1}}, Arrow{{r, 1}, {r, 2}}};
  L.weight_var = grid_var_name(k, 1);
  L.main_var = grid_var_name(r, 1);
  for (int i = r; i <= k; ++i) {
    L.wt[grid_var_name(i, 1)] = k + 1 - i;
    if (i <= k - 1) L.wt[grid_var_name(i, 2)] = k - i;
  }
  for (int i = 1; i <= r - 1; ++i)
    if (t.vars->contains(grid_var_name(i, 2))) L.wt[grid_var_name(i, 2)] = -1;
  return engine_step(t, b, L, h, opts);
}

TransformStep apply_vertical(const Triplet& t, const Block& b,
                             const BlockHistory& h,
                             const TransformOptions& opts) {
  const int k = t.k;
  const std::string lemma = "vertical lemma";
  if (b.kind != BlockKind::Vertical || b.size != 1)
    throw invariant_error(lemma + ": needs the basic vertical block");
  if (opts.strict) require_stage(t, h, VerifyStage::Vertical, lemma);
  const int gamma = h.gamma;
  if (gamma == k && h.W.empty())
    throw invariant_error(lemma + ": gamma == k needs a nonempty W");

  LemmaData L;
  L.lemma = lemma;
  L.lhs = {Arrow{{gamma, 1}, {gamma, 2}}};
  L.weight_var = gamma < k ? grid_var_name(k, 1) : grid_var_name(h.W.front(), 1);
  L.main_var = grid_var_name(gamma, 1);
  L.wt = build_mwgamma_weighting(h, k, k).weights;
  L.telescope = true;
  return engine_step(t, b, L, h, opts);
}

PipelineTrace run_main_theorem(int k, const std::vector<int>& degrees,
                               const TransformOptions& opts) {
  if (opts.u_deform)
    throw input_error("the U deformation is a single-step analysis tool");
  Triplet t = build_initial_triplet(k);
  BlockPlan plan = select_blocks(k, degrees);

  PipelineTrace tr;
  tr.k = k;
  tr.degrees = degrees;
  tr.plan = plan;

  BlockHistory h;
  bool first = true;
  for (const Block& b : plan.blocks) {
    TransformStep st = [&]() -> TransformStep {
      switch (b.kind) {
        case BlockKind::Horizontal:
          if (first) return apply_horizontal_start(t, b, opts);
          if (b.size >= 2) return apply_horizontal_wide(t, b, h, opts);
          return apply_horizontal_basic(t, b, h, opts);
        case BlockKind::Mixed:
          return first ? apply_mixed_start(t, b, opts) : apply_mixed(t, b, h, opts);
        case BlockKind::Vertical:
          return apply_vertical(t, b, h, opts);
      }
      throw invariant_error("unknown block kind");
    }();
    h = st.history_after;
    t = st.triplet_after;
    tr.steps.push_back(std::move(st));
    first = false;
  }

  tr.result = superpotential(t).expect_laurent("mirror potential");
  if (tr.result.vars()->size() != 2 * static_cast<std::size_t>(k) - degrees.size())
    throw invariant_error("mirror potential has the wrong number of variables");
  return tr;
}

LaurentPolynomial closed_form_section10(ClosedFormMode mode, int k, int l) {
  if (k < 2) throw input_error("closed forms need k >= 2");
  bool ok = (mode == ClosedFormMode::Hyperplanes && 1 <= l && l <= k - 1) ||
            (mode == ClosedFormMode::Index2 && l == k) ||
            (mode == ClosedFormMode::Index1 && l == k + 1);
  if (!ok)
    throw input_error("closed form mode does not match l = " + std::to_string(l));

  std::vector<std::string> names;
  const int lo1 = mode == ClosedFormMode::Index1 ? 2 : 1;
  for (int i = lo1; i <= k; ++i) names.push_back(grid_var_name(i, 1));
  if (mode == ClosedFormMode::Hyperplanes)
    for (int i = l; i <= k - 1; ++i) names.push_back(grid_var_name(i, 2));
  std::sort(names.begin(), names.end());
  VarsPtr vars = make_vars(std::move(names));
  auto A = [&](int i, int j) { return RF::variable(vars, grid_var_name(i, j)); };
  RF one = RF::constant(vars, Rational(1));
  RF f = RF::constant(vars, Rational(0));

  if (mode == ClosedFormMode::Hyperplanes) {
    auto S = [&](int m) {  // a_{m,1} + ... + a_{l,1}
      RF s = A(m, 1);
      for (int q = m + 1; q <= l; ++q) s = s + A(q, 1);
      return s;
    };
    for (int i = 1; i <= l - 1; ++i) {
      RF term = A(l, 2);
      for (int m = i + 1; m <= l - 1; ++m) term = term * S(m);
      for (int m = i; m <= l - 1; ++m) term = term / A(m, 1);
      f = f + term;
    }
    for (int i = l; i <= k - 1; ++i) f = f + A(i, 2) / A(i, 1);
    f = f + one / A(k, 1);
    for (int s = l; s <= k - 1; ++s) f = f + A(s + 1, 1) / A(s, 1);
    for (int s = l; s <= k - 2; ++s) f = f + A(s + 1, 2) / A(s, 2);
    f = f + one / A(k - 1, 2);
    f = f + S(1);
  } else if (mode == ClosedFormMode::Index2) {
    auto S = [&](int m) {  // a_{m,1} + ... + a_{k,1}
      RF s = A(m, 1);
      for (int q = m + 1; q <= k; ++q) s = s + A(q, 1);
      return s;
    };
    for (int i = 1; i <= k - 1; ++i) {
      RF term = one;
      for (int m = i + 1; m <= k - 1; ++m) term = term * S(m);
      for (int m = i; m <= k - 1; ++m) term = term / A(m, 1);
      f = f + term;
    }
    f = f + one / A(k, 1);
    f = f + S(1);
  } else {
    auto T = [&](int m) {  // 1 + a_{m,1} + ... + a_{k-1,1}
      RF s = one;
      for (int q = m; q <= k - 1; ++q) s = s + A(q, 1);
      return s;
    };
    RF head = A(k, 1);
    for (int m = 2; m <= k - 1; ++m) head = head * T(m) / A(m, 1);
    for (int i = 2; i <= k - 1; ++i) {
      RF term = one;
      for (int m = i + 1; m <= k - 1; ++m) term = term * T(m);
      for (int m = i; m <= k - 1; ++m) term = term / A(m, 1);
      head = head + term;
    }
    head = head + one;
    f = head * (T(2) + one / A(k, 1));
  }
  return f.expect_laurent("closed form");
}

nlohmann::json trace_to_json(const PipelineTrace& tr) {
  nlohmann::json j;
  j["k"] = tr.k;
  j["degrees"] = tr.degrees;
  j["sorted_degrees"] = tr.plan.sorted_degrees;
  j["permutation"] = tr.plan.permutation;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : tr.plan.blocks) blocks.push_back(block_to_json(b));
  j["blocks"] = std::move(blocks);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : tr.steps) {
    nlohmann::json s;
    s["block"] = block_to_json(st.block);
    if (st.weight_variable)
      s["weight_variable"] = *st.weight_variable;
    else
      s["weight_variable"] = nullptr;
    s["main_variable"] = st.main_variable;
    nlohmann::json binds = nlohmann::json::object();
    for (const auto& [n, rf] : st.bindings.map) binds[n] = to_text(rf);
    s["bindings"] = std::move(binds);
    s["history_after"] = {{"M", st.history_after.M},
                          {"W", st.history_after.W},
                          {"gamma", st.history_after.gamma}};
    s["variables_after"] = st.triplet_after.vars->names();
    s["superpotential_after"] = to_text(superpotential(st.triplet_after));
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["result"] = {{"variables", tr.result.vars()->names()},
                 {"text", to_text(tr.result)},
                 {"terms", laurent_to_json(tr.result)}};
  return j;
}

}  // namespace lgm
