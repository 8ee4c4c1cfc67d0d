#include "lgm/quiver.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "lgm/errors.hpp"

namespace lgm {

bool Quiver::has_arrow(const Arrow& a) const {
  return std::find(arrows.begin(), arrows.end(), a) != arrows.end();
}

Quiver build_quiver(int k) {
  if (k < 2) throw input_error("quiver requires k >= 2");
  Quiver q;
  q.k = k;
  q.vertices.push_back({0, 1});
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= 2; ++j) q.vertices.push_back({i, j});
  q.vertices.push_back({k, 3});
  q.arrows.push_back({{0, 1}, {1, 1}});
  for (int i = 1; i < k; ++i) q.arrows.push_back({{i, 1}, {i + 1, 1}});
  for (int i = 1; i < k; ++i) q.arrows.push_back({{i, 2}, {i + 1, 2}});
  for (int i = 1; i <= k; ++i) q.arrows.push_back({{i, 1}, {i, 2}});
  q.arrows.push_back({{k, 2}, {k, 3}});
  return q;
}

std::string grid_var_name(int i, int j) {
  return "a_" + std::to_string(i) + "_" + std::to_string(j);
}

const RationalFunction& Triplet::label(Vertex v) const {
  auto it = labels.find(v);
  if (it == labels.end()) throw invariant_error("unlabeled vertex");
  return it->second;
}

Triplet build_initial_triplet(int k, TripletKind kind) {
  Triplet t;
  t.k = k;
  t.kind = kind;
  t.quiver = build_quiver(k);

  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) {
    names.push_back(grid_var_name(i, 1));
    if (i < k || kind == TripletKind::Original) names.push_back(grid_var_name(i, 2));
  }
  if (kind == TripletKind::Auxiliary) names.push_back("a");
  std::sort(names.begin(), names.end());
  t.vars = make_vars(names);

  RationalFunction one = RationalFunction::constant(t.vars, Rational(1));
  RationalFunction anchor =
      kind == TripletKind::Auxiliary ? RationalFunction::variable(t.vars, "a") : one;
  t.labels.insert_or_assign({0, 1}, anchor);
  t.labels.insert_or_assign({k, 3}, anchor);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= 2; ++j) {
      if (i == k && j == 2 && kind == TripletKind::Auxiliary)
        t.labels.insert_or_assign({i, j}, one);
      else
        t.labels.insert_or_assign({i, j},
                                  RationalFunction::variable(t.vars, grid_var_name(i, j)));
    }
  return t;
}

Substitution aux_to_original_map(int k) {
  Triplet orig = build_initial_triplet(k, TripletKind::Original);
  Substitution s;
  s.target = orig.vars;
  RationalFunction akn = RationalFunction::variable(orig.vars, grid_var_name(k, 2));
  s.map.emplace("a", akn.inverse());
  for (int i = 1; i <= k; ++i) {
    s.map.emplace(grid_var_name(i, 1),
                  RationalFunction::variable(orig.vars, grid_var_name(i, 1)) / akn);
    if (i < k)
      s.map.emplace(grid_var_name(i, 2),
                    RationalFunction::variable(orig.vars, grid_var_name(i, 2)) / akn);
  }
  return s;
}

RationalFunction assemble_rational_function(const Triplet& t, const std::vector<Arrow>& arrows) {
  if (arrows.empty()) throw input_error("assembling over an empty arrow set");
  RationalFunction sum = RationalFunction::constant(t.vars, Rational(0));
  for (const Arrow& a : arrows) {
    if (!t.quiver.has_arrow(a)) throw input_error("arrow not present in quiver");
    sum = sum + t.label(a.head) / t.label(a.tail);
  }
  return sum;
}

RationalFunction superpotential(const Triplet& t) {
  return assemble_rational_function(t, t.quiver.arrows);
}

std::vector<Arrow> basic_horizontal_arrows(int k, int s) {
  if (s < 0 || s >= k) throw input_error("basic horizontal block index out of range");
  if (s == 0) return {{{0, 1}, {1, 1}}};
  return {{{s, 1}, {s + 1, 1}}, {{s, 2}, {s + 1, 2}}};
}

std::vector<Arrow> basic_vertical_arrows(int k) {
  std::vector<Arrow> out;
  for (int i = 1; i <= k; ++i) out.push_back({{i, 1}, {i, 2}});
  return out;
}

namespace {

void append(std::vector<Arrow>& dst, const std::vector<Arrow>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

BlockPlan select_blocks(int k, const std::vector<int>& degrees) {
  if (k < 2) throw input_error("select_blocks requires k >= 2");
  for (int d : degrees)
    if (d < 1) throw input_error("degrees must be positive");
  int total = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (total >= k + 2) throw input_error("not Fano: sum of degrees must be < k+2");

  BlockPlan plan;
  plan.permutation.resize(degrees.size());
  std::iota(plan.permutation.begin(), plan.permutation.end(), std::size_t{0});
  std::stable_sort(plan.permutation.begin(), plan.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return degrees[a] > degrees[b]; });
  for (std::size_t p : plan.permutation) plan.sorted_degrees.push_back(degrees[p]);

  const auto& ds = plan.sorted_degrees;
  const std::size_t l = ds.size();
  if (l == 0) return plan;

  if (total == k + 1 && ds.back() >= 2 && l == 1) {
    // One mixed block: everything but the sink arrow.
    Block b;
    b.kind = BlockKind::Mixed;
    b.size = k + 1;
    b.start_row = 0;
    for (const Arrow& a : build_quiver(k).arrows)
      if (a != Arrow{{k, 2}, {k, 3}}) b.arrows.push_back(a);
    plan.blocks.push_back(std::move(b));
    return plan;
  }

  std::size_t horizontal_count = l;
  if (total == k + 1) --horizontal_count;  // last degree becomes mixed or vertical

  int r = 0;
  for (std::size_t m = 0; m < horizontal_count; ++m) {
    Block b;
    b.kind = BlockKind::Horizontal;
    b.size = ds[m];
    b.start_row = r;
    for (int s = r; s < r + ds[m]; ++s) append(b.arrows, basic_horizontal_arrows(k, s));
    plan.blocks.push_back(std::move(b));
    r += ds[m];
  }

  if (total == k + 1) {
    Block b;
    b.size = ds.back();
    b.start_row = r;
    if (ds.back() == 1) {
      b.kind = BlockKind::Vertical;
      b.arrows = basic_vertical_arrows(k);
    } else {
      b.kind = BlockKind::Mixed;
      for (int s = r; s < k; ++s) append(b.arrows, basic_horizontal_arrows(k, s));
      append(b.arrows, basic_vertical_arrows(k));
    }
    plan.blocks.push_back(std::move(b));
  }
  return plan;
}

HistoryCheck validate_block_history(const BlockHistory& h, int r) {
  auto fail = [](std::string why) { return HistoryCheck{false, std::move(why)}; };
  if (h.gamma < 1 || h.gamma > r) return fail("gamma outside [1, r]");
  if (!std::is_sorted(h.M.begin(), h.M.end()) || !std::is_sorted(h.W.begin(), h.W.end()))
    return fail("M and W must be ascending");
  if (h.W.empty()) {
    if (!h.M.empty()) return fail("W empty forces M empty");
    if (h.gamma != 1) return fail("W empty forces gamma = 1");
    return {};
  }
  if (h.M.size() + 1 != h.W.size()) return fail("|M| must equal |W| - 1");
  for (int w : h.W)
    if (w < 1) return fail("W entries must be positive");
  for (std::size_t i = 0; i < h.M.size(); ++i) {
    if (h.M[i] != h.W[i] + 1) return fail("interleaving m_i = w_{i-1} + 1 violated");
    if (h.M[i] >= h.W[i + 1]) return fail("interleaving m_i < w_i violated");
  }
  if (h.gamma != h.W.back() + 1) return fail("gamma must be max(W) + 1");
  return {};
}

long WeightFunction::at(const std::string& name) const {
  auto it = weights.find(name);
  return it == weights.end() ? 0 : it->second;
}

WeightFunction build_mwgamma_weighting(const BlockHistory& h, int r, int k) {
  HistoryCheck chk = validate_block_history(h, r);
  if (!chk.ok) throw input_error("invalid block history: " + chk.reason);
  if (r > k) throw input_error("r must be at most k");

  auto in = [](const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  WeightFunction wf;
  for (int i = 1; i < h.gamma; ++i) {
    if (in(h.W, i)) {
      wf.weights[grid_var_name(i, 1)] = 1;
      if (!in(h.M, i)) wf.weights[grid_var_name(i, 2)] = -1;
    } else {
      // w(i): smallest element of W above i.
      int wi = *std::upper_bound(h.W.begin(), h.W.end(), i);
      wf.weights[grid_var_name(i, 1)] = i - wi;
      if (!in(h.M, i)) wf.weights[grid_var_name(i, 2)] = i - wi - 1;
    }
  }
  for (int i = h.gamma; i <= r; ++i) wf.weights[grid_var_name(i, 1)] = 1;
  if (r < k) wf.weights[grid_var_name(r, 2)] = 0;
  return wf;
}

long lambda_degree(const WeightFunction& w, const VariableSet& vars, const Exps& exps) {
  long total = 0;
  for (std::size_t c = 0; c < exps.size(); ++c) {
    if (exps[c] == 0) continue;
    total += w.at(vars.names()[c]) * exps[c];
  }
  return total;
}

nlohmann::json vertex_to_json(const Vertex& v) { return nlohmann::json::array({v.i, v.j}); }

nlohmann::json arrow_to_json(const Arrow& a) {
  return nlohmann::json::array({vertex_to_json(a.tail), vertex_to_json(a.head)});
}

nlohmann::json block_to_json(const Block& b) {
  const char* kind = b.kind == BlockKind::Horizontal ? "horizontal"
                     : b.kind == BlockKind::Vertical ? "vertical"
                                                     : "mixed";
  nlohmann::json arrows = nlohmann::json::array();
  for (const Arrow& a : b.arrows) arrows.push_back(arrow_to_json(a));
  return {{"kind", kind}, {"size", b.size}, {"start_row", b.start_row}, {"arrows", arrows}};
}

}  // namespace lgm
