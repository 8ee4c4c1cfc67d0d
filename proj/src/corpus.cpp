#include "lgm/corpus.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "lgm/errors.hpp"
#include "lgm/io.hpp"
#include "lgm/quiver.hpp"
#include "lgm/transform.hpp"

namespace lgm {

namespace {

using RF = RationalFunction;

VarsPtr grid_vars(std::vector<std::pair<int, int>> cells) {
  std::vector<std::string> names;
  for (auto [i, j] : cells) names.push_back(grid_var_name(i, j));
  std::sort(names.begin(), names.end());
  return make_vars(std::move(names));
}

struct Builder {
  VarsPtr vars;
  RF v(int i, int j) const { return RF::variable(vars, grid_var_name(i, j)); }
  RF c(long value) const { return RF::constant(vars, Rational(value)); }
  LaurentPolynomial done(const RF& e) const {
    return e.expect_laurent("corpus fixture");
  }
};

LaurentPolynomial fix_quadric_threefold() {
  Builder b{grid_vars({{1, 1}, {1, 2}, {2, 1}})};
  return b.done(b.v(1, 2) / b.v(1, 1) + b.c(1) / b.v(2, 1) +
                b.v(2, 1) / b.v(1, 1) + b.c(1) / b.v(1, 2) + b.v(1, 1));
}

LaurentPolynomial fix_g25_two_hyperplanes() {
  Builder b{grid_vars({{1, 1}, {2, 1}, {2, 2}, {3, 1}})};
  return b.done(b.v(2, 2) / b.v(1, 1) + b.v(2, 2) / b.v(2, 1) +
                b.c(1) / b.v(3, 1) + b.v(3, 1) / b.v(2, 1) +
                b.c(1) / b.v(2, 2) + b.v(2, 1) + b.v(1, 1));
}

LaurentPolynomial fix_quadric_surface() {
  Builder b{grid_vars({{1, 1}, {2, 1}})};
  return b.done(b.c(1) / b.v(1, 1) + b.c(1) / b.v(2, 1) + b.v(2, 1) + b.v(1, 1));
}

LaurentPolynomial fix_quadric_surface_2() {
  Builder b{grid_vars({{1, 2}, {2, 1}})};
  return b.done(b.v(1, 2) + b.v(2, 1) + b.c(1) / b.v(1, 2) + b.c(1) / b.v(2, 1));
}

LaurentPolynomial fix_degree_40() {
  Builder b{grid_vars({{1, 1}, {2, 1}, {3, 1}})};
  return b.done((b.v(3, 1) + b.v(2, 1)) / (b.v(2, 1) * b.v(1, 1)) +
                b.c(1) / b.v(2, 1) + b.c(1) / b.v(3, 1) + b.v(3, 1) +
                b.v(2, 1) + b.v(1, 1));
}

LaurentPolynomial fix_x14() {
  Builder b{grid_vars({{1, 1}, {2, 1}, {3, 1}, {4, 1}})};
  return b.done((b.v(4, 1) + b.v(3, 1)) * (b.v(4, 1) + b.v(3, 1) + b.v(2, 1)) /
                    (b.v(3, 1) * b.v(2, 1) * b.v(1, 1)) +
                (b.v(4, 1) + b.v(3, 1)) / (b.v(3, 1) * b.v(2, 1)) +
                b.c(1) / b.v(3, 1) + b.c(1) / b.v(4, 1) + b.v(4, 1) +
                b.v(3, 1) + b.v(2, 1) + b.v(1, 1));
}

LaurentPolynomial fix_index2_fivefold() {
  Builder b{grid_vars({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}})};
  RF s2 = b.v(5, 1) + b.v(4, 1);
  RF s3 = s2 + b.v(3, 1);
  RF s4 = s3 + b.v(2, 1);
  return b.done(s2 * s3 * s4 / (b.v(4, 1) * b.v(3, 1) * b.v(2, 1) * b.v(1, 1)) +
                s2 * s3 / (b.v(4, 1) * b.v(3, 1) * b.v(2, 1)) +
                s2 / (b.v(4, 1) * b.v(3, 1)) + b.c(1) / b.v(4, 1) +
                b.c(1) / b.v(5, 1) + b.v(5, 1) + b.v(4, 1) + b.v(3, 1) +
                b.v(2, 1) + b.v(1, 1));
}

LaurentPolynomial fix_s5() {
  Builder b{grid_vars({{2, 1}, {3, 1}})};
  return b.done((b.v(3, 1) * (b.c(1) + b.v(2, 1)) / b.v(2, 1) +
                 b.c(1) / b.v(2, 1) + b.c(1)) *
                (b.c(1) + b.v(2, 1) + b.c(1) / b.v(3, 1)));
}

LaurentPolynomial fix_v14() {
  Builder b{grid_vars({{2, 1}, {3, 1}, {4, 1}})};
  return b.done((b.v(4, 1) * (b.c(1) + b.v(3, 1)) *
                     (b.c(1) + b.v(3, 1) + b.v(2, 1)) /
                     (b.v(3, 1) * b.v(2, 1)) +
                 (b.c(1) + b.v(3, 1)) / (b.v(3, 1) * b.v(2, 1)) +
                 b.c(1) / b.v(3, 1) + b.c(1)) *
                (b.c(1) + b.v(2, 1) + b.v(3, 1) + b.c(1) / b.v(4, 1)));
}

LaurentPolynomial fix_two_quadrics() {
  Builder b{grid_vars({{1, 1}, {1, 2}, {2, 1}})};
  RF w = b.v(1, 1) + b.v(2, 1) + b.c(1) / b.v(1, 2);
  return b.done(b.v(1, 2) + b.c(1) / b.v(2, 1) + w.pow(2) / b.v(1, 1));
}

LaurentPolynomial fix_two_quadrics_surface() {
  Builder b{grid_vars({{1, 1}, {1, 2}})};
  return b.done((b.v(1, 1) + b.v(1, 2)) *
                (b.c(1) + b.c(1) / b.v(1, 1) + b.c(1) / b.v(1, 2)).pow(2));
}

LaurentPolynomial fix_quadric_cubic() {
  Builder b{grid_vars({{1, 1}, {1, 2}, {2, 1}})};
  RF g = (b.v(2, 1).pow(2) + b.v(1, 1) * b.v(2, 1) + b.v(1, 1) + b.v(2, 1)) /
         (b.v(1, 1) * b.v(2, 1));
  return b.done(b.v(1, 1) / b.v(1, 2) * (b.v(1, 2) + g).pow(3));
}

LaurentPolynomial fix_x10() {
  Builder b{grid_vars({{1, 1}, {1, 2}, {2, 1}, {3, 1}})};
  return b.done(b.v(1, 2) + b.c(1) / b.v(2, 1) + b.c(1) / b.v(3, 1) +
                (b.v(1, 1) + b.v(2, 1) + b.v(3, 1) + b.c(1) / b.v(1, 2) +
                 b.v(3, 1) / (b.v(1, 2) * b.v(2, 1)))
                        .pow(2) /
                    b.v(1, 1));
}

LaurentPolynomial fix_v10() {
  Builder b{grid_vars({{1, 1}, {1, 2}, {3, 1}})};
  return b.done((b.v(3, 1) + b.v(1, 2) + b.c(1)) / b.v(1, 1) *
                (b.v(1, 1) + b.c(1) / b.v(3, 1) + b.c(1) + b.c(1) / b.v(1, 2) +
                 b.v(3, 1) / b.v(1, 2))
                    .pow(2));
}

LaurentPolynomial fix_x20() {
  Builder b{grid_vars({{1, 1}, {1, 2}, {2, 2}, {3, 1}})};
  RF inner = (b.c(1) + b.v(2, 2)) / b.v(3, 1) + b.v(2, 2) / b.v(1, 2);
  RF mid = b.v(3, 1) +
           (b.c(1) + b.v(1, 2) * b.v(2, 2) + b.v(2, 2)) / b.v(2, 2);
  return b.done((b.v(1, 1) + inner * mid.pow(2)).pow(2) / b.v(1, 1));
}

LaurentPolynomial fix_degree_56_fivefold() {
  Builder b{grid_vars({{1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}})};
  return b.done((b.v(1, 1) + b.v(1, 2) + b.v(3, 2) +
                 b.v(3, 2) / (b.v(2, 1) * b.v(3, 1))) *
                (b.c(1) + (b.v(2, 1) + b.v(3, 2) / (b.v(3, 1) * b.v(1, 2))) *
                              (b.v(3, 1) + b.c(1) / b.v(2, 1) +
                               b.c(1) / b.v(3, 2) + b.c(1) / b.v(1, 1))
                                  .pow(2))
                    .pow(2));
}

LaurentPolynomial fix_chart_quadric_cubic() {
  VarsPtr v = make_vars({"y_1_2", "y_2_2", "y_2_3"});
  Builder b{v};
  RF y12 = RF::variable(v, "y_1_2");
  RF y22 = RF::variable(v, "y_2_2");
  RF y23 = RF::variable(v, "y_2_3");
  return b.done((y12 + y22) / (y12 * y22 * y23) *
                (b.c(1) + y12 + y22 + y23).pow(3));
}

LaurentPolynomial fix_chart_x14() {
  VarsPtr v = make_vars({"x_1_4", "x_2_4", "y_2_2", "y_2_3"});
  Builder b{v};
  RF x14 = RF::variable(v, "x_1_4");
  RF x24 = RF::variable(v, "x_2_4");
  RF y22 = RF::variable(v, "y_2_2");
  RF y23 = RF::variable(v, "y_2_3");
  return b.done(x14 + x24 +
                (b.c(1) + y22) * (b.c(1) + y23) * (b.c(1) + y22 + y22 * y23) /
                    (y22 * y23 * x24) +
                (b.c(1) + y22) * (b.c(1) + y23) / x14);
}

NefPartition chart_x14_partition() {
  NefPartition p;
  p.E = {5, 6, 7, 8};
  p.Em = {{1}, {12}, {2, 9}, {3, 10}};
  p.sm = {1, 12, 2, 3};
  return p;
}

// The alternative quadric-surface elimination: starting from the original
// triplet, the 0-th horizontal basic block gives a_{1,1} = 1 and the
// vertical sink block gives a_{2,2} = 1; the mirror is the sum over the four
// surviving arrows.
LaurentPolynomial regenerate_quadric_surface_2() {
  Triplet t = build_initial_triplet(2, TripletKind::Original);
  Substitution bind;
  bind.target = grid_vars({{1, 2}, {2, 1}});
  bind.map.emplace(grid_var_name(1, 1), RF::constant(bind.target, Rational(1)));
  bind.map.emplace(grid_var_name(2, 2), RF::constant(bind.target, Rational(1)));
  const Arrow start{{0, 1}, {1, 1}};
  const Arrow sink{{2, 2}, {2, 3}};
  for (const Arrow& a : {start, sink}) {
    RF eq = (t.label(a.head) / t.label(a.tail)).substituted(bind);
    if (!eq.equals_constant(Rational(1)))
      throw invariant_error("block equation does not pull back to 1");
  }
  RF sum = RF::constant(bind.target, Rational(0));
  for (const Arrow& a : t.quiver.arrows)
    if (a != start && a != sink)
      sum = sum + (t.label(a.head) / t.label(a.tail)).substituted(bind);
  return sum.expect_laurent("alternative quadric-surface mirror");
}

std::vector<ExampleRecord> build_corpus() {
  auto G = [](int k, std::vector<int> d) {
    return ModelSpec::grassmannian(k, std::move(d));
  };
  std::vector<ExampleRecord> all;
  auto add = [&](std::string id, std::string title, ModelSpec spec,
                 std::string route, LaurentPolynomial mirror,
                 std::optional<NefPartition> partition = std::nullopt) {
    all.push_back(ExampleRecord{std::move(id), std::move(title),
                                std::move(spec), std::move(route),
                                std::move(partition), std::move(mirror)});
  };
  add("quadric-threefold", "quadric threefold: hyperplane section of G(2,4)",
      G(2, {1}), "main", fix_quadric_threefold());
  add("g25-two-hyperplanes",
      "index-3 fourfold: section of G(2,5) by two hyperplanes", G(3, {1, 1}),
      "main", fix_g25_two_hyperplanes());
  add("quadric-surface",
      "quadric surface: section of G(2,4) by two hyperplanes", G(2, {1, 1}),
      "main", fix_quadric_surface());
  add("quadric-surface-2",
      "quadric surface again, via the alternative block choice", G(2, {1, 1}),
      "special", fix_quadric_surface_2());
  add("degree-40-threefold",
      "index-2 threefold of degree 40: section of G(2,5) by three hyperplanes",
      G(3, {1, 1, 1}), "main", fix_degree_40());
  add("x14-fourfold",
      "index-2 fourfold: section of G(2,6) by four hyperplanes",
      G(4, {1, 1, 1, 1}), "main", fix_x14());
  add("index2-fivefold",
      "index-2 fivefold: section of G(2,7) by five hyperplanes",
      G(5, {1, 1, 1, 1, 1}), "main", fix_index2_fivefold());
  add("del-pezzo-5",
      "del Pezzo surface of degree 5: section of G(2,5) by four hyperplanes",
      G(3, {1, 1, 1, 1}), "main", fix_s5());
  add("v14-threefold",
      "degree-14 threefold: section of G(2,6) by five hyperplanes",
      G(4, {1, 1, 1, 1, 1}), "main", fix_v14());
  add("two-quadrics", "threefold intersection of two quadrics", G(2, {2}),
      "main", fix_two_quadrics());
  add("two-quadrics-surface",
      "surface cut by a quadric and a hyperplane in G(2,4)", G(2, {2, 1}),
      "main", fix_two_quadrics_surface());
  add("quadric-cubic", "threefold intersection of a quadric and a cubic",
      G(2, {3}), "main", fix_quadric_cubic());
  add("x10-fourfold",
      "degree-160 fourfold: section of G(2,5) by a quadric and a hyperplane",
      G(3, {2, 1}), "main", fix_x10());
  add("v10-threefold",
      "degree-10 threefold: section of G(2,5) by a quadric and two hyperplanes",
      G(3, {2, 1, 1}), "main", fix_v10());
  add("x20-fourfold", "degree-20 fourfold: section of G(2,5) by two quadrics",
      G(3, {2, 2}), "main", fix_x20());
  add("degree-56-fivefold",
      "degree-56 fivefold: section of G(2,6) by two quadrics and a hyperplane",
      G(4, {2, 2, 1}), "main", fix_degree_56_fivefold());
  add("chart-quadric-cubic",
      "quadric-cubic threefold via the nef-partition chart", G(2, {3}),
      "appendix", fix_chart_quadric_cubic());
  add("chart-x14-fourfold",
      "index-2 fourfold via the nef-partition chart", G(4, {1, 1, 1, 1}),
      "appendix", fix_chart_x14(), chart_x14_partition());
  std::sort(all.begin(), all.end(),
            [](const ExampleRecord& a, const ExampleRecord& b) {
              return a.id < b.id;
            });
  return all;
}

}  // namespace

const std::vector<ExampleRecord>& corpus() {
  static const std::vector<ExampleRecord> all = build_corpus();
  return all;
}

const ExampleRecord& find_example(const std::string& id) {
  for (const ExampleRecord& r : corpus())
    if (r.id == id) return r;
  throw input_error("no example with id " + id);
}

LaurentPolynomial regenerate(const ExampleRecord& r, bool strict) {
  if (r.route == "main") {
    TransformOptions opts;
    opts.strict = strict;
    return run_main_theorem(r.spec.size, r.spec.degrees, opts).result;
  }
  if (r.route == "appendix")
    return run_appendix(r.spec.size, r.spec.degrees, r.partition);
  if (r.route == "special") return regenerate_quadric_surface_2();
  throw input_error("unknown route " + r.route);
}

nlohmann::json example_to_json(const ExampleRecord& r) {
  nlohmann::json j{{"id", r.id},
                   {"title", r.title},
                   {"spec", spec_to_json(r.spec)},
                   {"route", r.route},
                   {"variables", r.mirror.vars()->names()},
                   {"terms", r.mirror.term_count()},
                   {"mirror", to_text(r.mirror)}};
  if (r.partition) j["partition"] = partition_to_json(*r.partition);
  return j;
}

}  // namespace lgm
