// lgm: build Landau-Ginzburg mirror potentials for Fano complete
// intersections in G(2,k+2) or P^N and check them against the I-series.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lgm/corpus.hpp"
#include "lgm/errors.hpp"
#include "lgm/io.hpp"
#include "lgm/iseries.hpp"
#include "lgm/model_spec.hpp"
#include "lgm/newton.hpp"
#include "lgm/transform.hpp"

namespace {

using namespace lgm;

struct Options {
  int k = 0;
  int projective_n = 0;
  std::vector<int> degrees;
  std::string method = "main";
  std::string format = "text";
  std::string dump_pipeline;
  int terms = 0;
  bool strict = false;
  std::string example_id;
  bool all_examples = false;
};

void add_spec_options(CLI::App* cmd, Options& o, bool with_method) {
  cmd->add_option("--k", o.k, "Grassmannian parameter: the ambient is G(2,k+2)");
  cmd->add_option("--projective", o.projective_n,
                  "use the ambient P^N instead of a Grassmannian");
  cmd->add_option("--degrees", o.degrees,
                  "hypersurface degrees, comma separated (empty: the ambient)")
      ->delimiter(',');
  if (with_method)
    cmd->add_option("--method", o.method, "construction to run")
        ->check(CLI::IsMember({"main", "appendix", "closed-form"}));
}

// --terms counts coefficients; the library truncation order is one less.
int order_from(const Options& o) { return o.terms > 0 ? o.terms - 1 : 0; }

ModelSpec spec_from(const Options& o) {
  if (o.k > 0 && o.projective_n > 0)
    throw input_error("give either --k or --projective, not both");
  if (o.projective_n > 0)
    return ModelSpec::projective(o.projective_n, o.degrees);
  if (o.k > 0) return ModelSpec::grassmannian(o.k, o.degrees);
  throw input_error("one of --k or --projective is required");
}

std::string series_text(const Series& s) {
  std::string out;
  for (int j = 0; j <= s.order; ++j) {
    if (j) out += ",";
    out += s.at(j).str();
  }
  return out;
}

void emit(const Options& o, const nlohmann::json& j,
          const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_generate(const Options& o) {
  ModelSpec spec = spec_from(o);
  PeriodMethod method = parse_method(o.method);
  LaurentPolynomial f = LaurentPolynomial::zero(make_vars({}));
  if (!o.dump_pipeline.empty()) {
    if (spec.ambient != ModelSpec::Ambient::Grassmannian ||
        method != PeriodMethod::Main)
      throw input_error(
          "--dump-pipeline records the main Grassmannian pipeline only");
    TransformOptions topts;
    topts.strict = o.strict;
    PipelineTrace trace = run_main_theorem(spec.size, spec.degrees, topts);
    std::ofstream out(o.dump_pipeline);
    if (!out) throw input_error("cannot write " + o.dump_pipeline);
    out << trace_to_json(trace).dump(2) << "\n";
    f = trace.result;
  } else {
    f = mirror_for(spec, method, o.strict);
  }
  nlohmann::json j{{"spec", spec_to_json(spec)},
                   {"method", method_name(method)},
                   {"variables", f.vars()->names()},
                   {"terms", f.term_count()},
                   {"mirror", to_text(f)}};
  emit(o, j, to_text(f) + "\n");
  return 0;
}

int cmd_iseries(const Options& o) {
  ModelSpec spec = spec_from(o);
  int n = o.terms > 0 ? o.terms - 1 : 8;
  Series s = spec.ambient == ModelSpec::Ambient::Grassmannian
                 ? grassmannian_iseries(spec, n)
                 : projective_ci_iseries(spec, n);
  nlohmann::json j{{"spec", spec_to_json(spec)},
                   {"terms", n},
                   {"coefficients", series_to_json(s)}};
  emit(o, j, series_text(s) + "\n");
  return 0;
}

std::string report_text(const PeriodReport& r) {
  std::string out;
  out += "spec:    " + r.spec.describe() + "\n";
  out += "method:  " + method_name(r.method) + "\n";
  out += "period:  " + series_text(r.period) + "\n";
  out += "iseries: " + series_text(r.iseries) + "\n";
  if (r.alpha) out += "alpha:   " + r.alpha->str() + "\n";
  for (int j : r.mismatches)
    out += "mismatch at t^" + std::to_string(j) + ": period " +
           r.period.at(j).str() + ", expected " + r.iseries.at(j).str() + "\n";
  out += std::string("verdict: ") + (r.pass ? "pass" : "fail") + "\n";
  return out;
}

int cmd_period_check(const Options& o) {
  ModelSpec spec = spec_from(o);
  PeriodReport r = check_period_condition(spec, parse_method(o.method),
                                          order_from(o), o.strict);
  emit(o, report_to_json(r), report_text(r));
  return r.pass ? 0 : 1;
}

int cmd_compare_methods(const Options& o) {
  ModelSpec spec = spec_from(o);
  PeriodReport a =
      check_period_condition(spec, PeriodMethod::Main, order_from(o), o.strict);
  PeriodReport b =
      check_period_condition(spec, PeriodMethod::Appendix, order_from(o), o.strict);
  bool agree = a.period == b.period;
  bool pass = agree && a.pass && b.pass;
  nlohmann::json j{{"spec", spec_to_json(spec)},
                   {"main", report_to_json(a)},
                   {"appendix", report_to_json(b)},
                   {"agree", agree},
                   {"verdict", pass ? "pass" : "fail"}};
  std::string text;
  text += "spec:     " + spec.describe() + "\n";
  text += "main:     " + series_text(a.period) + "\n";
  text += "appendix: " + series_text(b.period) + "\n";
  text += "iseries:  " + series_text(a.iseries) + "\n";
  text += std::string("methods ") + (agree ? "agree" : "disagree") + "\n";
  text += std::string("verdict:  ") + (pass ? "pass" : "fail") + "\n";
  emit(o, j, text);
  return pass ? 0 : 1;
}

int cmd_newton(const Options& o) {
  LaurentPolynomial f = LaurentPolynomial::zero(make_vars({}));
  if (!o.example_id.empty())
    f = find_example(o.example_id).mirror;
  else
    f = mirror_for(spec_from(o), parse_method(o.method), o.strict);
  Polytope p = newton_polytope(f);
  bool interior = origin_in_interior(p);
  nlohmann::json j{{"variables", f.vars()->names()},
                   {"vertices", p},
                   {"origin_interior", interior}};
  std::string text = "variables:";
  for (const std::string& name : f.vars()->names()) text += " " + name;
  text += "\nvertices (" + std::to_string(p.size()) + "):\n";
  for (const Exps& v : p) {
    text += " ";
    for (int e : v) text += " " + std::to_string(e);
    text += "\n";
  }
  text += std::string("origin interior: ") + (interior ? "yes" : "no") + "\n";
  emit(o, j, text);
  return 0;
}

int cmd_examples(const Options& o) {
  if (o.all_examples != o.example_id.empty())
    throw input_error("give exactly one of --id or --all");
  std::vector<const ExampleRecord*> selected;
  if (o.all_examples)
    for (const ExampleRecord& r : corpus()) selected.push_back(&r);
  else
    selected.push_back(&find_example(o.example_id));
  nlohmann::json arr = nlohmann::json::array();
  std::string text;
  int failures = 0;
  for (const ExampleRecord* r : selected) {
    auto t0 = std::chrono::steady_clock::now();
    LaurentPolynomial regen = regenerate(*r, o.strict);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool ok = regen.vars()->names() == r->mirror.vars()->names() &&
              regen == r->mirror;
    failures += !ok;
    arr.push_back({{"id", r->id},
                   {"title", r->title},
                   {"route", r->route},
                   {"terms", r->mirror.term_count()},
                   {"milliseconds", ms},
                   {"verdict", ok ? "pass" : "fail"}});
    text += std::string(ok ? "pass" : "FAIL") + "  " + r->id + " (" +
            std::to_string(r->mirror.term_count()) + " terms, " +
            std::to_string(ms) + "ms)\n";
  }
  text += std::to_string(selected.size() - failures) + "/" +
          std::to_string(selected.size()) + " pass\n";
  emit(o, arr, text);
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Laurent-polynomial Landau-Ginzburg mirrors for Fano complete "
      "intersections in Grassmannians of planes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dump-pipeline", o.dump_pipeline,
                 "write the elimination steps as JSON to this path");
  app.add_option("--terms", o.terms, "number of series coefficients");
  app.add_flag("--strict-verify", o.strict,
               "re-certify every elimination step from scratch");
  app.fallthrough();

  CLI::App* generate =
      app.add_subcommand("generate", "construct a mirror potential");
  add_spec_options(generate, o, true);
  CLI::App* iseries =
      app.add_subcommand("iseries", "print the regularized I-series");
  add_spec_options(iseries, o, false);
  CLI::App* period = app.add_subcommand(
      "period-check", "compare the mirror's main period with the I-series");
  add_spec_options(period, o, true);
  CLI::App* compare = app.add_subcommand(
      "compare-methods",
      "run the main and appendix constructions and compare their periods");
  add_spec_options(compare, o, false);
  CLI::App* newton = app.add_subcommand(
      "newton", "Newton polytope of a mirror potential");
  add_spec_options(newton, o, true);
  newton->add_option("--example", o.example_id,
                     "take the mirror from this corpus entry");
  CLI::App* examples = app.add_subcommand(
      "examples", "regenerate stored corpus entries and compare");
  examples->add_option("--id", o.example_id, "corpus entry to run");
  examples->add_flag("--all", o.all_examples, "run the whole corpus");

  try {
    app.parse(argc, argv);
    if (generate->parsed()) return cmd_generate(o);
    if (iseries->parsed()) return cmd_iseries(o);
    if (period->parsed()) return cmd_period_check(o);
    if (compare->parsed()) return cmd_compare_methods(o);
    if (newton->parsed()) return cmd_newton(o);
    if (examples->parsed()) return cmd_examples(o);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const verify_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const invariant_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
}
