#include "lgm/io.hpp"

#include <cctype>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "lgm/errors.hpp"

namespace lgm {
namespace {

std::string render_term(const VariableSet& vars, const Term& t, bool fold_sign) {
  Rational c = fold_sign && t.coeff.sgn() < 0 ? -t.coeff : t.coeff;
  std::string body;
  for (std::size_t i = 0; i < t.exps.size(); ++i) {
    if (t.exps[i] == 0) continue;
    if (!body.empty()) body += "*";
    body += vars.name(i);
    if (t.exps[i] != 1) body += "^" + std::to_string(t.exps[i]);
  }
  if (body.empty()) return c.str();
  if (c.is_one()) return body;
  if ((-c).is_one()) return "-" + body;
  return c.str() + "*" + body;
}

}  // namespace

std::string to_text(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    const Term& t = p.terms()[i];
    if (i == 0) {
      out = render_term(*p.vars(), t, false);
    } else {
      out += t.coeff.sgn() < 0 ? " - " : " + ";
      out += render_term(*p.vars(), t, true);
    }
  }
  return out;
}

std::string to_text(const RationalFunction& r) {
  if (r.den().is_constant() && r.den().constant_coefficient().is_one())
    return to_text(r.num());
  return "(" + to_text(r.num()) + ")/(" + to_text(r.den()) + ")";
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string_view digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw input_error("expected digits at offset " + std::to_string(start));
    return s.substr(start, pos - start);
  }
  std::string_view name() {
    skip_ws();
    std::size_t start = pos;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos >= s.size() || !head(s[pos]))
      throw input_error("expected a variable name at offset " + std::to_string(start));
    ++pos;
    while (pos < s.size() && tail(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }
  int integer() {
    skip_ws();
    bool neg = eat('-');
    long v = 0;
    for (char c : digits()) v = v * 10 + (c - '0');
    return static_cast<int>(neg ? -v : v);
  }
};

struct RawTerm {
  std::map<std::string, int> exps;
  Rational coeff{1};
};

std::vector<RawTerm> parse_raw(std::string_view text) {
  Lexer lx{text};
  std::vector<RawTerm> terms;
  bool negate = lx.eat('-');
  while (true) {
    RawTerm t;
    if (negate) t.coeff = Rational(-1);
    while (true) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num(lx.digits());
        std::string lit = num;
        if (lx.eat('/')) lit += "/" + std::string(lx.digits());
        t.coeff *= Rational(lit);
      } else {
        std::string v(lx.name());
        int e = lx.eat('^') ? lx.integer() : 1;
        t.exps[v] += e;
      }
      if (!lx.eat('*')) break;
    }
    terms.push_back(std::move(t));
    if (lx.done()) break;
    if (lx.eat('+'))
      negate = false;
    else if (lx.eat('-'))
      negate = true;
    else
      throw input_error("unexpected character at offset " + std::to_string(lx.pos));
  }
  return terms;
}

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, VarsPtr vars) {
  std::vector<RawTerm> raw = parse_raw(text);
  if (!vars) {
    std::set<std::string> names;
    for (const auto& t : raw)
      for (const auto& [n, e] : t.exps) names.insert(n);
    vars = make_vars({names.begin(), names.end()});
  }
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (auto& t : raw) {
    Exps e(vars->size(), 0);
    for (const auto& [n, x] : t.exps) e[vars->index_of(n)] += x;
    terms.push_back({std::move(e), std::move(t.coeff)});
  }
  return LaurentPolynomial::from_terms(std::move(vars), std::move(terms));
}

nlohmann::json laurent_to_json(const LaurentPolynomial& p) {
  nlohmann::json j;
  j["variables"] = p.vars()->names();
  j["terms"] = nlohmann::json::array();
  for (const auto& t : p.terms())
    j["terms"].push_back({{"coeff", t.coeff.str()}, {"exps", t.exps}});
  return j;
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("terms"))
    throw input_error("polynomial JSON must have 'variables' and 'terms'");
  VarsPtr vars = make_vars(j["variables"].get<std::vector<std::string>>());
  std::vector<Term> terms;
  for (const auto& jt : j["terms"]) {
    Term t{jt.at("exps").get<Exps>(), Rational(jt.at("coeff").get<std::string>())};
    if (t.exps.size() != vars->size()) throw input_error("exps arity mismatch in JSON");
    terms.push_back(std::move(t));
  }
  return LaurentPolynomial::from_terms(std::move(vars), std::move(terms));
}

nlohmann::json ratfun_to_json(const RationalFunction& r) {
  return {{"num", laurent_to_json(r.num())}, {"den", laurent_to_json(r.den())}};
}

}  // namespace lgm
