#include "tornheim/pfd/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tornheim/arith/bernoulli.hpp"
#include "tornheim/constants/format.hpp"
#include "tornheim/error.hpp"

namespace tornheim::pfd {
using tornheim::to_string;

namespace {

using arith::binomial;
using Poly = std::map<std::pair<int, int>, Rational>;  // (deg m, deg n) -> coeff

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly form_power(const LinearForm& f, int e) {
  Poly out;
  for (int j = 0; j <= e; ++j) {
    Rational c = Rational(binomial(e, j)) * pow(Rational(f.cm), j) * pow(Rational(f.cn), e - j);
    if (c != 0) out[{j, e - j}] = c;
  }
  return out;
}

// Numerator of sum(terms) over prod_f f^denominator[f].
Poly numerator(const TermSum& s, const std::map<LinearForm, int>& denominator) {
  Poly total;
  for (const auto& t : s.terms) {
    Poly p{{{0, 0}, t.coefficient}};
    for (const auto& [f, e] : denominator) {
      const int missing = e - t.exponent(f);
      if (missing > 0) p = poly_mul(p, form_power(f, missing));
    }
    for (const auto& [k, c] : p) total[k] += c;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

void add_exponent(std::map<LinearForm, int>& exps, const LinearForm& f, int e) {
  if (e > 0) exps[f] += e;
}

}  // namespace

std::pair<Rational, LinearForm> LinearForm::make(long cm, long cn) {
  if (cm < 0 || cn < 0 || (cm == 0 && cn == 0))
    throw UsageError("linear form needs nonnegative coefficients, not both zero");
  const long g = std::gcd(cm, cn);
  return {Rational(g), LinearForm{cm / g, cn / g}};
}

std::string to_string(const LinearForm& f) {
  auto part = [](long c, const char* sym) { return c == 1 ? std::string(sym) : std::to_string(c) + sym; };
  if (f.cn == 0) return part(f.cm, "m");
  if (f.cm == 0) return part(f.cn, "n");
  return part(f.cm, "m") + "+" + part(f.cn, "n");
}

int TermProduct::weight() const {
  int w = 0;
  for (const auto& [f, e] : exponents) w += e;
  return w;
}

int TermProduct::exponent(const LinearForm& f) const {
  auto it = exponents.find(f);
  return it == exponents.end() ? 0 : it->second;
}

std::vector<LinearForm> TermProduct::non_basis_forms() const {
  std::vector<LinearForm> out;
  for (const auto& [f, e] : exponents)
    if (!f.is_basis() && e > 0) out.push_back(f);
  return out;
}

TermProduct make_term(const Rational& coefficient, const std::vector<std::pair<std::pair<long, long>, int>>& factors) {
  TermProduct t;
  t.coefficient = coefficient;
  for (const auto& [cf, e] : factors) {
    if (e < 1) throw UsageError("form exponents must be positive");
    auto [scale, f] = LinearForm::make(cf.first, cf.second);
    t.coefficient /= pow(scale, e);
    t.exponents[f] += e;
  }
  return t;
}

TermSum TermSum::normalized() const {
  std::map<std::map<LinearForm, int>, Rational> merged;
  for (const auto& t : terms) merged[t.exponents] += t.coefficient;
  TermSum out;
  for (auto& [exps, c] : merged)
    if (c != 0) out.terms.push_back({c, exps});
  return out;
}

bool Relation::holds(const LinearForm& u, const LinearForm& w) const {
  if (alpha == 0 || beta == 0 || c <= 0) return false;
  return alpha * u.cm + beta * w.cm == c * v.cm && alpha * u.cn + beta * w.cn == c * v.cn;
}

TermSum split_pair(const TermProduct& t, const LinearForm& u, const LinearForm& w, const Relation& rel) {
  if (u == w) throw DomainError("split_pair needs two distinct forms");
  if (!rel.holds(u, w))
    throw DomainError("relation does not hold: " + to_string(rel.alpha) + "(" + to_string(u) + ") + " +
                      to_string(rel.beta) + "(" + to_string(w) + ") != " + to_string(rel.c) + "(" +
                      to_string(rel.v) + ")");
  const int r = t.exponent(u);
  const int s = t.exponent(w);
  if (r < 1 || s < 1) throw DomainError("split_pair: term lacks one of the forms");

  std::map<LinearForm, int> rest = t.exponents;
  rest.erase(u);
  rest.erase(w);
  const Rational scale = t.coefficient * pow(rel.alpha, r) * pow(rel.beta, s);

  TermSum out;
  for (int p = 1; p < r + s; ++p) {
    const int q = r + s - p;
    const Rational cp = pow(rel.c, -p);
    const BigInt bu = binomial(p - 1, s - 1);
    const BigInt bw = binomial(p - 1, r - 1);
    if (bu != 0) {
      TermProduct nt{scale * cp * Rational(bu) * pow(rel.alpha, -q), rest};
      add_exponent(nt.exponents, rel.v, p);
      add_exponent(nt.exponents, u, q);
      out.terms.push_back(std::move(nt));
    }
    if (bw != 0) {
      TermProduct nt{scale * cp * Rational(bw) * pow(rel.beta, -q), rest};
      add_exponent(nt.exponents, rel.v, p);
      add_exponent(nt.exponents, w, q);
      out.terms.push_back(std::move(nt));
    }
  }
  return out;
}

bool verify_step(const TermSum& before, const TermSum& after) {
  std::map<LinearForm, int> denominator;
  for (const auto* s : {&before, &after})
    for (const auto& t : s->terms)
      for (const auto& [f, e] : t.exponents) denominator[f] = std::max(denominator[f], e);
  return numerator(before, denominator) == numerator(after, denominator);
}

const std::vector<LinearForm>& g2_forms() {
  static const std::vector<LinearForm> forms{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  return forms;
}

std::optional<Relation> g2_relation(const LinearForm& u, const LinearForm& w) {
  static const std::map<std::pair<LinearForm, LinearForm>, Relation> table{
      {{{1, 1}, {1, 2}}, {2, -1, 1, LinearForm::m()}},
      {{{1, 1}, {1, 3}}, {3, -1, 2, LinearForm::m()}},
      {{{1, 2}, {1, 3}}, {3, -2, 1, LinearForm::m()}},
      {{{1, 1}, {2, 3}}, {3, -1, 1, LinearForm::m()}},
      {{{1, 2}, {2, 3}}, {-3, 2, 1, LinearForm::m()}},
      {{{1, 3}, {2, 3}}, {-1, 1, 1, LinearForm::m()}},
  };
  auto it = table.find({u, w});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

TermSum reduce_to_tornheim(const TermSum& input, const ReduceOptions& options) {
  const auto& forms = g2_forms();
  int max_weight = 0;
  for (const auto& t : input.terms) {
    for (const auto& [f, e] : t.exponents)
      if (e > 0 && std::find(forms.begin(), forms.end(), f) == forms.end())
        throw DomainError("unsupported form system: " + to_string(f) + " is not a G2 form");
    if (t.exponent(LinearForm::m()) < 1 || t.exponent(LinearForm::n()) < 1)
      throw DomainError("unsupported form system: every term needs m and n");
    max_weight = std::max(max_weight, t.weight());
  }
  // Each step removes one non-basis form from a term, so 4^weight is generous.
  const double watchdog = std::pow(4.0, max_weight) * static_cast<double>(std::max<std::size_t>(1, input.terms.size()));

  std::vector<TermProduct> work(input.terms.rbegin(), input.terms.rend());
  TermSum done;
  double steps = 0;
  while (!work.empty()) {
    TermProduct t = std::move(work.back());
    work.pop_back();
    const auto nb = t.non_basis_forms();
    if (nb.size() <= 1) {
      done.terms.push_back(std::move(t));
      continue;
    }
    if (++steps > watchdog) throw DomainError("pfd reduction exceeded its step bound");
    const LinearForm u = nb[0];
    const LinearForm w = nb[1];
    const Relation rel = *g2_relation(u, w);
    TermSum produced = split_pair(t, u, w, rel);
    if (options.verify_steps && !verify_step(TermSum{{t}}, produced))
      throw VerificationFailure("pfd step failed exact verification at " + to_string(u) + ", " + to_string(w));
    if (options.trace != nullptr) options.trace->steps.push_back({t, u, w, rel, produced});
    for (auto it = produced.terms.rbegin(); it != produced.terms.rend(); ++it) work.push_back(std::move(*it));
  }
  return done.normalized();
}

std::vector<TornheimTerm> as_tornheim_terms(const TermSum& reduced) {
  std::vector<TornheimTerm> out;
  for (const auto& t : reduced.terms) {
    const auto nb = t.non_basis_forms();
    const int em = t.exponent(LinearForm::m());
    const int en = t.exponent(LinearForm::n());
    if (nb.size() != 1 || em < 1 || en < 1 || t.exponents.size() != 3)
      throw DomainError("term is not of the form m^-k1 n^-k2 (am+bn)^-k3");
    const LinearForm& L = nb[0];
    out.push_back({t.coefficient, static_cast<int>(L.cm), static_cast<int>(L.cn), em, en, t.exponent(L)});
  }
  return out;
}

nlohmann::json to_json(const LinearForm& f) { return {{"m", f.cm}, {"n", f.cn}, {"text", to_string(f)}}; }

nlohmann::json to_json(const TermProduct& t) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [f, e] : t.exponents) factors.push_back({{"form", to_json(f)}, {"exponent", e}});
  return {{"coefficient", sym::to_json(t.coefficient)}, {"factors", factors}};
}

nlohmann::json to_json(const TermSum& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : s.terms) out.push_back(to_json(t));
  return out;
}

nlohmann::json to_json(const ReductionTrace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    out.push_back({{"before", to_json(step.before)},
                   {"u", to_json(step.u)},
                   {"w", to_json(step.w)},
                   {"relation",
                    {{"alpha", sym::to_json(step.relation.alpha)},
                     {"beta", sym::to_json(step.relation.beta)},
                     {"c", sym::to_json(step.relation.c)},
                     {"v", to_json(step.relation.v)}}},
                   {"after", to_json(step.after)}});
  }
  return out;
}

nlohmann::json to_json(const TornheimTerm& t) {
  return {{"coefficient", sym::to_json(t.coefficient)}, {"a", t.a}, {"b", t.b}, {"k", {t.k1, t.k2, t.k3}}};
}

}  // namespace tornheim::pfd
