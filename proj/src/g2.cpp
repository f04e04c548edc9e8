#include "tornheim/g2/evaluate.hpp"

#include <numeric>
#include <string>

#include "tornheim/constants/format.hpp"
#include "tornheim/constants/reduce.hpp"
#include "tornheim/error.hpp"
#include "tornheim/numeric/special.hpp"
#include "tornheim/parity/engine.hpp"

namespace tornheim::g2 {

int G2Request::weight() const { return std::accumulate(k.begin(), k.end(), 0); }

void G2Request::validate() const {
  for (int v : k)
    if (v < 1) throw UsageError("G2 exponents k1..k6 must all be positive integers");
  if (weight() % 2 == 0)
    throw UsageError("weight must be odd: the parity theorem applies to odd weight only (got weight " +
                     std::to_string(weight()) + ")");
}

pfd::TermProduct G2Request::as_term() const {
  const auto& forms = pfd::g2_forms();
  pfd::TermProduct t;
  for (std::size_t i = 0; i < forms.size(); ++i) t.exponents[forms[i]] = k[i];
  return t;
}

G2ClosedForm evaluate_g2(const G2Request& req, const numeric::Precision& prec) {
  req.validate();
  prec.validate();
  G2ClosedForm out;
  out.request = req;

  const pfd::TermSum reduced = pfd::reduce_to_tornheim(pfd::TermSum{{req.as_term()}}, {true, &out.trace});
  out.terms = pfd::as_tornheim_terms(reduced);

  const int count = static_cast<int>(out.terms.size());
  std::vector<sym::SymbolicValue> parts(count);
  // Warm the coefficient caches serially so worker threads only read them.
  for (const auto& t : out.terms) parity::closed_form({t.a, t.b, t.k1, t.k2, t.k3});
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const auto& t = out.terms[i];
    parts[i] = parity::closed_form({t.a, t.b, t.k1, t.k2, t.k3}) * t.coefficient;
  }
  for (const auto& p : parts) out.clausen += p;
  out.dirichlet = sym::to_dirichlet_basis(out.clausen, req.weight());

  const numeric::LatticeResult oracle = numeric::eval_g2_series(req.k, prec);
  out.check = numeric::make_check(numeric::eval_symbolic(out.clausen, prec), oracle, prec);
  out.dirichlet_check = numeric::make_check(numeric::eval_symbolic(out.dirichlet, prec), oracle, prec);
  if (!out.check.pass || !out.dirichlet_check.pass)
    throw VerificationFailure("G2 closed form disagrees with the lattice sum: " + out.check.lhs + " vs " +
                              out.check.rhs);
  return out;
}

nlohmann::json to_json(const G2ClosedForm& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.terms) terms.push_back(pfd::to_json(t));
  return {{"request", {{"k", r.request.k}, {"weight", r.request.weight()}}},
          {"clausen", {{"value", sym::to_json(r.clausen)}, {"text", sym::to_text(r.clausen)}, {"latex", sym::to_latex(r.clausen)}}},
          {"dirichlet",
           {{"value", sym::to_json(r.dirichlet)}, {"text", sym::to_text(r.dirichlet)}, {"latex", sym::to_latex(r.dirichlet)}}},
          {"reduction", terms},
          {"check", numeric::to_json(r.check)},
          {"dirichlet_check", numeric::to_json(r.dirichlet_check)}};
}

}  // namespace tornheim::g2
