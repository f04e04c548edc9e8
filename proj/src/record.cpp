#include "tornheim/io/record.hpp"

#include "tornheim/constants/format.hpp"
#include "tornheim/constants/reduce.hpp"
#include "tornheim/error.hpp"
#include "tornheim/numeric/lattice.hpp"
#include "tornheim/numeric/special.hpp"

namespace tornheim::io {
namespace {

nlohmann::json eval_request_json(const parity::EvalRequest& req) {
  return {{"a", req.a}, {"b", req.b}, {"k", {req.k1, req.k2, req.k3}}, {"weight", req.weight()}};
}

sym::SymbolicValue in_basis(const sym::SymbolicValue& v, Basis basis, int weight) {
  return basis == Basis::Dirichlet ? sym::to_dirichlet_basis(v, weight) : v;
}

}  // namespace

Basis parse_basis(const std::string& name) {
  if (name == "clausen") return Basis::Clausen;
  if (name == "dirichlet") return Basis::Dirichlet;
  throw UsageError("unknown basis '" + name + "' (expected clausen or dirichlet)");
}

std::string basis_name(Basis b) { return b == Basis::Clausen ? "clausen" : "dirichlet"; }

bool operator==(const OutputRecord& a, const OutputRecord& b) {
  return to_json(a) == to_json(b);
}

nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json results = nlohmann::json::object();
  for (const auto& [basis, v] : r.results)
    results[basis] = {{"value", sym::to_json(v)}, {"text", sym::to_text(v)}, {"latex", sym::to_latex(v)}};
  nlohmann::json out{{"command", r.command},
                     {"request", r.request},
                     {"results", results},
                     {"check", r.check ? numeric::to_json(*r.check) : nlohmann::json()},
                     {"reduction", r.reduction},
                     {"error", r.error ? nlohmann::json(*r.error) : nlohmann::json()},
                     {"version", r.version},
                     {"ruleset_hash", r.ruleset_hash}};
  return out;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.request = j.at("request");
  for (const auto& [basis, entry] : j.at("results").items()) r.results[basis] = sym::symbolic_from_json(entry.at("value"));
  if (!j.at("check").is_null()) r.check = numeric::check_from_json(j.at("check"));
  r.reduction = j.at("reduction");
  if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.ruleset_hash = j.at("ruleset_hash").get<std::string>();
  return r;
}

OutputRecord eval_record(const parity::EvalRequest& req, Basis basis, bool verify, const numeric::Precision& prec) {
  req.validate();
  OutputRecord r;
  r.command = "eval";
  r.request = eval_request_json(req);
  r.ruleset_hash = sym::ruleset_hash();
  const sym::SymbolicValue value = parity::closed_form(req);
  r.results[basis_name(basis)] = in_basis(value, basis, req.weight());
  if (verify) {
    const auto oracle = numeric::eval_tornheim(req.a, req.b, req.k1, req.k2, req.k3, prec);
    r.check = numeric::make_check(numeric::eval_symbolic(value, prec), oracle, prec);
  }
  return r;
}

OutputRecord g2_record(const g2::G2Request& req, bool show_reduction, const numeric::Precision& prec) {
  OutputRecord r;
  r.command = "g2";
  r.request = {{"k", req.k}, {"weight", req.weight()}};
  r.ruleset_hash = sym::ruleset_hash();
  const g2::G2ClosedForm cf = g2::evaluate_g2(req, prec);
  r.results["clausen"] = cf.clausen;
  r.results["dirichlet"] = cf.dirichlet;
  r.check = cf.check;
  if (show_reduction) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : cf.terms) terms.push_back(pfd::to_json(t));
    r.reduction = {{"terms", terms}, {"steps", pfd::to_json(cf.trace)}};
  }
  return r;
}

std::vector<parity::EvalRequest> table_requests(int weight, const std::vector<std::pair<int, int>>& pairs) {
  if (weight < 3) throw UsageError("table weight must be at least 3");
  if (weight % 2 == 0) throw UsageError("weight must be odd: the parity theorem applies to odd weight only");
  std::vector<parity::EvalRequest> out;
  for (const auto& [a, b] : pairs)
    for (int k1 = 1; k1 <= weight - 2; ++k1)
      for (int k2 = 1; k1 + k2 <= weight - 1; ++k2) out.push_back({a, b, k1, k2, weight - k1 - k2});
  return out;
}

void table_records(const std::vector<parity::EvalRequest>& requests, Basis basis, const numeric::Precision& prec,
                   const std::function<void(const OutputRecord&)>& emit) {
  const int count = static_cast<int>(requests.size());
  // Workers cannot change the process-wide precision; fix the largest one
  // they need before the region.
  numeric::PrecisionScope scope(prec.digits + numeric::kGuardDigits);
#pragma omp parallel for ordered schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    OutputRecord r;
    try {
      r = eval_record(requests[i], basis, true, prec);
    } catch (const std::exception& e) {
      r.command = "eval";
      r.request = eval_request_json(requests[i]);
      r.ruleset_hash = sym::ruleset_hash();
      r.error = e.what();
    }
#pragma omp ordered
    emit(r);
  }
}

}  // namespace tornheim::io
