#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tornheim/constants/symbolic.hpp"
#include "tornheim/g2/evaluate.hpp"
#include "tornheim/numeric/check.hpp"
#include "tornheim/parity/engine.hpp"

namespace tornheim::io {

inline constexpr const char* kVersion = "0.1.0";

enum class Basis { Clausen, Dirichlet };

Basis parse_basis(const std::string& name);
std::string basis_name(Basis b);

/// One result as emitted by the command-line tool.
struct OutputRecord {
  std::string command;
  nlohmann::json request;
  std::map<std::string, sym::SymbolicValue> results;  // keyed by basis name
  std::optional<numeric::NumericCheckRecord> check;
  nlohmann::json reduction;  // null unless requested
  std::optional<std::string> error;
  std::string version = kVersion;
  std::string ruleset_hash;

  bool verified() const { return check.has_value() && check->pass; }
  bool failed() const { return error.has_value() || (check.has_value() && !check->pass); }
  friend bool operator==(const OutputRecord&, const OutputRecord&);
};

/// Serializes results with their text and LaTeX renderings; the renderings
/// are regenerated on read, so the round trip is lossless.
nlohmann::json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);

/// Closed form of zeta_{a,b}(k1,k2,k3), optionally checked against the
/// lattice sum. Throws UsageError for even weight.
OutputRecord eval_record(const parity::EvalRequest& req, Basis basis, bool verify, const numeric::Precision& prec);

/// evaluate_g2 packaged as a record with both bases; the reduction list and
/// step trace are attached when show_reduction is set.
OutputRecord g2_record(const g2::G2Request& req, bool show_reduction, const numeric::Precision& prec);

/// All compositions k1+k2+k3 = weight, lexicographic, for each pair.
std::vector<parity::EvalRequest> table_requests(int weight, const std::vector<std::pair<int, int>>& pairs);

/// Verified records for every request, computed in parallel and handed to
/// `emit` in request order. Failures are recorded per record, never thrown.
void table_records(const std::vector<parity::EvalRequest>& requests, Basis basis, const numeric::Precision& prec,
                   const std::function<void(const OutputRecord&)>& emit);

}  // namespace tornheim::io
